#include <string>

#include <json.hpp>

#include "biblio/ingest.hpp"
#include "ingest_detail.hpp"

namespace biblio {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct JsonCursor {
    std::vector<Issue>* errors;

    void error(std::string message, const std::string& path) {
        errors->push_back({Severity::error, std::move(message), path});
    }

    // Returns the field as its raw-batch string form, or nullopt and an
    // error. `kind` names the expected JSON type.
    enum class Field { string, integer, boolean, opt_integer };

    std::optional<std::string> take(const json& object, const char* key, Field kind,
                                    const std::string& path) {
        auto it = object.find(key);
        if (it == object.end() || it->is_null()) {
            if (kind == Field::opt_integer) return std::string();
            error("missing key " + path + "." + key, path);
            return std::nullopt;
        }
        const json& value = *it;
        switch (kind) {
            case Field::string:
                if (!value.is_string()) {
                    error("wrong type at " + path + "." + key + ": expected string", path);
                    return std::nullopt;
                }
                return value.get<std::string>();
            case Field::integer:
            case Field::opt_integer:
                if (!value.is_number_integer()) {
                    error("wrong type at " + path + "." + key + ": expected integer", path);
                    return std::nullopt;
                }
                return std::to_string(value.get<long long>());
            case Field::boolean:
                if (!value.is_boolean()) {
                    error("wrong type at " + path + "." + key + ": expected boolean", path);
                    return std::nullopt;
                }
                return value.get<bool>() ? "true" : "false";
        }
        return std::nullopt;
    }

    bool check_keys(const json& object, std::initializer_list<std::string_view> allowed,
                    const std::string& path) {
        bool ok = true;
        for (const auto& [key, value] : object.items()) {
            (void)value;
            bool known = false;
            for (std::string_view a : allowed) {
                if (key == a) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                error("unknown key at " + path + "." + key, path);
                ok = false;
            }
        }
        return ok;
    }
};

}  // namespace

ParseResult parse_json_corpus(std::string_view text, std::string_view document_name) {
    ParseResult result;
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& e) {
        result.errors.push_back({Severity::error,
                                 "syntax error at byte " + std::to_string(e.byte) + ": " +
                                     e.what(),
                                 std::string(document_name)});
        return result;
    }

    JsonCursor cursor{&result.errors};
    if (!document.is_object()) {
        cursor.error("wrong type at $: expected object", "$");
        return result;
    }

    static constexpr std::string_view kTopKeys[] = {"authors",   "venues",   "publications",
                                                    "citations", "feedback", "outreach"};
    for (const auto& [key, value] : document.items()) {
        (void)value;
        bool known = false;
        for (std::string_view k : kTopKeys) {
            if (key == k) known = true;
        }
        if (!known) cursor.error("unknown key at $." + key, "$." + key);
    }
    for (std::string_view key : kTopKeys) {
        auto it = document.find(key);
        if (it == document.end()) {
            cursor.error("missing key $." + std::string(key), "$");
        } else if (!it->is_array()) {
            cursor.error("wrong type at $." + std::string(key) + ": expected array",
                         "$." + std::string(key));
        }
    }
    if (!result.errors.empty()) return result;

    using Field = JsonCursor::Field;

    auto each = [&](std::string_view key, auto&& handle) {
        const json& array = document.at(std::string(key));
        for (std::size_t i = 0; i < array.size(); ++i) {
            const std::string path = "$." + std::string(key) + "[" + std::to_string(i) + "]";
            const json& element = array[i];
            if (!element.is_object()) {
                cursor.error("wrong type at " + path + ": expected object", path);
                continue;
            }
            handle(element, path);
        }
    };

    each("authors", [&](const json& element, const std::string& path) {
        if (!cursor.check_keys(element, {"id", "name", "birth_year", "role"}, path)) return;
        auto id = cursor.take(element, "id", Field::string, path);
        auto name = cursor.take(element, "name", Field::string, path);
        auto birth_year = cursor.take(element, "birth_year", Field::opt_integer, path);
        auto role = cursor.take(element, "role", Field::string, path);
        if (!id || !name || !birth_year || !role) return;
        RawAuthor raw{*id, *name, *birth_year, *role, path};
        if (detail::convert_author(raw, result.errors))
            result.batch.authors.push_back(std::move(raw));
    });
    each("venues", [&](const json& element, const std::string& path) {
        if (!cursor.check_keys(element, {"id", "name"}, path)) return;
        auto id = cursor.take(element, "id", Field::string, path);
        auto name = cursor.take(element, "name", Field::string, path);
        if (!id || !name) return;
        RawVenue raw{*id, *name, path};
        if (detail::convert_venue(raw, result.errors))
            result.batch.venues.push_back(std::move(raw));
    });
    each("publications", [&](const json& element, const std::string& path) {
        if (!cursor.check_keys(element,
                               {"id", "title", "year", "venue_id", "author_ids",
                                "undergrad_coauthor", "feedback_registered"},
                               path))
            return;
        auto id = cursor.take(element, "id", Field::string, path);
        auto title = cursor.take(element, "title", Field::string, path);
        auto year = cursor.take(element, "year", Field::integer, path);
        auto venue_id = cursor.take(element, "venue_id", Field::string, path);
        auto undergrad = cursor.take(element, "undergrad_coauthor", Field::boolean, path);
        auto feedback = cursor.take(element, "feedback_registered", Field::boolean, path);

        std::optional<std::string> author_ids;
        auto it = element.find("author_ids");
        if (it == element.end()) {
            cursor.error("missing key " + path + ".author_ids", path);
        } else if (!it->is_array()) {
            cursor.error("wrong type at " + path + ".author_ids: expected array of strings",
                         path);
        } else {
            std::string joined;
            bool ok = true;
            for (std::size_t i = 0; i < it->size(); ++i) {
                if (!(*it)[i].is_string()) {
                    cursor.error("wrong type at " + path + ".author_ids[" + std::to_string(i) +
                                     "]: expected string",
                                 path);
                    ok = false;
                    break;
                }
                if (i) joined += ';';
                joined += (*it)[i].get<std::string>();
            }
            if (ok) author_ids = std::move(joined);
        }

        if (!id || !title || !year || !venue_id || !author_ids || !undergrad || !feedback)
            return;
        RawPublication raw{*id,      *title,     *year,     *venue_id,
                           *author_ids, *undergrad, *feedback, path};
        if (detail::convert_publication(raw, result.errors))
            result.batch.publications.push_back(std::move(raw));
    });
    each("citations", [&](const json& element, const std::string& path) {
        if (!cursor.check_keys(element, {"citing_id", "cited_id"}, path)) return;
        auto citing = cursor.take(element, "citing_id", Field::string, path);
        auto cited = cursor.take(element, "cited_id", Field::string, path);
        if (!citing || !cited) return;
        RawCitation raw{*citing, *cited, path};
        if (detail::convert_citation(raw, result.errors))
            result.batch.citations.push_back(std::move(raw));
    });
    each("feedback", [&](const json& element, const std::string& path) {
        if (!cursor.check_keys(element, {"publication_id", "date", "recipient", "signatory"},
                               path))
            return;
        auto publication = cursor.take(element, "publication_id", Field::string, path);
        auto date = cursor.take(element, "date", Field::string, path);
        auto recipient = cursor.take(element, "recipient", Field::string, path);
        auto signatory = cursor.take(element, "signatory", Field::string, path);
        if (!publication || !date || !recipient || !signatory) return;
        RawFeedback raw{*publication, *date, *recipient, *signatory, path};
        if (detail::convert_feedback(raw, result.errors))
            result.batch.feedback.push_back(std::move(raw));
    });
    each("outreach", [&](const json& element, const std::string& path) {
        if (!cursor.check_keys(element, {"author_id", "date", "place", "description", "signatory"},
                               path))
            return;
        auto author = cursor.take(element, "author_id", Field::string, path);
        auto date = cursor.take(element, "date", Field::string, path);
        auto place = cursor.take(element, "place", Field::string, path);
        auto description = cursor.take(element, "description", Field::string, path);
        auto signatory = cursor.take(element, "signatory", Field::string, path);
        if (!author || !date || !place || !description || !signatory) return;
        RawOutreach raw{*author, *date, *place, *description, *signatory, path};
        if (detail::convert_outreach(raw, result.errors))
            result.batch.outreach.push_back(std::move(raw));
    });

    return result;
}

std::string corpus_to_json_text(const Corpus& corpus) {
    ordered_json document;
    auto& authors = document["authors"] = ordered_json::array();
    for (const Author& author : corpus.authors()) {
        ordered_json entry;
        entry["id"] = author.id;
        entry["name"] = author.name;
        if (author.birth_year) entry["birth_year"] = *author.birth_year;
        entry["role"] = std::string(to_string(author.role));
        authors.push_back(std::move(entry));
    }
    auto& venues = document["venues"] = ordered_json::array();
    for (const Venue& venue : corpus.venues()) {
        venues.push_back({{"id", venue.id}, {"name", venue.name}});
    }
    auto& publications = document["publications"] = ordered_json::array();
    for (const Publication& pub : corpus.publications()) {
        ordered_json entry;
        entry["id"] = pub.id;
        entry["title"] = pub.title;
        entry["year"] = pub.year;
        entry["venue_id"] = pub.venue_id;
        entry["author_ids"] = pub.author_ids;
        entry["undergrad_coauthor"] = pub.undergrad_coauthor;
        entry["feedback_registered"] = pub.feedback_registered;
        publications.push_back(std::move(entry));
    }
    auto& citations = document["citations"] = ordered_json::array();
    for (const CitationEdge& edge : corpus.citations()) {
        citations.push_back({{"citing_id", edge.citing_id}, {"cited_id", edge.cited_id}});
    }
    auto& feedback = document["feedback"] = ordered_json::array();
    for (const FeedbackRecord& record : corpus.feedback()) {
        feedback.push_back({{"publication_id", record.publication_id},
                            {"date", to_string(record.date)},
                            {"recipient", record.recipient},
                            {"signatory", record.signatory}});
    }
    auto& outreach = document["outreach"] = ordered_json::array();
    for (const OutreachAction& action : corpus.outreach()) {
        outreach.push_back({{"author_id", action.author_id},
                            {"date", to_string(action.date)},
                            {"place", action.place},
                            {"description", action.description},
                            {"signatory", action.signatory}});
    }
    return document.dump(2) + "\n";
}

}  // namespace biblio
