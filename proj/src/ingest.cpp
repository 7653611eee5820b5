#include "biblio/ingest.hpp"

#include <charconv>

#include "ingest_detail.hpp"

namespace biblio {

std::size_t RawRecordBatch::size() const {
    return authors.size() + venues.size() + publications.size() + citations.size() +
           feedback.size() + outreach.size();
}

void RawRecordBatch::append(RawRecordBatch&& other) {
    auto move_into = [](auto& dst, auto& src) {
        dst.insert(dst.end(), std::make_move_iterator(src.begin()),
                   std::make_move_iterator(src.end()));
    };
    move_into(authors, other.authors);
    move_into(venues, other.venues);
    move_into(publications, other.publications);
    move_into(citations, other.citations);
    move_into(feedback, other.feedback);
    move_into(outreach, other.outreach);
}

namespace detail {

std::optional<long long> parse_integer(std::string_view text) {
    if (text.empty()) return std::nullopt;
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

namespace {

void add_error(std::vector<Issue>& errors, std::string message, const std::string& where) {
    errors.push_back({Severity::error, std::move(message), where});
}

bool require_id(std::string_view id, std::string_view field, const std::string& where,
                std::vector<Issue>& errors) {
    if (!id.empty()) return true;
    add_error(errors, "empty " + std::string(field), where);
    return false;
}

std::optional<bool> parse_bool(std::string_view text) {
    if (text == "true") return true;
    if (text == "false") return false;
    return std::nullopt;
}

}  // namespace

std::optional<Author> convert_author(const RawAuthor& raw, std::vector<Issue>& errors) {
    const std::size_t before = errors.size();
    Author author;
    if (require_id(raw.id, "author id", raw.where, errors)) author.id = raw.id;
    author.name = raw.name;
    if (!raw.birth_year.empty()) {
        auto year = parse_integer(raw.birth_year);
        if (!year)
            add_error(errors, "invalid birth_year '" + raw.birth_year + "'", raw.where);
        else
            author.birth_year = static_cast<int>(*year);
    }
    auto role = role_from_string(raw.role);
    if (!role)
        add_error(errors,
                  "invalid role '" + raw.role + "' (expected researcher or undergraduate)",
                  raw.where);
    else
        author.role = *role;
    if (errors.size() != before) return std::nullopt;
    return author;
}

std::optional<Venue> convert_venue(const RawVenue& raw, std::vector<Issue>& errors) {
    if (!require_id(raw.id, "venue id", raw.where, errors)) return std::nullopt;
    return Venue{raw.id, raw.name};
}

std::optional<Publication> convert_publication(const RawPublication& raw,
                                               std::vector<Issue>& errors) {
    const std::size_t before = errors.size();
    Publication pub;
    if (require_id(raw.id, "publication id", raw.where, errors)) pub.id = raw.id;
    pub.title = raw.title;
    auto year = parse_integer(raw.year);
    if (!year)
        add_error(errors, "invalid year '" + raw.year + "'", raw.where);
    else
        pub.year = static_cast<int>(*year);
    if (require_id(raw.venue_id, "venue_id", raw.where, errors)) pub.venue_id = raw.venue_id;

    if (!raw.author_ids.empty()) {
        std::size_t start = 0;
        while (start <= raw.author_ids.size()) {
            std::size_t end = raw.author_ids.find(';', start);
            if (end == std::string::npos) end = raw.author_ids.size();
            std::string token = raw.author_ids.substr(start, end - start);
            if (token.empty())
                add_error(errors, "empty author id in author_ids '" + raw.author_ids + "'",
                          raw.where);
            else
                pub.author_ids.push_back(std::move(token));
            if (end == raw.author_ids.size()) break;
            start = end + 1;
        }
    }

    auto undergrad = parse_bool(raw.undergrad_coauthor);
    if (!undergrad)
        add_error(errors,
                  "invalid boolean '" + raw.undergrad_coauthor +
                      "' for undergrad_coauthor (expected true or false)",
                  raw.where);
    else
        pub.undergrad_coauthor = *undergrad;
    auto feedback = parse_bool(raw.feedback_registered);
    if (!feedback)
        add_error(errors,
                  "invalid boolean '" + raw.feedback_registered +
                      "' for feedback_registered (expected true or false)",
                  raw.where);
    else
        pub.feedback_registered = *feedback;

    if (errors.size() != before) return std::nullopt;
    return pub;
}

std::optional<CitationEdge> convert_citation(const RawCitation& raw,
                                             std::vector<Issue>& errors) {
    const std::size_t before = errors.size();
    require_id(raw.citing_id, "citing_id", raw.where, errors);
    require_id(raw.cited_id, "cited_id", raw.where, errors);
    if (errors.size() != before) return std::nullopt;
    return CitationEdge{raw.citing_id, raw.cited_id};
}

std::optional<FeedbackRecord> convert_feedback(const RawFeedback& raw,
                                               std::vector<Issue>& errors) {
    const std::size_t before = errors.size();
    FeedbackRecord record;
    if (require_id(raw.publication_id, "publication_id", raw.where, errors))
        record.publication_id = raw.publication_id;
    auto date = parse_date(raw.date);
    if (!date)
        add_error(errors, "invalid date '" + raw.date + "' (expected YYYY-MM-DD)", raw.where);
    else
        record.date = *date;
    record.recipient = raw.recipient;
    record.signatory = raw.signatory;
    if (errors.size() != before) return std::nullopt;
    return record;
}

std::optional<OutreachAction> convert_outreach(const RawOutreach& raw,
                                               std::vector<Issue>& errors) {
    const std::size_t before = errors.size();
    OutreachAction action;
    if (require_id(raw.author_id, "author_id", raw.where, errors))
        action.author_id = raw.author_id;
    auto date = parse_date(raw.date);
    if (!date)
        add_error(errors, "invalid date '" + raw.date + "' (expected YYYY-MM-DD)", raw.where);
    else
        action.date = *date;
    action.place = raw.place;
    action.description = raw.description;
    action.signatory = raw.signatory;
    if (errors.size() != before) return std::nullopt;
    return action;
}

}  // namespace detail

SeedResult seed_from_batch(const RawRecordBatch& batch) {
    SeedResult result;
    for (const RawAuthor& raw : batch.authors) {
        if (auto author = detail::convert_author(raw, result.errors))
            result.seed.authors.push_back({std::move(*author), raw.where});
    }
    for (const RawVenue& raw : batch.venues) {
        if (auto venue = detail::convert_venue(raw, result.errors))
            result.seed.venues.push_back({std::move(*venue), raw.where});
    }
    for (const RawPublication& raw : batch.publications) {
        if (auto pub = detail::convert_publication(raw, result.errors))
            result.seed.publications.push_back({std::move(*pub), raw.where});
    }
    for (const RawCitation& raw : batch.citations) {
        if (auto edge = detail::convert_citation(raw, result.errors))
            result.seed.citations.push_back({std::move(*edge), raw.where});
    }
    for (const RawFeedback& raw : batch.feedback) {
        if (auto record = detail::convert_feedback(raw, result.errors))
            result.seed.feedback.push_back({std::move(*record), raw.where});
    }
    for (const RawOutreach& raw : batch.outreach) {
        if (auto action = detail::convert_outreach(raw, result.errors))
            result.seed.outreach.push_back({std::move(*action), raw.where});
    }
    return result;
}

BuildReport corpus_from_batch(const RawRecordBatch& batch) {
    SeedResult seeded = seed_from_batch(batch);
    if (!seeded.ok()) return {std::nullopt, std::move(seeded.errors), {}};
    return build_corpus(std::move(seeded.seed));
}

}  // namespace biblio
