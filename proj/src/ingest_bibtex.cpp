#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "biblio/ingest.hpp"
#include "ingest_detail.hpp"

namespace biblio {

namespace {

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char advance() {
        char c = text[pos++];
        if (c == '\n') ++line;
        return c;
    }
    void skip_whitespace() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
};

bool is_identifier_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string to_lower(std::string_view text) {
    std::string lowered(text);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return lowered;
}

// trim, collapse whitespace runs, drop brace characters
std::string normalize_value(std::string_view raw) {
    std::string out;
    bool pending_space = false;
    for (char c : raw) {
        if (c == '{' || c == '}') continue;
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += c;
    }
    return out;
}

std::string slugify(std::string_view name) {
    std::string slug;
    bool pending_dash = false;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            if (pending_dash && !slug.empty()) slug += '-';
            pending_dash = false;
            slug += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else {
            pending_dash = true;
        }
    }
    return slug.empty() ? "unnamed" : slug;
}

std::vector<std::string> split_authors(std::string_view value) {
    std::vector<std::string> names;
    std::size_t start = 0;
    while (start <= value.size()) {
        std::size_t sep = value.find(" and ", start);
        std::string_view piece = sep == std::string_view::npos
                                     ? value.substr(start)
                                     : value.substr(start, sep - start);
        std::string name = normalize_value(piece);
        if (!name.empty()) names.push_back(std::move(name));
        if (sep == std::string_view::npos) break;
        start = sep + 5;
    }
    return names;
}

struct Field {
    std::string name;  // lowercased
    std::string value;
};

}  // namespace

ParseResult parse_bibtex_subset(std::string_view text,
                                std::span<const std::pair<std::string, std::string>> known_authors,
                                std::string_view document_name) {
    ParseResult result;
    Scanner scanner{text};

    auto where_at = [&](int line) {
        return std::string(document_name) + ":" + std::to_string(line);
    };
    auto error = [&](std::string message, int line) {
        result.errors.push_back({Severity::error, std::move(message), where_at(line)});
    };
    auto warn = [&](std::string message, int line) {
        result.warnings.push_back({Severity::warning, std::move(message), where_at(line)});
    };

    // name -> id maps: seeded from the caller, extended per new record
    std::map<std::string, std::string> author_id_by_name;
    std::set<std::string> used_author_ids;
    for (const auto& [name, id] : known_authors) {
        author_id_by_name.emplace(name, id);
        used_author_ids.insert(id);
    }
    std::map<std::string, std::string> venue_id_by_name;
    std::set<std::string> used_venue_ids;
    std::set<std::string> entry_keys;

    auto unique_id = [](std::set<std::string>& used, std::string base) {
        std::string candidate = base;
        int suffix = 2;
        while (used.contains(candidate)) candidate = base + "-" + std::to_string(suffix++);
        used.insert(candidate);
        return candidate;
    };

    while (true) {
        while (!scanner.eof() && scanner.peek() != '@') scanner.advance();
        if (scanner.eof()) break;
        const int entry_line = scanner.line;
        scanner.advance();  // '@'

        std::string type;
        while (!scanner.eof() && is_identifier_char(scanner.peek())) type += scanner.advance();
        type = to_lower(type);
        scanner.skip_whitespace();
        if (scanner.eof() || scanner.peek() != '{') {
            error("expected '{' after @" + type, entry_line);
            continue;
        }
        scanner.advance();  // '{'

        std::string key;
        scanner.skip_whitespace();
        while (!scanner.eof() && scanner.peek() != ',' && scanner.peek() != '}' &&
               !std::isspace(static_cast<unsigned char>(scanner.peek())))
            key += scanner.advance();
        scanner.skip_whitespace();
        const std::string entry_label = key.empty() ? "@" + type : key;

        std::vector<Field> fields;
        bool entry_ok = true;
        while (true) {
            if (scanner.eof()) {
                error("unbalanced braces in entry " + entry_label, entry_line);
                entry_ok = false;
                break;
            }
            char c = scanner.peek();
            if (c == '}') {
                scanner.advance();
                break;
            }
            if (c == ',') {
                scanner.advance();
                scanner.skip_whitespace();
                continue;
            }

            Field field;
            while (!scanner.eof() && is_identifier_char(scanner.peek()))
                field.name += scanner.advance();
            scanner.skip_whitespace();
            if (field.name.empty() || scanner.eof() || scanner.peek() != '=') {
                error("malformed field in entry " + entry_label, scanner.line);
                entry_ok = false;
                break;
            }
            scanner.advance();  // '='
            scanner.skip_whitespace();
            if (scanner.eof()) {
                error("unbalanced braces in entry " + entry_label, entry_line);
                entry_ok = false;
                break;
            }

            if (scanner.peek() == '{') {
                scanner.advance();
                int depth = 1;
                std::string value;
                while (!scanner.eof() && depth > 0) {
                    char v = scanner.advance();
                    if (v == '{') ++depth;
                    if (v == '}') {
                        --depth;
                        if (depth == 0) break;
                    }
                    value += v;
                }
                if (depth != 0) {
                    error("unbalanced braces in entry " + entry_label, entry_line);
                    entry_ok = false;
                    break;
                }
                field.value = value;
            } else if (scanner.peek() == '"') {
                scanner.advance();
                std::string value;
                bool closed = false;
                while (!scanner.eof()) {
                    char v = scanner.advance();
                    if (v == '"') {
                        closed = true;
                        break;
                    }
                    value += v;
                }
                if (!closed) {
                    error("unterminated quoted value in entry " + entry_label, entry_line);
                    entry_ok = false;
                    break;
                }
                field.value = value;
            } else {
                std::string value;
                while (!scanner.eof() && scanner.peek() != ',' && scanner.peek() != '}' &&
                       !std::isspace(static_cast<unsigned char>(scanner.peek())))
                    value += scanner.advance();
                field.value = value;
            }
            field.name = to_lower(field.name);
            fields.push_back(std::move(field));
            scanner.skip_whitespace();
        }
        if (!entry_ok) continue;

        if (type != "article" && type != "inproceedings") {
            warn("ignoring unsupported entry type @" + type, entry_line);
            continue;
        }
        if (key.empty()) {
            error("entry without a key", entry_line);
            continue;
        }
        if (!entry_keys.insert(key).second) {
            error("duplicate entry key " + key, entry_line);
            continue;
        }

        const std::string venue_field = type == "article" ? "journal" : "booktitle";
        std::string title, year, venue_name, author_value;
        for (const Field& field : fields) {
            if (field.name == "title") {
                title = normalize_value(field.value);
            } else if (field.name == "year") {
                year = normalize_value(field.value);
            } else if (field.name == venue_field) {
                venue_name = normalize_value(field.value);
            } else if (field.name == "author") {
                author_value = field.value;
            } else {
                warn("ignoring field '" + field.name + "' in entry " + key, entry_line);
            }
        }

        bool fields_ok = true;
        for (const auto& [field_name, value] :
             std::initializer_list<std::pair<std::string_view, const std::string*>>{
                 {"title", &title},
                 {"year", &year},
                 {venue_field, &venue_name},
                 {"author", &author_value}}) {
            if (value->empty()) {
                error("entry " + key + " missing required field " + std::string(field_name),
                      entry_line);
                fields_ok = false;
            }
        }
        if (fields_ok && !detail::parse_integer(year)) {
            error("invalid year '" + year + "' in entry " + key, entry_line);
            fields_ok = false;
        }
        if (!fields_ok) continue;

        const std::string where = where_at(entry_line);

        std::string venue_id;
        if (auto it = venue_id_by_name.find(venue_name); it != venue_id_by_name.end()) {
            venue_id = it->second;
        } else {
            venue_id = unique_id(used_venue_ids, slugify(venue_name));
            venue_id_by_name.emplace(venue_name, venue_id);
            result.batch.venues.push_back({venue_id, venue_name, where});
        }

        std::string author_ids;
        for (const std::string& name : split_authors(author_value)) {
            std::string author_id;
            if (auto it = author_id_by_name.find(name); it != author_id_by_name.end()) {
                author_id = it->second;
            } else {
                author_id = unique_id(used_author_ids, slugify(name));
                author_id_by_name.emplace(name, author_id);
                result.batch.authors.push_back({author_id, name, "", "researcher", where});
            }
            if (!author_ids.empty()) author_ids += ';';
            author_ids += author_id;
        }

        RawPublication raw{key, title, year, venue_id, author_ids, "false", "false", where};
        if (detail::convert_publication(raw, result.errors))
            result.batch.publications.push_back(std::move(raw));
    }

    return result;
}

}  // namespace biblio
