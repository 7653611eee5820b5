#include <algorithm>
#include <fstream>
#include <sstream>

#include "biblio/ingest.hpp"
#include "ingest_detail.hpp"

namespace biblio {

namespace {

struct CsvRow {
    std::vector<std::string> fields;
    int line = 0;  // 1-based line the row starts on
};

struct CsvReadResult {
    std::vector<CsvRow> rows;
    std::vector<Issue> errors;
};

// RFC-4180-style reader: comma separation, double-quote escaping with ""
// inside quoted fields, quoted fields may span lines. CRLF tolerated.
CsvReadResult read_csv(std::string_view text, std::string_view file_name) {
    CsvReadResult result;
    std::size_t pos = 0;
    int line = 1;

    while (pos < text.size()) {
        CsvRow row;
        row.line = line;
        bool row_has_content = false;
        bool done_row = false;
        std::string field;
        bool field_was_quoted = false;

        auto finish_field = [&] {
            row.fields.push_back(std::move(field));
            field.clear();
            field_was_quoted = false;
        };

        while (!done_row) {
            if (pos >= text.size()) {
                finish_field();
                break;
            }
            char c = text[pos];
            if (c == '"' && field.empty() && !field_was_quoted) {
                field_was_quoted = true;
                ++pos;
                bool closed = false;
                while (pos < text.size()) {
                    if (text[pos] == '"') {
                        if (pos + 1 < text.size() && text[pos + 1] == '"') {
                            field += '"';
                            pos += 2;
                        } else {
                            ++pos;
                            closed = true;
                            break;
                        }
                    } else {
                        if (text[pos] == '\n') ++line;
                        field += text[pos];
                        ++pos;
                    }
                }
                if (!closed) {
                    result.errors.push_back({Severity::error, "unterminated quoted field",
                                             std::string(file_name) + ":" +
                                                 std::to_string(row.line)});
                    return result;
                }
                row_has_content = true;
            } else if (c == ',') {
                finish_field();
                row_has_content = true;
                ++pos;
            } else if (c == '\n' || (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n')) {
                finish_field();
                pos += (c == '\r') ? 2 : 1;
                ++line;
                done_row = true;
            } else {
                field += c;
                row_has_content = true;
                ++pos;
            }
        }

        // a lone newline or trailing blank line is not a record
        if (row_has_content || row.fields.size() > 1) result.rows.push_back(std::move(row));
    }
    return result;
}

std::string location(std::string_view file_name, int line) {
    return std::string(file_name) + ":" + std::to_string(line);
}

constexpr std::string_view kHeaders[] = {
    "id,name,birth_year,role",
    "id,name",
    "id,title,year,venue_id,author_ids,undergrad_coauthor,feedback_registered",
    "citing_id,cited_id",
    "publication_id,date,recipient,signatory",
    "author_id,date,place,description,signatory",
};

constexpr std::string_view kFileNames[] = {
    "authors.csv", "venues.csv", "publications.csv",
    "citations.csv", "feedback.csv", "outreach.csv",
};

}  // namespace

std::string_view csv_file_name(CsvKind kind) { return kFileNames[static_cast<int>(kind)]; }

std::string_view csv_header(CsvKind kind) { return kHeaders[static_cast<int>(kind)]; }

ParseResult parse_csv_file(CsvKind kind, std::string_view text, std::string_view file_name) {
    ParseResult result;
    CsvReadResult read = read_csv(text, file_name);
    result.errors = std::move(read.errors);
    if (!result.errors.empty()) return result;

    const std::string_view header = csv_header(kind);
    const std::size_t column_count =
        static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) + 1;

    if (read.rows.empty()) {
        result.errors.push_back({Severity::error,
                                 "missing header row (expected '" + std::string(header) + "')",
                                 location(file_name, 1)});
        return result;
    }
    {
        std::string joined;
        for (std::size_t i = 0; i < read.rows[0].fields.size(); ++i) {
            if (i) joined += ',';
            joined += read.rows[0].fields[i];
        }
        if (joined != header) {
            result.errors.push_back({Severity::error,
                                     "invalid header '" + joined + "' (expected '" +
                                         std::string(header) + "')",
                                     location(file_name, read.rows[0].line)});
            return result;
        }
    }

    for (std::size_t r = 1; r < read.rows.size(); ++r) {
        const CsvRow& row = read.rows[r];
        const std::string where = location(file_name, row.line);
        if (row.fields.size() != column_count) {
            result.errors.push_back({Severity::error,
                                     "expected " + std::to_string(column_count) +
                                         " fields, got " + std::to_string(row.fields.size()),
                                     where});
            continue;
        }
        const auto& f = row.fields;
        switch (kind) {
            case CsvKind::authors: {
                RawAuthor raw{f[0], f[1], f[2], f[3], where};
                if (detail::convert_author(raw, result.errors))
                    result.batch.authors.push_back(std::move(raw));
                break;
            }
            case CsvKind::venues: {
                RawVenue raw{f[0], f[1], where};
                if (detail::convert_venue(raw, result.errors))
                    result.batch.venues.push_back(std::move(raw));
                break;
            }
            case CsvKind::publications: {
                RawPublication raw{f[0], f[1], f[2], f[3], f[4], f[5], f[6], where};
                if (detail::convert_publication(raw, result.errors))
                    result.batch.publications.push_back(std::move(raw));
                break;
            }
            case CsvKind::citations: {
                RawCitation raw{f[0], f[1], where};
                if (detail::convert_citation(raw, result.errors))
                    result.batch.citations.push_back(std::move(raw));
                break;
            }
            case CsvKind::feedback: {
                RawFeedback raw{f[0], f[1], f[2], f[3], where};
                if (detail::convert_feedback(raw, result.errors))
                    result.batch.feedback.push_back(std::move(raw));
                break;
            }
            case CsvKind::outreach: {
                RawOutreach raw{f[0], f[1], f[2], f[3], f[4], where};
                if (detail::convert_outreach(raw, result.errors))
                    result.batch.outreach.push_back(std::move(raw));
                break;
            }
        }
    }
    return result;
}

namespace {

void parse_one_csv(CsvKind kind, const std::filesystem::path& path, ParseResult& result) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        result.errors.push_back({Severity::error, "cannot read " + path.string(),
                                 std::string(csv_file_name(kind))});
        return;
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    const std::string text = buffer.str();
    ParseResult file_result = parse_csv_file(kind, text, csv_file_name(kind));
    result.batch.append(std::move(file_result.batch));
    result.errors.insert(result.errors.end(),
                         std::make_move_iterator(file_result.errors.begin()),
                         std::make_move_iterator(file_result.errors.end()));
    result.warnings.insert(result.warnings.end(),
                           std::make_move_iterator(file_result.warnings.begin()),
                           std::make_move_iterator(file_result.warnings.end()));
}

std::optional<CsvKind> kind_from_file_name(const std::filesystem::path& path) {
    const std::string name = path.filename().string();
    for (int k = 0; k < 6; ++k) {
        if (name == csv_file_name(static_cast<CsvKind>(k))) return static_cast<CsvKind>(k);
    }
    return std::nullopt;
}

}  // namespace

ParseResult parse_csv_bundle(const std::filesystem::path& directory) {
    ParseResult result;
    for (int k = 0; k < 6; ++k) {
        const CsvKind kind = static_cast<CsvKind>(k);
        parse_one_csv(kind, directory / csv_file_name(kind), result);
    }
    return result;
}

ParseResult parse_csv_bundle(std::span<const std::filesystem::path> files) {
    ParseResult result;
    for (const std::filesystem::path& path : files) {
        auto kind = kind_from_file_name(path);
        if (!kind) {
            result.errors.push_back(
                {Severity::error,
                 "unrecognized bundle file name " + path.filename().string() +
                     " (expected one of the six canonical names)",
                 path.string()});
            continue;
        }
        parse_one_csv(*kind, path, result);
    }
    return result;
}

}  // namespace biblio
