#include "biblio/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <cstdio>

#include "biblio/errors.hpp"
#include "biblio/ingest.hpp"

namespace biblio {

namespace {

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char byte : text) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    return hash;
}

}  // namespace

std::string csv_escape(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string corpus_fingerprint(const Corpus& corpus) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(corpus_to_json_text(corpus))));
    return buffer;
}

std::string format_double(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    (void)ec;
    return std::string(buffer, ptr);
}

nlohmann::ordered_json inputs_to_json(const IndexInputs& inputs) {
    using nlohmann::ordered_json;
    return std::visit(
        [](const auto& in) -> ordered_json {
            using T = std::decay_t<decltype(in)>;
            ordered_json object = ordered_json::object();
            if constexpr (std::is_same_v<T, std::monostate>) {
                // empty object
            } else if constexpr (std::is_same_v<T, WindowedCount>) {
                object["evaluation_year"] = in.evaluation_year;
                object["window_years"] = in.window_years;
                object["citations"] = in.citations;
                object["publications"] = in.publications;
            } else if constexpr (std::is_same_v<T, RatioCounts>) {
                object["numerator"] = in.numerator;
                object["denominator"] = in.denominator;
            } else if constexpr (std::is_same_v<T, CitationProfile>) {
                object["citation_counts"] = in.counts_desc;
            } else if constexpr (std::is_same_v<T, AiiInputs>) {
                object["undergrad_coauthored"] = in.undergrad_coauthored;
                object["total_publications"] = in.total_publications;
                object["age_years"] = in.age_years;
            } else {
                static_assert(std::is_same_v<T, RsiInputs>);
                object["feedback_publications"] = in.feedback_publications;
                object["total_publications"] = in.total_publications;
                object["outreach_actions"] = in.outreach_actions;
            }
            return object;
        },
        inputs);
}

ReportRow row_from_index_value(const IndexValue& value) {
    ReportRow row;
    row.subject_id = value.subject_id;
    row.index = std::string(to_string(value.kind));
    row.year = value.evaluation_year;
    row.value = value.value;
    row.inputs = inputs_to_json(value.inputs);
    return row;
}

std::string to_csv(const ReportDocument& document) {
    std::string text = "# corpus_fingerprint=" + document.corpus_fingerprint + "\n";
    text += "subject_id,index,year,value,error,inputs_json\n";
    for (const ReportRow& row : document.rows) {
        text += csv_escape(row.subject_id);
        text += ',';
        text += csv_escape(row.index);
        text += ',';
        if (row.year) text += std::to_string(*row.year);
        text += ',';
        if (row.value) text += format_double(*row.value);
        text += ',';
        text += csv_escape(row.error);
        text += ',';
        text += csv_escape(row.inputs.dump());
        text += '\n';
    }
    return text;
}

std::string to_table(const ReportDocument& document) {
    std::vector<std::array<std::string, 4>> cells;
    cells.push_back({"subject", "index", "year", "value"});
    for (const ReportRow& row : document.rows) {
        std::array<std::string, 4> line;
        line[0] = row.subject_id;
        line[1] = row.index;
        line[2] = row.year ? std::to_string(*row.year) : "";
        if (row.value) {
            char buffer[64];
            std::snprintf(buffer, sizeof buffer, "%.2f", *row.value);
            line[3] = buffer;
        } else {
            line[3] = "error: " + row.error;
        }
        cells.push_back(std::move(line));
    }

    std::array<std::size_t, 4> widths{};
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < 4; ++i) widths[i] = std::max(widths[i], line[i].size());
    }

    std::string text = "# " + document.kind + " report";
    if (document.evaluation_year) text += " for year " + std::to_string(*document.evaluation_year);
    text += "\n# corpus_fingerprint=" + document.corpus_fingerprint + "\n";
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < 4; ++i) {
            text += line[i];
            if (i + 1 < 4) text.append(widths[i] - line[i].size() + 2, ' ');
        }
        text += '\n';
    }
    return text;
}

nlohmann::ordered_json to_json(const ReportDocument& document) {
    using nlohmann::ordered_json;
    ordered_json object;
    object["kind"] = document.kind;
    if (document.evaluation_year)
        object["evaluation_year"] = *document.evaluation_year;
    else
        object["evaluation_year"] = nullptr;
    object["corpus_fingerprint"] = document.corpus_fingerprint;
    auto& rows = object["rows"] = ordered_json::array();
    for (const ReportRow& row : document.rows) {
        ordered_json entry;
        entry["subject_id"] = row.subject_id;
        entry["index"] = row.index;
        entry["year"] = row.year ? ordered_json(*row.year) : ordered_json(nullptr);
        entry["value"] = row.value ? ordered_json(*row.value) : ordered_json(nullptr);
        entry["error"] = row.error;
        entry["inputs"] = row.inputs;
        rows.push_back(std::move(entry));
    }
    return object;
}

ReportDocument report_from_json(const nlohmann::ordered_json& document) {
    ReportDocument result;
    result.kind = document.at("kind").get<std::string>();
    if (!document.at("evaluation_year").is_null())
        result.evaluation_year = document.at("evaluation_year").get<int>();
    result.corpus_fingerprint = document.at("corpus_fingerprint").get<std::string>();
    for (const auto& entry : document.at("rows")) {
        ReportRow row;
        row.subject_id = entry.at("subject_id").get<std::string>();
        row.index = entry.at("index").get<std::string>();
        if (!entry.at("year").is_null()) row.year = entry.at("year").get<int>();
        if (!entry.at("value").is_null()) row.value = entry.at("value").get<double>();
        row.error = entry.at("error").get<std::string>();
        row.inputs = entry.at("inputs");
        result.rows.push_back(std::move(row));
    }
    return result;
}

std::optional<OutputFormat> output_format_from_string(std::string_view text) {
    if (text == "table") return OutputFormat::table;
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    return std::nullopt;
}

}  // namespace biblio
