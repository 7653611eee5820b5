#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "biblio/corpus.hpp"
#include "biblio/index_value.hpp"

namespace biblio {

// One report line: either a value or an explicit error string, never both
// and never a silent skip. `inputs` holds the exact counts behind the
// value (the inputs_json column).
struct ReportRow {
    std::string subject_id;
    std::string index;  // canonical index name, or "recommendation"
    std::optional<int> year;
    std::optional<double> value;
    std::string error;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();

    bool operator==(const ReportRow&) const = default;
};

// Rows sorted by subject id then index; fingerprint stable across runs on
// identical input.
struct ReportDocument {
    std::string kind;
    std::optional<int> evaluation_year;
    std::string corpus_fingerprint;
    std::vector<ReportRow> rows;

    bool operator==(const ReportDocument&) const = default;
};

// FNV-1a 64 over the canonical JSON serialization, as 16 hex digits.
std::string corpus_fingerprint(const Corpus& corpus);

// Shortest round-trip decimal form (std::to_chars).
std::string format_double(double value);

// RFC-4180 quoting when the field needs it.
std::string csv_escape(std::string_view field);

std::string to_csv(const ReportDocument& document);
std::string to_table(const ReportDocument& document);
nlohmann::ordered_json to_json(const ReportDocument& document);
ReportDocument report_from_json(const nlohmann::ordered_json& document);

ReportRow row_from_index_value(const IndexValue& value);
nlohmann::ordered_json inputs_to_json(const IndexInputs& inputs);

enum class OutputFormat { table, json, csv };
std::optional<OutputFormat> output_format_from_string(std::string_view text);

// ---- command drivers ----------------------------------------------------
// Exit codes: 0 success, 1 domain error (invalid corpus, unknown subject,
// no coauthorship structure), 2 usage or I/O error.

struct LoadResult {
    std::optional<Corpus> corpus;
    std::vector<Issue> errors;
    std::vector<Issue> warnings;
    bool io_error = false;

    bool ok() const { return corpus.has_value(); }
};

// Loads and merges corpus inputs: a directory is a CSV bundle, *.json a
// JSON corpus, *.bib a BibTeX-subset import (matched against authors
// gathered from earlier paths).
LoadResult load_corpus(std::span<const std::string> paths);

struct IndexOptions {
    std::string index = "all";
    std::optional<int> year;
    std::optional<std::string> subject;
    bool all_subjects = false;
    OutputFormat format = OutputFormat::table;
};

struct RecommendOptions {
    int tolerance = 2;
    int limit = 50;
    OutputFormat format = OutputFormat::table;
};

struct ReportOptions {
    int year = 0;
    std::string out_dir;
    int tolerance = 2;
    int limit = 50;
};

int run_validate(std::span<const std::string> paths, std::ostream& out, std::ostream& err);
int run_index(std::span<const std::string> paths, const IndexOptions& options, std::ostream& out,
              std::ostream& err);
int run_recommend(std::span<const std::string> paths, const RecommendOptions& options,
                  std::ostream& out, std::ostream& err);
int run_report(std::span<const std::string> paths, const ReportOptions& options,
               std::ostream& out, std::ostream& err);
int run_graph(std::span<const std::string> paths, std::ostream& out, std::ostream& err);

// Names of the files run_report writes into --out.
std::span<const std::string_view> report_file_names();

}  // namespace biblio
