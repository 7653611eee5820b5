#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biblio/corpus.hpp"
#include "biblio/types.hpp"

namespace biblio {

// Raw ingest records: every field still a string, pending validation.
// `where` is the source location ("authors.csv:3", "$.publications[0]").

struct RawAuthor {
    std::string id, name, birth_year, role;
    std::string where;
};

struct RawVenue {
    std::string id, name;
    std::string where;
};

struct RawPublication {
    std::string id, title, year, venue_id;
    std::string author_ids;  // ";"-separated
    std::string undergrad_coauthor, feedback_registered;
    std::string where;
};

struct RawCitation {
    std::string citing_id, cited_id;
    std::string where;
};

struct RawFeedback {
    std::string publication_id, date, recipient, signatory;
    std::string where;
};

struct RawOutreach {
    std::string author_id, date, place, description, signatory;
    std::string where;
};

struct RawRecordBatch {
    std::vector<RawAuthor> authors;
    std::vector<RawVenue> venues;
    std::vector<RawPublication> publications;
    std::vector<RawCitation> citations;
    std::vector<RawFeedback> feedback;
    std::vector<RawOutreach> outreach;

    std::size_t size() const;
    void append(RawRecordBatch&& other);
};

// Parse outcome: well-formed records plus the full diagnostic list.
// Malformed rows are reported, never silently dropped; errors mean the
// batch is incomplete.
struct ParseResult {
    RawRecordBatch batch;
    std::vector<Issue> errors;
    std::vector<Issue> warnings;

    bool ok() const { return errors.empty(); }
};

enum class CsvKind { authors, venues, publications, citations, feedback, outreach };

std::string_view csv_file_name(CsvKind kind);    // "authors.csv", ...
std::string_view csv_header(CsvKind kind);       // required header row

// One CSV file of a known kind. UTF-8, comma-separated, double-quote
// escaping; the header row is required and must match the schema exactly.
ParseResult parse_csv_file(CsvKind kind, std::string_view text, std::string_view file_name);

// A directory holding the six canonical files (authors.csv, venues.csv,
// publications.csv, citations.csv, feedback.csv, outreach.csv). All six
// must exist.
ParseResult parse_csv_bundle(const std::filesystem::path& directory);

// An explicit file set; each file must carry one of the six canonical
// names. Kinds not present parse as empty.
ParseResult parse_csv_bundle(std::span<const std::filesystem::path> files);

// One JSON document with exactly the keys authors, venues, publications,
// citations, feedback, outreach. Unknown keys are rejected with their
// path; numbers must be JSON numbers and booleans JSON booleans.
ParseResult parse_json_corpus(std::string_view text,
                              std::string_view document_name = "<json>");

// BibTeX subset: @article and @inproceedings entries with title, year,
// journal/booktitle and author fields. Author names split on " and " are
// matched by exact name against `known_authors` (name -> id) and against
// earlier entries; unmatched names become new researcher records. Other
// fields and entry types are skipped with a warning.
ParseResult parse_bibtex_subset(
    std::string_view text,
    std::span<const std::pair<std::string, std::string>> known_authors = {},
    std::string_view document_name = "<bibtex>");

// Typed conversion of a raw batch. Lexical errors (non-integer year,
// malformed boolean or date, bad role, empty id) come back with the
// record's source location.
struct SeedResult {
    CorpusSeed seed;
    std::vector<Issue> errors;

    bool ok() const { return errors.empty(); }
};

SeedResult seed_from_batch(const RawRecordBatch& batch);

// seed_from_batch + build_corpus with one merged diagnostic list.
BuildReport corpus_from_batch(const RawRecordBatch& batch);

// Canonical JSON serialization of a corpus: the parse_json_corpus schema,
// collections in normalized order, two-space indent, trailing newline.
// Re-parsing yields an equal corpus; the corpus fingerprint hashes exactly
// this text.
std::string corpus_to_json_text(const Corpus& corpus);

}  // namespace biblio
