#pragma once

// Conversion of raw string records into typed ones, shared by the parsers
// and seed_from_batch so every format validates identically.

#include <optional>
#include <string_view>
#include <vector>

#include "biblio/ingest.hpp"

namespace biblio::detail {

std::optional<long long> parse_integer(std::string_view text);

std::optional<Author> convert_author(const RawAuthor& raw, std::vector<Issue>& errors);
std::optional<Venue> convert_venue(const RawVenue& raw, std::vector<Issue>& errors);
std::optional<Publication> convert_publication(const RawPublication& raw,
                                               std::vector<Issue>& errors);
std::optional<CitationEdge> convert_citation(const RawCitation& raw, std::vector<Issue>& errors);
std::optional<FeedbackRecord> convert_feedback(const RawFeedback& raw,
                                               std::vector<Issue>& errors);
std::optional<OutreachAction> convert_outreach(const RawOutreach& raw,
                                               std::vector<Issue>& errors);

}  // namespace biblio::detail
