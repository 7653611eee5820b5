#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "biblio/corpus.hpp"
#include "biblio/index_value.hpp"

namespace biblio {

// Per-publication citation counts for an author, sorted descending. When
// as_of_year is set, only publications of that year or earlier count, and
// only citations whose citing publication is from that year or earlier.
std::vector<long long> citation_counts_desc(const Corpus& corpus, std::string_view author_id,
                                            std::optional<int> as_of_year = std::nullopt);

// Largest h with at least h entries >= h in a descending count vector.
int h_from_counts(std::span<const long long> counts_desc);

// Largest h such that the author has >= h publications each cited >= h
// times. Throws DomainError(unknown_id) for an unresolved author.
int h_index(const Corpus& corpus, std::string_view author_id,
            std::optional<int> as_of_year = std::nullopt);

// {total citations received, publication count} for an author.
RatioCounts mean_citation_counts(const Corpus& corpus, std::string_view author_id);

// Citations received divided by publication count. Throws
// undefined_denominator for an author with zero publications.
double mean_citations(const Corpus& corpus, std::string_view author_id);

// {citations whose citing publication also lists the author, total
// citations received}.
RatioCounts self_citation_counts(const Corpus& corpus, std::string_view author_id);

// Fraction of received citations where the citing publication shares the
// author. Throws undefined_denominator when no citations were received.
double self_citation_rate(const Corpus& corpus, std::string_view author_id);

// Two-year citations-per-publication ratio for a venue: citations made in
// year n to the venue's publications of years n-1 and n-2, divided by the
// count of those publications. Throws undefined_denominator when the venue
// published nothing in the window; that is not the same as value 0.
IndexValue impact_factor(const Corpus& corpus, std::string_view venue_id, int year);

// The three-year variant over {n-1, n-2, n-3}; contract otherwise identical
// to impact_factor.
IndexValue cite_score(const Corpus& corpus, std::string_view venue_id, int year);

}  // namespace biblio
