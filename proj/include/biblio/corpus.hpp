#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "biblio/types.hpp"

namespace biblio {

// A record plus the source location it was parsed from (empty for records
// built in memory). Locations only feed diagnostics.
template <typename T>
struct Located {
    T value;
    std::string where;
};

// Raw input to build_corpus: the six record kinds, unvalidated.
struct CorpusSeed {
    std::vector<Located<Author>> authors;
    std::vector<Located<Venue>> venues;
    std::vector<Located<Publication>> publications;
    std::vector<Located<CitationEdge>> citations;
    std::vector<Located<FeedbackRecord>> feedback;
    std::vector<Located<OutreachAction>> outreach;
};

CorpusSeed make_seed(std::vector<Author> authors, std::vector<Venue> venues,
                     std::vector<Publication> publications,
                     std::vector<CitationEdge> citations,
                     std::vector<FeedbackRecord> feedback = {},
                     std::vector<OutreachAction> outreach = {});

// Lookup tables derived from the raw collections. Rebuildable from them and
// bit-identical on every rebuild. All vectors of indices are sorted.
struct DerivedTables {
    // per publication index: indices of publications citing it
    std::vector<std::vector<std::size_t>> citing_pubs_of;
    // per author index: indices of that author's publications
    std::vector<std::vector<std::size_t>> pubs_of_author;
    // (venue index, year) -> indices of the venue's publications that year
    std::map<std::pair<std::size_t, int>, std::vector<std::size_t>> pubs_of_venue_year;
    // per publication index: indices of feedback records referencing it
    std::vector<std::vector<std::size_t>> feedback_of_pub;
    // per author index: indices of that author's outreach actions
    std::vector<std::vector<std::size_t>> outreach_of_author;

    bool operator==(const DerivedTables&) const = default;
};

// Immutable, validated container of the whole dataset. Construction happens
// through build_corpus; afterwards every accessor is a pure read, safe to
// call from any number of threads.
//
// Collections are normalized at construction: authors, venues and
// publications sorted by id, citations by (citing_id, cited_id), feedback
// and outreach by field order. Corpus identity is content identity.
class Corpus {
public:
    Corpus() = default;
    Corpus(std::vector<Author> authors, std::vector<Venue> venues,
           std::vector<Publication> publications, std::vector<CitationEdge> citations,
           std::vector<FeedbackRecord> feedback, std::vector<OutreachAction> outreach);

    std::span<const Author> authors() const { return authors_; }
    std::span<const Venue> venues() const { return venues_; }
    std::span<const Publication> publications() const { return publications_; }
    std::span<const CitationEdge> citations() const { return citations_; }
    std::span<const FeedbackRecord> feedback() const { return feedback_; }
    std::span<const OutreachAction> outreach() const { return outreach_; }

    const Author* find_author(std::string_view id) const;
    const Venue* find_venue(std::string_view id) const;
    const Publication* find_publication(std::string_view id) const;

    std::optional<std::size_t> author_index(std::string_view id) const;
    std::optional<std::size_t> venue_index(std::string_view id) const;
    std::optional<std::size_t> publication_index(std::string_view id) const;

    const DerivedTables& derived() const { return derived_; }

    // Indices of publications citing the given publication.
    std::span<const std::size_t> citing_indices(std::size_t pub_index) const;
    // Indices of the author's publications.
    std::span<const std::size_t> publication_indices_of_author(std::size_t author_index) const;
    std::span<const std::size_t> outreach_indices_of_author(std::size_t author_index) const;
    std::span<const std::size_t> publication_indices_of_venue_year(std::size_t venue_index,
                                                                   int year) const;

    bool operator==(const Corpus& other) const;

private:
    std::vector<Author> authors_;
    std::vector<Venue> venues_;
    std::vector<Publication> publications_;
    std::vector<CitationEdge> citations_;
    std::vector<FeedbackRecord> feedback_;
    std::vector<OutreachAction> outreach_;

    std::unordered_map<std::string, std::size_t> author_by_id_;
    std::unordered_map<std::string, std::size_t> venue_by_id_;
    std::unordered_map<std::string, std::size_t> publication_by_id_;

    DerivedTables derived_;
};

// Pure function of the raw collections; building twice yields equal tables.
DerivedTables rebuild_derived_tables(std::span<const Author> authors,
                                     std::span<const Venue> venues,
                                     std::span<const Publication> publications,
                                     std::span<const CitationEdge> citations,
                                     std::span<const FeedbackRecord> feedback,
                                     std::span<const OutreachAction> outreach);

// Either a corpus satisfying every type invariant, or the complete list of
// violations. Never both, never a partial corpus. Warnings (for example a
// citation predating the cited work) ride alongside a successful corpus.
struct BuildReport {
    std::optional<Corpus> corpus;
    std::vector<Issue> errors;
    std::vector<Issue> warnings;

    bool ok() const { return corpus.has_value(); }
};

BuildReport build_corpus(CorpusSeed seed);

// Citation count for one publication with a per-citing-year breakdown.
struct CitationTally {
    int total = 0;
    std::map<int, int> by_year;  // citing publication's year -> count
};

// Throws DomainError(unknown_id) for an unresolved publication id.
CitationTally citations_received(const Corpus& corpus, std::string_view publication_id);

}  // namespace biblio
