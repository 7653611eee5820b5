#include "biblio/classic_indices.hpp"

#include <algorithm>
#include <functional>

#include "biblio/errors.hpp"

namespace biblio {

namespace {

std::size_t require_author(const Corpus& corpus, std::string_view author_id) {
    auto index = corpus.author_index(author_id);
    if (!index)
        throw DomainError(Errc::unknown_id, "unknown author id " + std::string(author_id));
    return *index;
}

std::size_t require_venue(const Corpus& corpus, std::string_view venue_id) {
    auto index = corpus.venue_index(venue_id);
    if (!index) throw DomainError(Errc::unknown_id, "unknown venue id " + std::string(venue_id));
    return *index;
}

}  // namespace

std::vector<long long> citation_counts_desc(const Corpus& corpus, std::string_view author_id,
                                            std::optional<int> as_of_year) {
    std::size_t author = require_author(corpus, author_id);
    std::vector<long long> counts;
    for (std::size_t p : corpus.publication_indices_of_author(author)) {
        const Publication& pub = corpus.publications()[p];
        if (as_of_year && pub.year > *as_of_year) continue;
        long long count = 0;
        for (std::size_t citing : corpus.citing_indices(p)) {
            if (as_of_year && corpus.publications()[citing].year > *as_of_year) continue;
            ++count;
        }
        counts.push_back(count);
    }
    std::sort(counts.begin(), counts.end(), std::greater<>());
    return counts;
}

int h_from_counts(std::span<const long long> counts_desc) {
    int h = 0;
    for (std::size_t i = 0; i < counts_desc.size(); ++i) {
        if (counts_desc[i] >= static_cast<long long>(i) + 1)
            h = static_cast<int>(i) + 1;
        else
            break;
    }
    return h;
}

int h_index(const Corpus& corpus, std::string_view author_id, std::optional<int> as_of_year) {
    return h_from_counts(citation_counts_desc(corpus, author_id, as_of_year));
}

RatioCounts mean_citation_counts(const Corpus& corpus, std::string_view author_id) {
    std::size_t author = require_author(corpus, author_id);
    RatioCounts counts;
    for (std::size_t p : corpus.publication_indices_of_author(author)) {
        counts.numerator += static_cast<long long>(corpus.citing_indices(p).size());
        ++counts.denominator;
    }
    return counts;
}

double mean_citations(const Corpus& corpus, std::string_view author_id) {
    RatioCounts counts = mean_citation_counts(corpus, author_id);
    if (counts.denominator == 0)
        throw DomainError(Errc::undefined_denominator,
                          "author " + std::string(author_id) + " has no publications");
    return static_cast<double>(counts.numerator) / static_cast<double>(counts.denominator);
}

RatioCounts self_citation_counts(const Corpus& corpus, std::string_view author_id) {
    std::size_t author = require_author(corpus, author_id);
    const std::string& id = corpus.authors()[author].id;
    RatioCounts counts;
    for (std::size_t p : corpus.publication_indices_of_author(author)) {
        for (std::size_t citing : corpus.citing_indices(p)) {
            ++counts.denominator;
            const Publication& citing_pub = corpus.publications()[citing];
            if (std::find(citing_pub.author_ids.begin(), citing_pub.author_ids.end(), id) !=
                citing_pub.author_ids.end())
                ++counts.numerator;
        }
    }
    return counts;
}

double self_citation_rate(const Corpus& corpus, std::string_view author_id) {
    RatioCounts counts = self_citation_counts(corpus, author_id);
    if (counts.denominator == 0)
        throw DomainError(Errc::undefined_denominator, "publications of author " +
                                                           std::string(author_id) +
                                                           " received no citations");
    return static_cast<double>(counts.numerator) / static_cast<double>(counts.denominator);
}

namespace {

IndexValue windowed_ratio(const Corpus& corpus, std::string_view venue_id, int year,
                          int window_length, IndexKind kind) {
    std::size_t venue = require_venue(corpus, venue_id);

    WindowedCount window;
    window.evaluation_year = year;
    for (int back = 1; back <= window_length; ++back) window.window_years.push_back(year - back);

    for (int window_year : window.window_years) {
        for (std::size_t p : corpus.publication_indices_of_venue_year(venue, window_year)) {
            ++window.publications;
            for (std::size_t citing : corpus.citing_indices(p)) {
                if (corpus.publications()[citing].year == year) ++window.citations;
            }
        }
    }
    if (window.publications == 0)
        throw DomainError(Errc::undefined_denominator,
                          "venue " + std::string(venue_id) + " has no publications in " +
                              std::to_string(year - window_length) + ".." +
                              std::to_string(year - 1));

    IndexValue result;
    result.kind = kind;
    result.subject_id = std::string(venue_id);
    result.evaluation_year = year;
    result.value =
        static_cast<double>(window.citations) / static_cast<double>(window.publications);
    result.inputs = std::move(window);
    return result;
}

}  // namespace

IndexValue impact_factor(const Corpus& corpus, std::string_view venue_id, int year) {
    return windowed_ratio(corpus, venue_id, year, 2, IndexKind::impact_factor);
}

IndexValue cite_score(const Corpus& corpus, std::string_view venue_id, int year) {
    return windowed_ratio(corpus, venue_id, year, 3, IndexKind::cite_score);
}

}  // namespace biblio
