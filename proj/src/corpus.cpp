#include "biblio/corpus.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_set>

#include "biblio/errors.hpp"

namespace biblio {

namespace {

auto feedback_key(const FeedbackRecord& r) {
    return std::tie(r.publication_id, r.date, r.recipient, r.signatory);
}

auto outreach_key(const OutreachAction& r) {
    return std::tie(r.author_id, r.date, r.place, r.description, r.signatory);
}

}  // namespace

CorpusSeed make_seed(std::vector<Author> authors, std::vector<Venue> venues,
                     std::vector<Publication> publications, std::vector<CitationEdge> citations,
                     std::vector<FeedbackRecord> feedback, std::vector<OutreachAction> outreach) {
    CorpusSeed seed;
    for (auto& a : authors) seed.authors.push_back({std::move(a), ""});
    for (auto& v : venues) seed.venues.push_back({std::move(v), ""});
    for (auto& p : publications) seed.publications.push_back({std::move(p), ""});
    for (auto& c : citations) seed.citations.push_back({std::move(c), ""});
    for (auto& f : feedback) seed.feedback.push_back({std::move(f), ""});
    for (auto& o : outreach) seed.outreach.push_back({std::move(o), ""});
    return seed;
}

DerivedTables rebuild_derived_tables(std::span<const Author> authors,
                                     std::span<const Venue> venues,
                                     std::span<const Publication> publications,
                                     std::span<const CitationEdge> citations,
                                     std::span<const FeedbackRecord> feedback,
                                     std::span<const OutreachAction> outreach) {
    DerivedTables tables;
    tables.citing_pubs_of.resize(publications.size());
    tables.pubs_of_author.resize(authors.size());
    tables.feedback_of_pub.resize(publications.size());
    tables.outreach_of_author.resize(authors.size());

    std::unordered_map<std::string_view, std::size_t> author_index;
    for (std::size_t i = 0; i < authors.size(); ++i) author_index.emplace(authors[i].id, i);
    std::unordered_map<std::string_view, std::size_t> pub_index;
    for (std::size_t i = 0; i < publications.size(); ++i)
        pub_index.emplace(publications[i].id, i);
    std::unordered_map<std::string_view, std::size_t> venue_index;
    for (std::size_t i = 0; i < venues.size(); ++i) venue_index.emplace(venues[i].id, i);

    for (std::size_t p = 0; p < publications.size(); ++p) {
        for (const std::string& aid : publications[p].author_ids) {
            auto it = author_index.find(aid);
            if (it != author_index.end()) tables.pubs_of_author[it->second].push_back(p);
        }
        auto v = venue_index.find(publications[p].venue_id);
        if (v != venue_index.end())
            tables.pubs_of_venue_year[{v->second, publications[p].year}].push_back(p);
    }
    for (const CitationEdge& edge : citations) {
        auto citing = pub_index.find(edge.citing_id);
        auto cited = pub_index.find(edge.cited_id);
        if (citing != pub_index.end() && cited != pub_index.end())
            tables.citing_pubs_of[cited->second].push_back(citing->second);
    }
    for (std::size_t f = 0; f < feedback.size(); ++f) {
        auto it = pub_index.find(feedback[f].publication_id);
        if (it != pub_index.end()) tables.feedback_of_pub[it->second].push_back(f);
    }
    for (std::size_t o = 0; o < outreach.size(); ++o) {
        auto it = author_index.find(outreach[o].author_id);
        if (it != author_index.end()) tables.outreach_of_author[it->second].push_back(o);
    }

    for (auto& v : tables.citing_pubs_of) std::sort(v.begin(), v.end());
    for (auto& v : tables.pubs_of_author) std::sort(v.begin(), v.end());
    for (auto& v : tables.feedback_of_pub) std::sort(v.begin(), v.end());
    for (auto& v : tables.outreach_of_author) std::sort(v.begin(), v.end());

    return tables;
}

Corpus::Corpus(std::vector<Author> authors, std::vector<Venue> venues,
               std::vector<Publication> publications, std::vector<CitationEdge> citations,
               std::vector<FeedbackRecord> feedback, std::vector<OutreachAction> outreach)
    : authors_(std::move(authors)),
      venues_(std::move(venues)),
      publications_(std::move(publications)),
      citations_(std::move(citations)),
      feedback_(std::move(feedback)),
      outreach_(std::move(outreach)) {
    std::sort(authors_.begin(), authors_.end(),
              [](const Author& a, const Author& b) { return a.id < b.id; });
    std::sort(venues_.begin(), venues_.end(),
              [](const Venue& a, const Venue& b) { return a.id < b.id; });
    std::sort(publications_.begin(), publications_.end(),
              [](const Publication& a, const Publication& b) { return a.id < b.id; });
    std::sort(citations_.begin(), citations_.end(),
              [](const CitationEdge& a, const CitationEdge& b) {
                  return std::tie(a.citing_id, a.cited_id) < std::tie(b.citing_id, b.cited_id);
              });
    std::sort(feedback_.begin(), feedback_.end(), [](const FeedbackRecord& a,
                                                     const FeedbackRecord& b) {
        return feedback_key(a) < feedback_key(b);
    });
    std::sort(outreach_.begin(), outreach_.end(), [](const OutreachAction& a,
                                                     const OutreachAction& b) {
        return outreach_key(a) < outreach_key(b);
    });

    for (std::size_t i = 0; i < authors_.size(); ++i) author_by_id_.emplace(authors_[i].id, i);
    for (std::size_t i = 0; i < venues_.size(); ++i) venue_by_id_.emplace(venues_[i].id, i);
    for (std::size_t i = 0; i < publications_.size(); ++i)
        publication_by_id_.emplace(publications_[i].id, i);

    derived_ = rebuild_derived_tables(authors_, venues_, publications_, citations_, feedback_,
                                      outreach_);
}

const Author* Corpus::find_author(std::string_view id) const {
    auto it = author_by_id_.find(std::string(id));
    return it == author_by_id_.end() ? nullptr : &authors_[it->second];
}

const Venue* Corpus::find_venue(std::string_view id) const {
    auto it = venue_by_id_.find(std::string(id));
    return it == venue_by_id_.end() ? nullptr : &venues_[it->second];
}

const Publication* Corpus::find_publication(std::string_view id) const {
    auto it = publication_by_id_.find(std::string(id));
    return it == publication_by_id_.end() ? nullptr : &publications_[it->second];
}

std::optional<std::size_t> Corpus::author_index(std::string_view id) const {
    auto it = author_by_id_.find(std::string(id));
    if (it == author_by_id_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Corpus::venue_index(std::string_view id) const {
    auto it = venue_by_id_.find(std::string(id));
    if (it == venue_by_id_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Corpus::publication_index(std::string_view id) const {
    auto it = publication_by_id_.find(std::string(id));
    if (it == publication_by_id_.end()) return std::nullopt;
    return it->second;
}

std::span<const std::size_t> Corpus::citing_indices(std::size_t pub_index) const {
    return derived_.citing_pubs_of[pub_index];
}

std::span<const std::size_t> Corpus::publication_indices_of_author(
    std::size_t author_index) const {
    return derived_.pubs_of_author[author_index];
}

std::span<const std::size_t> Corpus::outreach_indices_of_author(std::size_t author_index) const {
    return derived_.outreach_of_author[author_index];
}

std::span<const std::size_t> Corpus::publication_indices_of_venue_year(std::size_t venue_index,
                                                                       int year) const {
    auto it = derived_.pubs_of_venue_year.find({venue_index, year});
    if (it == derived_.pubs_of_venue_year.end()) return {};
    return it->second;
}

bool Corpus::operator==(const Corpus& other) const {
    return authors_ == other.authors_ && venues_ == other.venues_ &&
           publications_ == other.publications_ && citations_ == other.citations_ &&
           feedback_ == other.feedback_ && outreach_ == other.outreach_;
}

namespace {

struct Validator {
    std::vector<Issue> errors;
    std::vector<Issue> warnings;

    void error(std::string message, const std::string& where) {
        errors.push_back({Severity::error, std::move(message), where});
    }
    void warn(std::string message, const std::string& where) {
        warnings.push_back({Severity::warning, std::move(message), where});
    }
};

}  // namespace

BuildReport build_corpus(CorpusSeed seed) {
    Validator v;

    std::unordered_map<std::string_view, const Located<Author>*> authors_by_id;
    for (const auto& a : seed.authors) {
        if (a.value.id.empty()) {
            v.error("author with empty id", a.where);
            continue;
        }
        if (!authors_by_id.emplace(a.value.id, &a).second)
            v.error("duplicate author id " + a.value.id, a.where);
    }
    std::unordered_map<std::string_view, const Located<Venue>*> venues_by_id;
    for (const auto& ven : seed.venues) {
        if (ven.value.id.empty()) {
            v.error("venue with empty id", ven.where);
            continue;
        }
        if (!venues_by_id.emplace(ven.value.id, &ven).second)
            v.error("duplicate venue id " + ven.value.id, ven.where);
    }
    std::unordered_map<std::string_view, Located<Publication>*> pubs_by_id;
    for (auto& p : seed.publications) {
        if (p.value.id.empty()) {
            v.error("publication with empty id", p.where);
            continue;
        }
        if (!pubs_by_id.emplace(p.value.id, &p).second)
            v.error("duplicate publication id " + p.value.id, p.where);
    }

    for (auto& p : seed.publications) {
        Publication& pub = p.value;
        if (pub.author_ids.empty())
            v.error("publication " + pub.id + " has an empty author list", p.where);
        std::unordered_set<std::string_view> seen;
        for (const std::string& aid : pub.author_ids) {
            if (!seen.insert(aid).second) {
                v.error("publication " + pub.id + " lists author " + aid + " twice", p.where);
                continue;
            }
            auto it = authors_by_id.find(aid);
            if (it == authors_by_id.end()) {
                v.error("dangling author reference " + aid, p.where);
            } else if (it->second->value.role == Role::undergraduate) {
                // Seed the stored flag from roles at ingest time; the flag
                // outlives later role changes.
                pub.undergrad_coauthor = true;
            }
        }
        if (!venues_by_id.contains(pub.venue_id))
            v.error("dangling venue reference " + pub.venue_id, p.where);
    }

    std::set<std::pair<std::string_view, std::string_view>> citation_pairs;
    for (const auto& c : seed.citations) {
        const CitationEdge& edge = c.value;
        auto citing = pubs_by_id.find(edge.citing_id);
        auto cited = pubs_by_id.find(edge.cited_id);
        if (citing == pubs_by_id.end())
            v.error("dangling citing publication reference " + edge.citing_id, c.where);
        if (cited == pubs_by_id.end())
            v.error("dangling cited publication reference " + edge.cited_id, c.where);
        if (edge.citing_id == edge.cited_id && !edge.citing_id.empty())
            v.error("publication " + edge.citing_id + " cites itself", c.where);
        if (!citation_pairs.emplace(edge.citing_id, edge.cited_id).second)
            v.error("duplicate citation " + edge.citing_id + " -> " + edge.cited_id, c.where);
        if (citing != pubs_by_id.end() && cited != pubs_by_id.end() &&
            edge.citing_id != edge.cited_id &&
            citing->second->value.year < cited->second->value.year)
            v.warn("citation " + edge.citing_id + " -> " + edge.cited_id +
                       " predates the cited work (" +
                       std::to_string(citing->second->value.year) + " < " +
                       std::to_string(cited->second->value.year) + ")",
                   c.where);
    }

    std::unordered_set<std::string_view> pubs_with_feedback;
    for (const auto& f : seed.feedback) {
        const FeedbackRecord& record = f.value;
        auto it = pubs_by_id.find(record.publication_id);
        if (it == pubs_by_id.end()) {
            v.error("dangling publication reference " + record.publication_id, f.where);
            continue;
        }
        pubs_with_feedback.insert(record.publication_id);
        if (record.date.year < it->second->value.year)
            v.error("feedback dated " + to_string(record.date) + " precedes publication year " +
                        std::to_string(it->second->value.year) + " of " + record.publication_id,
                    f.where);
    }
    for (const auto& p : seed.publications) {
        if (p.value.feedback_registered && !pubs_with_feedback.contains(p.value.id))
            v.error("publication " + p.value.id +
                        " is marked feedback_registered but has no feedback record",
                    p.where);
    }

    for (const auto& o : seed.outreach) {
        if (!authors_by_id.contains(o.value.author_id))
            v.error("dangling author reference " + o.value.author_id, o.where);
    }

    for (const auto& a : seed.authors) {
        if (!a.value.birth_year) continue;
        for (const auto& p : seed.publications) {
            for (const std::string& aid : p.value.author_ids) {
                if (aid == a.value.id && p.value.year < *a.value.birth_year) {
                    v.error("author " + a.value.id + " has birth_year " +
                                std::to_string(*a.value.birth_year) +
                                " after publication year " + std::to_string(p.value.year) +
                                " of " + p.value.id,
                            a.where);
                }
            }
        }
    }

    if (!v.errors.empty()) return {std::nullopt, std::move(v.errors), std::move(v.warnings)};

    std::vector<Author> authors;
    authors.reserve(seed.authors.size());
    for (auto& a : seed.authors) authors.push_back(std::move(a.value));
    std::vector<Venue> venues;
    venues.reserve(seed.venues.size());
    for (auto& ven : seed.venues) venues.push_back(std::move(ven.value));
    std::vector<Publication> publications;
    publications.reserve(seed.publications.size());
    for (auto& p : seed.publications) publications.push_back(std::move(p.value));
    std::vector<CitationEdge> citations;
    citations.reserve(seed.citations.size());
    for (auto& c : seed.citations) citations.push_back(std::move(c.value));
    std::vector<FeedbackRecord> feedback;
    feedback.reserve(seed.feedback.size());
    for (auto& f : seed.feedback) feedback.push_back(std::move(f.value));
    std::vector<OutreachAction> outreach;
    outreach.reserve(seed.outreach.size());
    for (auto& o : seed.outreach) outreach.push_back(std::move(o.value));

    Corpus corpus(std::move(authors), std::move(venues), std::move(publications),
                  std::move(citations), std::move(feedback), std::move(outreach));
    return {std::move(corpus), {}, std::move(v.warnings)};
}

CitationTally citations_received(const Corpus& corpus, std::string_view publication_id) {
    auto index = corpus.publication_index(publication_id);
    if (!index)
        throw DomainError(Errc::unknown_id,
                          "unknown publication id " + std::string(publication_id));
    CitationTally tally;
    for (std::size_t citing : corpus.citing_indices(*index)) {
        ++tally.total;
        ++tally.by_year[corpus.publications()[citing].year];
    }
    return tally;
}

}  // namespace biblio
