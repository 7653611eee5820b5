#include "biblio/alternative_indices.hpp"

#include <algorithm>

#include "biblio/classic_indices.hpp"
#include "biblio/errors.hpp"

namespace biblio {

int collaboration_target_h(int senior_h) {
    if (senior_h < 0) throw DomainError(Errc::invalid_inputs, "negative h-index");
    // nearest integer to senior_h / 10, ties away from zero
    return (senior_h + 5) / 10;
}

PairingTarget pairing_target(const Corpus& corpus, std::string_view senior_id, int tolerance) {
    if (tolerance < 0) throw DomainError(Errc::invalid_inputs, "negative tolerance");
    int senior_h = h_index(corpus, senior_id);
    if (senior_h < 1)
        throw DomainError(Errc::no_meaningful_target,
                          "author " + std::string(senior_id) +
                              " has h-index 0; the scaled target rounds to 0");
    PairingTarget target;
    target.senior_id = std::string(senior_id);
    target.senior_h = senior_h;
    target.target_h = collaboration_target_h(senior_h);
    target.tolerance = tolerance;
    return target;
}

double h_col(const CollaborationCount& count) {
    if (count.joint_publications < 0 || count.joint_publications > count.senior_total_publications)
        throw DomainError(Errc::invalid_inputs,
                          "joint publications outside [0, senior total]");
    if (count.senior_total_publications == 0)
        throw DomainError(Errc::undefined_denominator, "senior author has no publications");
    return static_cast<double>(count.joint_publications) /
           static_cast<double>(count.senior_total_publications);
}

std::pair<std::string, std::string> orient_pair(const Corpus& corpus, std::string_view a,
                                                std::string_view b) {
    if (a == b)
        throw DomainError(Errc::invalid_pair, "pair (" + std::string(a) + ", " + std::string(b) +
                                                  ") names one author twice");
    int h_a = h_index(corpus, a);
    int h_b = h_index(corpus, b);
    // collaborator 1 is the higher-h author; equal h falls back to id order
    if (h_a > h_b || (h_a == h_b && a < b)) return {std::string(a), std::string(b)};
    return {std::string(b), std::string(a)};
}

PairCollaboration collaboration_for_pair(const Corpus& corpus, std::string_view a,
                                         std::string_view b, HcolDenominator denominator) {
    auto [senior, junior] = orient_pair(corpus, a, b);
    std::size_t senior_index = *corpus.author_index(senior);
    std::size_t junior_index = *corpus.author_index(junior);

    PairCollaboration pair;
    pair.senior_id = senior;
    pair.junior_id = junior;

    auto senior_pubs = corpus.publication_indices_of_author(senior_index);
    auto junior_pubs = corpus.publication_indices_of_author(junior_index);
    for (std::size_t p : senior_pubs) {
        if (std::find(junior_pubs.begin(), junior_pubs.end(), p) != junior_pubs.end())
            ++pair.counts.joint_publications;
    }
    if (denominator == HcolDenominator::total_publications) {
        pair.counts.senior_total_publications = static_cast<long long>(senior_pubs.size());
    } else {
        for (std::size_t p : senior_pubs) {
            if (corpus.publications()[p].author_ids.size() == 1)
                ++pair.counts.senior_total_publications;
        }
    }
    return pair;
}

double h_col_for_pair(const Corpus& corpus, std::string_view a, std::string_view b,
                      HcolDenominator denominator) {
    PairCollaboration pair = collaboration_for_pair(corpus, a, b, denominator);
    if (denominator == HcolDenominator::solo_publications) {
        // joint publications are never solo-authored, so the [0, 1] bound
        // does not apply in this mode
        if (pair.counts.senior_total_publications == 0)
            throw DomainError(Errc::undefined_denominator,
                              "senior author " + pair.senior_id +
                                  " has no solo-authored publications");
        return static_cast<double>(pair.counts.joint_publications) /
               static_cast<double>(pair.counts.senior_total_publications);
    }
    return h_col(pair.counts);
}

double academic_impact_index(const AiiInputs& inputs) {
    if (inputs.undergrad_coauthored < 0 ||
        inputs.undergrad_coauthored > inputs.total_publications)
        throw DomainError(Errc::invalid_inputs,
                          "undergrad-coauthored count outside [0, total publications]");
    if (inputs.total_publications == 0)
        throw DomainError(Errc::undefined_denominator, "no publications");
    if (inputs.age_years <= 0)
        throw DomainError(Errc::undefined_denominator, "non-positive researcher age");
    return static_cast<double>(inputs.undergrad_coauthored) /
           (static_cast<double>(inputs.total_publications) /
            static_cast<double>(inputs.age_years));
}

AiiInputs aii_inputs_for_author(const Corpus& corpus, std::string_view author_id,
                                int evaluation_year) {
    auto index = corpus.author_index(author_id);
    if (!index)
        throw DomainError(Errc::unknown_id, "unknown author id " + std::string(author_id));
    const Author& author = corpus.authors()[*index];
    if (!author.birth_year)
        throw DomainError(Errc::missing_age,
                          "author " + std::string(author_id) + " has no birth_year");
    AiiInputs inputs;
    inputs.age_years = evaluation_year - *author.birth_year;
    for (std::size_t p : corpus.publication_indices_of_author(*index)) {
        const Publication& pub = corpus.publications()[p];
        if (pub.year > evaluation_year) continue;
        ++inputs.total_publications;
        if (pub.undergrad_coauthor) ++inputs.undergrad_coauthored;
    }
    return inputs;
}

double academic_impact_index_for_author(const Corpus& corpus, std::string_view author_id,
                                        int evaluation_year) {
    AiiInputs inputs = aii_inputs_for_author(corpus, author_id, evaluation_year);
    if (inputs.total_publications == 0)
        throw DomainError(Errc::undefined_denominator,
                          "author " + std::string(author_id) + " has no publications up to " +
                              std::to_string(evaluation_year));
    return academic_impact_index(inputs);
}

double responsible_social_impact(const RsiInputs& inputs) {
    if (inputs.feedback_publications < 0 ||
        inputs.feedback_publications > inputs.total_publications)
        throw DomainError(Errc::invalid_inputs,
                          "feedback count outside [0, total publications]");
    if (inputs.outreach_actions < 0)
        throw DomainError(Errc::invalid_inputs, "negative outreach count");
    if (inputs.total_publications == 0)
        throw DomainError(Errc::undefined_denominator, "no publications");
    return static_cast<double>(inputs.feedback_publications) /
               static_cast<double>(inputs.total_publications) +
           static_cast<double>(inputs.outreach_actions) * 0.1;
}

RsiInputs rsi_inputs_for_author(const Corpus& corpus, std::string_view author_id) {
    auto index = corpus.author_index(author_id);
    if (!index)
        throw DomainError(Errc::unknown_id, "unknown author id " + std::string(author_id));
    RsiInputs inputs;
    for (std::size_t p : corpus.publication_indices_of_author(*index)) {
        ++inputs.total_publications;
        if (corpus.publications()[p].feedback_registered) ++inputs.feedback_publications;
    }
    inputs.outreach_actions =
        static_cast<long long>(corpus.outreach_indices_of_author(*index).size());
    return inputs;
}

double responsible_social_impact_for_author(const Corpus& corpus, std::string_view author_id) {
    RsiInputs inputs = rsi_inputs_for_author(corpus, author_id);
    if (inputs.total_publications == 0)
        throw DomainError(Errc::undefined_denominator,
                          "author " + std::string(author_id) + " has no publications");
    return responsible_social_impact(inputs);
}

}  // namespace biblio
