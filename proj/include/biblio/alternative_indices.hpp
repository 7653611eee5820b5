#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "biblio/corpus.hpp"
#include "biblio/index_value.hpp"

namespace biblio {

// Partner band for a senior author: the intended collaborator h-index is
// the senior's h times 0.1, rounded to the nearest integer with ties away
// from zero; tolerance widens it to [target_h - tolerance, target_h + tolerance].
struct PairingTarget {
    std::string senior_id;
    int senior_h = 0;
    int target_h = 0;
    int tolerance = 0;

    int band_low() const { return target_h - tolerance; }
    int band_high() const { return target_h + tolerance; }
    bool in_band(int h) const { return h >= band_low() && h <= band_high(); }
};

// Nearest integer to h / 10 with ties away from zero, in exact integer
// arithmetic. Requires h >= 0.
int collaboration_target_h(int senior_h);

// Throws no_meaningful_target when the senior's h-index is 0 (the scaled
// target rounds to 0 and there is no partner band), unknown_id for an
// unresolved author, invalid_inputs for a negative tolerance.
PairingTarget pairing_target(const Corpus& corpus, std::string_view senior_id, int tolerance);

struct CollaborationCount {
    long long joint_publications = 0;
    long long senior_total_publications = 0;

    bool operator==(const CollaborationCount&) const = default;
};

// Joint publications divided by the senior author's publication count;
// in [0, 1]. Throws undefined_denominator when the denominator is 0 and
// invalid_inputs when joint exceeds total.
double h_col(const CollaborationCount& count);

// "Publications of collaborator 1" can be read two ways; the default takes
// the senior's full publication count, the alternative only solo-authored
// publications.
enum class HcolDenominator { total_publications, solo_publications };

// A coauthor pair oriented for the collaboration index: the senior is the
// author with the higher h-index, ties resolved by smaller id.
struct PairCollaboration {
    std::string senior_id;
    std::string junior_id;
    CollaborationCount counts;
};

// Orients (a, b) by h-index, then id. Throws invalid_pair when a == b.
std::pair<std::string, std::string> orient_pair(const Corpus& corpus, std::string_view a,
                                                std::string_view b);

PairCollaboration collaboration_for_pair(
    const Corpus& corpus, std::string_view a, std::string_view b,
    HcolDenominator denominator = HcolDenominator::total_publications);

// Collaboration index for a concrete pair, oriented as above.
double h_col_for_pair(const Corpus& corpus, std::string_view a, std::string_view b,
                      HcolDenominator denominator = HcolDenominator::total_publications);

// undergrad-coauthored count divided by (total publications / age):
// equivalently undergrad_coauthored * age / total. Throws
// undefined_denominator when total is 0 or age <= 0, invalid_inputs when
// the undergrad count exceeds the total.
double academic_impact_index(const AiiInputs& inputs);

// Counts taken from the corpus at an evaluation year: publications of that
// year or earlier, age = evaluation_year - birth_year. Throws missing_age
// for an author without birth_year.
AiiInputs aii_inputs_for_author(const Corpus& corpus, std::string_view author_id,
                                int evaluation_year);
double academic_impact_index_for_author(const Corpus& corpus, std::string_view author_id,
                                        int evaluation_year);

// Feedback-backed share of publications plus 0.1 per outreach action.
// Uncapped: enough outreach pushes it past 1. Throws undefined_denominator
// when the author has no publications.
double responsible_social_impact(const RsiInputs& inputs);

RsiInputs rsi_inputs_for_author(const Corpus& corpus, std::string_view author_id);
double responsible_social_impact_for_author(const Corpus& corpus, std::string_view author_id);

}  // namespace biblio
