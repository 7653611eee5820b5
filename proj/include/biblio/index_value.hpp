#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace biblio {

enum class IndexKind {
    h,
    impact_factor,
    cite_score,
    mean_citations,
    self_citation_rate,
    hcol,
    aii,
    rsi,
};

// Canonical short names, shared by the CLI and report columns:
// h, if, cs, mean, selfcite, hcol, aii, rsi.
std::string_view to_string(IndexKind kind);
std::optional<IndexKind> index_kind_from_string(std::string_view text);

// Citation/publication counts over a trailing year window. The window is
// {n-1, n-2} for the two-year ratio and {n-1, n-2, n-3} for the three-year
// one; citations count only when the citing publication's year equals n.
struct WindowedCount {
    int evaluation_year = 0;
    std::vector<int> window_years;
    long long citations = 0;
    long long publications = 0;

    bool operator==(const WindowedCount&) const = default;
};

// Numerator/denominator pair backing a plain ratio index.
struct RatioCounts {
    long long numerator = 0;
    long long denominator = 0;

    bool operator==(const RatioCounts&) const = default;
};

// Per-publication citation counts, descending; the h computation's input.
struct CitationProfile {
    std::vector<long long> counts_desc;

    bool operator==(const CitationProfile&) const = default;
};

struct AiiInputs {
    long long undergrad_coauthored = 0;  // publications with undergraduate collaboration
    long long total_publications = 0;
    long long age_years = 0;

    bool operator==(const AiiInputs&) const = default;
};

struct RsiInputs {
    long long feedback_publications = 0;  // publications with registered feedback
    long long total_publications = 0;
    long long outreach_actions = 0;

    bool operator==(const RsiInputs&) const = default;
};

using IndexInputs = std::variant<std::monostate, WindowedCount, RatioCounts, CitationProfile,
                                 AiiInputs, RsiInputs>;

// A computed index value together with the exact counts it came from.
// Re-applying the formula to `inputs` reproduces `value` bit for bit.
struct IndexValue {
    IndexKind kind = IndexKind::h;
    std::string subject_id;
    std::optional<int> evaluation_year;
    double value = 0.0;
    IndexInputs inputs;

    bool operator==(const IndexValue&) const = default;
};

// Re-applies the index formula to the stored inputs. Throws the same
// DomainError the original computation would have thrown.
double recompute(const IndexValue& index_value);

}  // namespace biblio
