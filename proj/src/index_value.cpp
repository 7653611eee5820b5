#include "biblio/index_value.hpp"

#include "biblio/alternative_indices.hpp"
#include "biblio/classic_indices.hpp"
#include "biblio/errors.hpp"

namespace biblio {

std::string_view to_string(IndexKind kind) {
    switch (kind) {
        case IndexKind::h: return "h";
        case IndexKind::impact_factor: return "if";
        case IndexKind::cite_score: return "cs";
        case IndexKind::mean_citations: return "mean";
        case IndexKind::self_citation_rate: return "selfcite";
        case IndexKind::hcol: return "hcol";
        case IndexKind::aii: return "aii";
        case IndexKind::rsi: return "rsi";
    }
    return "";
}

std::optional<IndexKind> index_kind_from_string(std::string_view text) {
    if (text == "h") return IndexKind::h;
    if (text == "if") return IndexKind::impact_factor;
    if (text == "cs") return IndexKind::cite_score;
    if (text == "mean") return IndexKind::mean_citations;
    if (text == "selfcite") return IndexKind::self_citation_rate;
    if (text == "hcol") return IndexKind::hcol;
    if (text == "aii") return IndexKind::aii;
    if (text == "rsi") return IndexKind::rsi;
    return std::nullopt;
}

namespace {

double ratio_or_throw(const RatioCounts& counts) {
    if (counts.denominator == 0)
        throw DomainError(Errc::undefined_denominator, "denominator is zero");
    return static_cast<double>(counts.numerator) / static_cast<double>(counts.denominator);
}

}  // namespace

double recompute(const IndexValue& index_value) {
    return std::visit(
        [&](const auto& inputs) -> double {
            using T = std::decay_t<decltype(inputs)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                throw DomainError(Errc::invalid_inputs, "index value carries no inputs");
            } else if constexpr (std::is_same_v<T, WindowedCount>) {
                if (inputs.publications == 0)
                    throw DomainError(Errc::undefined_denominator,
                                      "no publications in the window");
                return static_cast<double>(inputs.citations) /
                       static_cast<double>(inputs.publications);
            } else if constexpr (std::is_same_v<T, RatioCounts>) {
                return ratio_or_throw(inputs);
            } else if constexpr (std::is_same_v<T, CitationProfile>) {
                return static_cast<double>(h_from_counts(inputs.counts_desc));
            } else if constexpr (std::is_same_v<T, AiiInputs>) {
                return academic_impact_index(inputs);
            } else {
                static_assert(std::is_same_v<T, RsiInputs>);
                return responsible_social_impact(inputs);
            }
        },
        index_value.inputs);
}

}  // namespace biblio
