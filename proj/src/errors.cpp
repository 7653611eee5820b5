#include "biblio/errors.hpp"

namespace biblio {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::unknown_id: return "unknown-id";
        case Errc::undefined_denominator: return "undefined-denominator";
        case Errc::missing_age: return "missing-age";
        case Errc::invalid_pair: return "invalid-pair";
        case Errc::invalid_inputs: return "invalid-inputs";
        case Errc::no_meaningful_target: return "no-meaningful-target";
        case Errc::undefined_modularity: return "undefined-modularity";
        case Errc::unlabeled_node: return "unlabeled-node";
    }
    return "unknown-error";
}

}  // namespace biblio
