#pragma once

#include <stdexcept>
#include <string>

namespace biblio {

// Index computations fail loudly instead of imputing values: every index
// divides by corpus-derived quantities, so "no data" must stay distinct
// from "value 0".
enum class Errc {
    unknown_id,
    undefined_denominator,
    missing_age,
    invalid_pair,
    invalid_inputs,
    no_meaningful_target,
    undefined_modularity,
    unlabeled_node,
};

std::string_view to_string(Errc code);

class DomainError : public std::runtime_error {
public:
    DomainError(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace biblio
