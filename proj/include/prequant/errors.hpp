#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prequant {

enum class ErrorKind {
    malformed,
    foreign_element,
    undecidable_family,
    carrier_too_large,
    hypothesis_not_met,
    not_a_morphism,
    no_unit,
    missing_infimum,
    not_saturated,
    not_downward_closed,
    not_idempotent_above_unit,
    non_cyclic_element,
    characteristic_not_prime,
    bound_exhausted,
    empty_without_bottom,
    wrong_class,
    not_precoherent,
    iteration_budget,
    not_commutative,
    internal,
};

std::string_view to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// Consistency assertion between two independent computations; a failure is a bug.
inline void ensure(bool cond, const std::string& what) {
    if (!cond) fail(ErrorKind::internal, what);
}

inline void require(bool cond, const std::string& hypothesis) {
    if (!cond) fail(ErrorKind::hypothesis_not_met, hypothesis);
}

}  // namespace prequant
