#include "prequant/errors.hpp"

namespace prequant {

std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::malformed: return "malformed";
        case ErrorKind::foreign_element: return "foreign-element";
        case ErrorKind::undecidable_family: return "undecidable-family";
        case ErrorKind::carrier_too_large: return "carrier-too-large";
        case ErrorKind::hypothesis_not_met: return "hypothesis-not-met";
        case ErrorKind::not_a_morphism: return "not-a-morphism";
        case ErrorKind::no_unit: return "no-unit";
        case ErrorKind::missing_infimum: return "missing-infimum";
        case ErrorKind::not_saturated: return "not-saturated";
        case ErrorKind::not_downward_closed: return "not-downward-closed";
        case ErrorKind::not_idempotent_above_unit: return "not-idempotent-above-unit";
        case ErrorKind::non_cyclic_element: return "non-cyclic-element";
        case ErrorKind::characteristic_not_prime: return "characteristic-not-prime";
        case ErrorKind::bound_exhausted: return "bound-exhausted";
        case ErrorKind::empty_without_bottom: return "empty-input-without-bottom";
        case ErrorKind::wrong_class: return "wrong-class";
        case ErrorKind::not_precoherent: return "not-precoherent";
        case ErrorKind::iteration_budget: return "iteration-budget-exceeded";
        case ErrorKind::not_commutative: return "not-commutative";
        case ErrorKind::internal: return "internal-error";
    }
    return "unknown";
}

}  // namespace prequant
