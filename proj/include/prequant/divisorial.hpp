#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "prequant/nucleus.hpp"

namespace prequant {

enum class VStrategy { lin, rs, residual, units, all };
VStrategy parse_strategy(const std::string& text);
std::string to_string(VStrategy s);

// Coarsest nucleus fixing a. A single strategy throws hypothesis-not-met when
// it does not apply; `all` computes every applicable one and asserts agreement.
MonotoneMap v(const OrderedMagma& q, ElementId a, VStrategy strategy = VStrategy::all);

struct VStrategies {
    std::optional<MonotoneMap> lin;       // near prequantale
    std::optional<MonotoneMap> rs;        // unital near quantale
    std::optional<MonotoneMap> residual;  // residuated ordered monoid, a cyclic
    std::optional<MonotoneMap> units;     // associative unital near U-lattice
    std::size_t applicable() const;
    bool agree() const;
};
// Raw evaluation; disagreement is reported, not thrown.
VStrategies v_strategies(const OrderedMagma& q, ElementId a);

// Q^s, after asserting s = meet of v(a) over a in Q^s.
std::vector<Index> divisorial_decomposition(const OrderedMagma& q, const SelfMap& s);

struct SimplicityReport {
    bool by_enumeration = false;         // only d and e
    bool by_divisorial = false;          // v(a) = d for all a < top
    std::optional<bool> by_residuals;    // near multiplicative lattices: x/(x/y) = y below top
    bool simple() const { return by_enumeration; }
};
// Throws internal when the routes disagree.
SimplicityReport simplicity(const OrderedMagma& q);
bool is_simple(const OrderedMagma& q);

struct GVSet {
    std::vector<Index> elements;
    bool contains(Index z) const;
};
GVSet gv_elements(const OrderedMagma& m, const SelfMap& s);

struct CyclicityReport {
    bool is_cyclic = true;
    std::optional<std::pair<Index, Index>> counterexample;  // xy <= a, yx not <= a; lexicographically least
};
CyclicityReport is_cyclic(const OrderedMagma& m, ElementId a);

// Throws hypothesis-not-met naming the first missing hypothesis.
void check_stable_hypotheses(const OrderedMagma& q);

// x -> sup{x/z : z in s-GV}, asserted the coarsest stable nucleus below s.
MonotoneMap stable_closure(const OrderedMagma& q, const SelfMap& s);

struct StableConditions {
    bool definition = false;  // finite meets and residuals by compacts
    bool meet_one_and_residuals = false;
    bool residual_meet_one = false;
    bool equals_bar = false;
    bool agree() const;
};
StableConditions stable_conditions(const OrderedMagma& q, const SelfMap& s);
bool is_stable(const OrderedMagma& q, const SelfMap& s);

// (s_f)-bar via the compact GV formula; needs a coherent near multiplicative lattice.
MonotoneMap star_w(const OrderedMagma& q, const SelfMap& s);
MonotoneMap t_of(const OrderedMagma& q, ElementId a);
MonotoneMap v_bar(const OrderedMagma& q, ElementId a);
MonotoneMap w_of(const OrderedMagma& q, ElementId a);

// x -> meet{uav : u, v in U(Q), x <= uav}.
MonotoneMap v_via_units(const OrderedMagma& q, ElementId a);

}  // namespace prequant
