#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prequant/magma.hpp"

namespace prequant {

// Any self-map of a finite carrier, as a dense table.
class SelfMap {
public:
    SelfMap() = default;
    SelfMap(const FinitePoset& p, std::vector<Index> table, std::string name = {});

    std::uint64_t carrier() const { return carrier_; }
    std::size_t size() const { return table_.size(); }
    Index operator()(Index x) const { return table_[x]; }
    const std::vector<Index>& table() const { return table_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    ElementId apply(const FinitePoset& p, ElementId x) const;
    // Throws foreign-element unless the map was built on p.
    void check_carrier(const FinitePoset& p) const;

    bool operator==(const SelfMap& o) const { return carrier_ == o.carrier_ && table_ == o.table_; }
    bool operator<(const SelfMap& o) const { return table_ < o.table_; }

protected:
    std::uint64_t carrier_ = 0;
    std::vector<Index> table_;
    std::string name_;
};

// A self-map verified order-preserving at construction.
class MonotoneMap : public SelfMap {
public:
    MonotoneMap() = default;
    MonotoneMap(const FinitePoset& p, std::vector<Index> table, std::string name = {});
    static MonotoneMap identity(const FinitePoset& p);
    // x -> top; requires a top element.
    static MonotoneMap top(const FinitePoset& p);
};

SelfMap compose(const SelfMap& outer, const SelfMap& inner);  // outer after inner
bool pointwise_leq(const FinitePoset& p, const SelfMap& a, const SelfMap& b);
std::vector<Index> fixed_points(const SelfMap& s);
ElementSet fixed_set(const FinitePoset& p, const SelfMap& s);

bool is_expansive(const FinitePoset& p, const SelfMap& s);
bool is_order_preserving(const FinitePoset& p, const SelfMap& s);
bool is_idempotent(const SelfMap& s);
bool is_preclosure(const FinitePoset& p, const SelfMap& s);
// Cross-checked against the single axiom x <= y* iff x* <= y*.
bool is_closure(const FinitePoset& p, const SelfMap& s);

struct NucleusConditions {
    bool closure = false;
    bool products_below = false;    // x*y* <= (xy)*
    bool star_products = false;     // (x*y*)* = (xy)*
    bool one_sided = false;         // xy* <= (xy)* and x*y <= (xy)*
    bool strict = false;            // x*y* = (xy)*
    bool star_associative = false;  // only meaningful on ordered monoids
    std::optional<bool> unital_equivalences;  // xy <= z* iff xy* <= z* iff x*y <= z*
    std::optional<bool> unital_implication;   // x <= x*, and xy <= z* implies x*y* <= z*
};
// Raw evaluation of every condition, with no agreement enforced.
NucleusConditions nucleus_conditions(const OrderedMagma& m, const SelfMap& s);
// Throws internal when equivalent conditions disagree.
bool is_nucleus(const OrderedMagma& m, const SelfMap& s);
bool is_strict_nucleus(const OrderedMagma& m, const SelfMap& s);

// a with (ax)* = a x* and (xa)* = x* a for all x.
ElementSet transportable(const OrderedMagma& m, const SelfMap& s);

// Finest closure coarser than a preclosure, by iterating to a fixpoint.
MonotoneMap closure_from_preclosure(const FinitePoset& p, const SelfMap& plus);
struct PreclosureHull {
    MonotoneMap closure;
    bool multiplicative_hypothesis = false;  // xy+ <= (xy)+ and x+y <= (xy)+ on a near residuated magma
    bool nucleus = false;
};
PreclosureHull closure_from_preclosure(const OrderedMagma& m, const SelfMap& plus);

MonotoneMap nuclei_meet(const OrderedMagma& m, std::span<const SelfMap> gamma);
MonotoneMap nuclei_join(const OrderedMagma& m, std::span<const SelfMap> gamma);

// The closure whose image is c, when every fiber {a in c : a >= x} has a least element.
std::optional<MonotoneMap> closure_from_image(const FinitePoset& p, const ElementSet& c);

struct EnumerationOptions {
    bool cross_check = true;
    std::size_t max_results = 4'000'000;
};
std::vector<MonotoneMap> enumerate_closures(const FinitePoset& p, const EnumerationOptions& opt = {});
std::vector<MonotoneMap> enumerate_nuclei(const OrderedMagma& m, const EnumerationOptions& opt = {});

struct QuotientMagma {
    OrderedMagma parent;
    MonotoneMap nucleus;
    std::vector<Index> image;  // parent indices of M*, ascending
    OrderedMagma magma;        // M* under star-multiplication
    Index to_parent(Index q) const { return image.at(q); }
    Index from_parent(Index x) const;  // index in M* of x*
};
QuotientMagma quotient(const OrderedMagma& m, const SelfMap& s);

// x -> sup{y : f(y) = f(x)} for a near sup-preserving homomorphism out of a near prequantale.
MonotoneMap nucleus_of_morphism(const MagmaMap& f);

bool is_saturated(const OrderedMagma& m, const ElementSet& n);
bool is_downward_closed(const FinitePoset& p, const ElementSet& n);
// s is a nucleus on n.magma; results are nuclei on the parent extending s.
MonotoneMap induced_lower(const Submagma& n, const SelfMap& s);
MonotoneMap induced_upper(const Submagma& n, const SelfMap& s);

MonotoneMap d_map(const OrderedMagma& m, ElementId a);
ElementId unit_part(const OrderedMagma& m, const SelfMap& s);

ElementId one_bracket(const OrderedMagma& q, ElementId x);
MonotoneMap one_bracket_map(const OrderedMagma& q);

struct NucleusLattice {
    OrderedMagma magma;  // nuclei under pointwise order, join as multiplication
    std::vector<MonotoneMap> nuclei;
    Index index_of(const SelfMap& s) const;
};
NucleusLattice nucleus_lattice(const OrderedMagma& m, const EnumerationOptions& opt = {});

struct TowerReport {
    std::vector<NucleusLattice> levels;  // levels[k] = N^{k+1}(M)
    std::vector<bool> d_is_isomorphism;  // d_- : N^k -> N^{k+1}, k = 0 .. depth-1 (N^0 = M)
    bool stabilizes() const;
};
TowerReport nucleus_tower(const OrderedMagma& m, std::size_t depth = 2,
                          std::size_t level_cap = kEnumerationCap);

struct CompositionJoin {
    std::size_t n = 0;
    MonotoneMap join;
};
// Throws bound-exhausted when no n <= bound certifies the join.
CompositionJoin composition_join_check(const OrderedMagma& m, const SelfMap& s1, const SelfMap& s2,
                                       std::size_t bound);

}  // namespace prequant
