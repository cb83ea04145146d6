#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prequant/order.hpp"

namespace prequant {

class OrderedMagma {
public:
    OrderedMagma();
    // Rejects tables that are not order-compatible. Unit and annihilator are detected.
    OrderedMagma(FinitePoset p, std::vector<Index> table, std::string name = {});
    static OrderedMagma from_function(FinitePoset p, const std::function<Index(Index, Index)>& mul,
                                      std::string name = {});

    const FinitePoset& poset() const;
    std::size_t size() const { return poset().size(); }
    std::uint64_t id() const { return poset().id(); }
    const std::string& name() const;
    const std::string& label(Index i) const { return poset().label(i); }
    bool leq(Index a, Index b) const { return poset().leq(a, b); }

    Index mul(Index a, Index b) const;
    const std::vector<Index>& table() const;
    std::optional<Index> unit() const;
    std::optional<Index> annihilator() const;

    // x/a and a\x; kNone when the largest element does not exist.
    Index left_residual(Index x, Index a) const;
    Index right_residual(Index x, Index a) const;

    ElementId element(Index i) const { return poset().element(i); }
    Index index_of(ElementId e) const { return poset().index_of(e); }
    ElementId at(std::string_view label) const { return poset().at(label); }

    // Product set XY.
    ElementSet product(const ElementSet& xs, const ElementSet& ys) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

struct Profile {
    bool sup_magma = false;
    bool near_sup_magma = false;
    bool dcpo_magma = false;
    bool bounded_complete = false;
    bool bounded_above = false;
    bool with_annihilator = false;
    bool prequantale = false;
    bool near_prequantale = false;
    bool semiprequantale = false;
    bool prequantic_semilattice = false;
    bool multiplicative_semilattice = false;
    bool scott_topological = false;
    bool residuated = false;
    bool near_residuated = false;
    bool associative = false;
    bool commutative = false;
    bool unital = false;
    bool precoherent = false;

    bool quantale() const { return prequantale && associative; }
    bool near_quantale() const { return near_prequantale && associative; }
    bool multiplicative_lattice() const { return quantale() && commutative && unital; }
    bool near_multiplicative_lattice() const { return near_quantale() && commutative && unital; }
    bool operator==(const Profile&) const = default;

    std::vector<std::pair<std::string, bool>> rows() const;
};

// Each flag is decided by at least two equivalent characterizations; a mismatch throws internal.
Profile classify(const OrderedMagma& m);

// Position within the implication diagram: the strongest named classes that hold.
std::vector<std::string> diagram_position(const Profile& p);

struct Residual {
    std::optional<ElementId> left;   // x/a
    std::optional<ElementId> right;  // a\x
};
Residual residual(const OrderedMagma& m, ElementId x, ElementId a);

struct DistinguishedSets {
    std::vector<Index> units;        // U(M)
    std::vector<Index> invertibles;  // Inv(M)
    std::vector<Index> idempotents;
    std::optional<std::vector<Index>> above_unit_idempotents;  // R(M), present iff unital
    std::vector<Index> compacts;
    bool compacts_form_submagma = false;
};
DistinguishedSets distinguished_sets(const OrderedMagma& m);
// Idempotents above the unit; throws no-unit.
std::vector<Index> r_elements(const OrderedMagma& m);

bool is_sup_spanning(const OrderedMagma& m, const ElementSet& sigma);
bool is_sup_spanning(const OrderedMagma& m, std::span<const ElementId> sigma);
bool is_scott_topological(const OrderedMagma& m);

bool is_associative(const OrderedMagma& m);
bool is_commutative(const OrderedMagma& m);
bool is_closed_under_mul(const OrderedMagma& m, const ElementSet& s);

OrderedMagma adjoin_annihilator(const OrderedMagma& m, const std::string& label = "⊥0");
OrderedMagma adjoin_top(const OrderedMagma& m, const std::string& label = "⊤");

// Sub-ordered-magma on a multiplicatively closed subset, with the inclusion.
struct Submagma {
    OrderedMagma parent;
    std::vector<Index> elements;  // parent indices, ascending index order
    OrderedMagma magma;
    Index to_parent(Index i) const { return elements.at(i); }
    std::optional<Index> from_parent(Index p) const;
};
Submagma submagma(const OrderedMagma& m, const ElementSet& s);

// A map between finite ordered magmas, not yet assumed to be a morphism of any kind.
struct MagmaMap {
    OrderedMagma source;
    OrderedMagma target;
    std::vector<Index> table;
    Index operator()(Index x) const { return table.at(x); }
};
bool is_homomorphism(const MagmaMap& f);
bool is_order_preserving(const MagmaMap& f);
bool is_order_embedding(const MagmaMap& f);
// f(sup X) = sup f(X) for every nonempty X whose supremum exists.
bool preserves_nonempty_sups(const MagmaMap& f);
bool preserves_bottom(const MagmaMap& f);
bool is_isomorphism(const MagmaMap& f);
MagmaMap compose(const MagmaMap& g, const MagmaMap& f);  // g after f
MagmaMap identity_morphism(const OrderedMagma& m);

}  // namespace prequant
