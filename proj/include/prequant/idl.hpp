#pragma once

#include <vector>

#include "prequant/magma.hpp"

namespace prequant {

// Nonempty directed down-set of a carrier.
struct IdealOfPoset {
    std::uint64_t carrier = 0;
    ElementSet members;
};

// Smallest ideal containing x: down-set of the finite joins of x. The empty
// input needs a least element; minimality is checked against a scan of all ideals.
IdealOfPoset down_closure(const FinitePoset& s, const ElementSet& x);

// All ideals of a finite poset, ascending by member mask.
std::vector<ElementSet> poset_ideals(const FinitePoset& p);

struct IdealCompletion {
    OrderedMagma source;
    std::vector<ElementSet> ideals;  // ideal k is element k of magma
    OrderedMagma magma;              // inclusion order, down-closure of the product set
    std::vector<Index> principal;    // source x -> index of its principal ideal
    Index index_of(const ElementSet& ideal) const;
};
// Throws wrong-class unless m is a multiplicative or prequantic semilattice.
IdealCompletion idl(const OrderedMagma& m);

// Compact part as a sub-ordered magma; throws not-precoherent.
Submagma k_functor(const OrderedMagma& q);

struct RoundTrip {
    MagmaMap witness;  // explicit bijection
    bool isomorphism = false;
};
// x -> down x, from m onto K(Idl(m)).
RoundTrip roundtrip_semilattice(const OrderedMagma& m);
// I -> sup I, from Idl(K(q)) onto q.
RoundTrip roundtrip_prequantale(const OrderedMagma& q);

// Idl(g)(I) = down g(I); g must be a semilattice morphism between the sources.
MagmaMap idl_of_morphism(const IdealCompletion& src, const IdealCompletion& dst, const MagmaMap& g);
// K(f)(x) = f(x); f must preserve nonempty sups, products and compactness.
MagmaMap k_of_morphism(const Submagma& src, const Submagma& dst, const MagmaMap& f);

}  // namespace prequant
