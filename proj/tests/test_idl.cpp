#include <doctest.h>

#include "oracle.hpp"
#include "prequant/idl.hpp"
#include "prequant/instances.hpp"

using namespace prequant;

namespace {

OrderedMagma entry(const std::string& key) {
    for (auto& e : corpus())
        if (e.key == key) return e.magma;
    FAIL("missing corpus key " << key);
    return {};
}

ElementSet set_of(const FinitePoset& p, std::initializer_list<const char*> labels) {
    ElementSet s(p.size());
    for (auto l : labels) s.set(p.index_of(p.at(l)));
    return s;
}

// Nonempty, down-closed, every pair bounded inside.
std::size_t raw_ideal_count(const FinitePoset& p) {
    const auto n = p.size();
    std::size_t count = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (Index x = 0; x < n && ok; ++x) {
            if (!(mask >> x & 1)) continue;
            for (Index y = 0; y < n && ok; ++y) {
                if (p.leq(y, x) && !(mask >> y & 1)) ok = false;
                if (!(mask >> y & 1)) continue;
                bool bounded = false;
                for (Index z = 0; z < n; ++z) bounded = bounded || ((mask >> z & 1) && p.leq(x, z) && p.leq(y, z));
                ok = ok && bounded;
            }
        }
        count += ok;
    }
    return count;
}

MagmaMap chain_map(const OrderedMagma& a, const OrderedMagma& b, std::vector<Index> t) { return {a, b, std::move(t)}; }

}  // namespace

TEST_CASE("down closures") {
    const auto p = diamond();
    CHECK(down_closure(p, set_of(p, {"a"})).members == set_of(p, {"0", "a"}));
    CHECK(down_closure(p, set_of(p, {"a", "b"})).members == p.full_set());
    CHECK(down_closure(p, ElementSet(p.size())).members == set_of(p, {"0"}));
    CHECK(down_closure(p, set_of(p, {"0"})).carrier == p.id());
    const auto anti = FinitePoset::antichain(2);
    try {
        down_closure(anti, ElementSet(anti.size()));
        FAIL("expected empty-without-bottom");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::empty_without_bottom);
    }
    CHECK_THROWS_AS(down_closure(p, ElementSet(3)), Error);
}

TEST_CASE("ideal counts agree with a mask scan") {
    for (const auto& p : {diamond(), pentagon(), m3(), FinitePoset::chain(5), FinitePoset::antichain(3)}) {
        CHECK(poset_ideals(p).size() == raw_ideal_count(p));
    }
    // finite lattices: every ideal is principal
    CHECK(poset_ideals(pentagon()).size() == 5);
    CHECK(poset_ideals(FinitePoset::antichain(3)).size() == 3);
    CHECK_THROWS_AS(poset_ideals(FinitePoset::chain(21)), Error);
}

TEST_CASE("ideal completion of the two-element chain") {
    const auto q = two_element_lattice();
    const auto c = idl(q);
    CHECK(c.magma.size() == 2);
    CHECK(c.magma.name() == "Idl(" + q.name() + ")");
    for (Index x = 0; x < q.size(); ++x) CHECK(c.magma.label(c.principal[x]) == "↓" + q.label(x));
    const auto prof = classify(c.magma);
    CHECK(prof.precoherent);
    CHECK(prof.prequantale);
}

TEST_CASE("round trips on the corpus") {
    for (const auto& e : corpus()) {
        CAPTURE(e.key);
        const auto prof = classify(e.magma);
        if (!(prof.multiplicative_semilattice || prof.prequantic_semilattice)) {
            CHECK_THROWS_AS(idl(e.magma), Error);
            continue;
        }
        const auto s = roundtrip_semilattice(e.magma);
        CHECK(s.isomorphism);
        CHECK(is_isomorphism(s.witness));
        if (prof.precoherent && prof.near_prequantale) {
            const auto p = roundtrip_prequantale(e.magma);
            CHECK(p.isomorphism);
            CHECK(is_isomorphism(p.witness));
        }
    }
    try {
        idl(entry("M3-meet"));
        FAIL("expected wrong-class");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::wrong_class);
    }
}

TEST_CASE("K of a precoherent carrier is everything when finite") {
    const auto q = entry("Id(Z/12)");
    const auto k = k_functor(q);
    CHECK(k.magma.size() == q.size());
}

TEST_CASE("Idl is functorial on chain maps") {
    const auto c2 = lattice_magma(FinitePoset::chain(2), LatticeOp::join, "c2");
    const auto c3 = lattice_magma(FinitePoset::chain(3), LatticeOp::join, "c3");
    const auto c4 = lattice_magma(FinitePoset::chain(4), LatticeOp::join, "c4");
    const auto f = chain_map(c2, c3, {0, 2});
    const auto g = chain_map(c3, c4, {1, 2, 3});
    const auto collapse = chain_map(c4, c2, {0, 0, 1, 1});
    const auto i2 = idl(c2), i3 = idl(c3), i4 = idl(c4);

    const auto idf = idl_of_morphism(i2, i3, f);
    const auto idg = idl_of_morphism(i3, i4, g);
    CHECK(idl_of_morphism(i2, i4, compose(g, f)).table == compose(idg, idf).table);
    CHECK(idl_of_morphism(i2, i2, identity_morphism(c2)).table == identity_morphism(i2.magma).table);
    // principal ideals are natural
    for (Index x = 0; x < c2.size(); ++x) CHECK(idf(i2.principal[x]) == i3.principal[f(x)]);
    const auto idc = idl_of_morphism(i4, i2, collapse);
    CHECK(compose(idc, idl_of_morphism(i2, i4, compose(g, f))).table ==
          idl_of_morphism(i2, i2, compose(collapse, compose(g, f))).table);

    // K on the completions undoes Idl
    const auto k3 = k_functor(i3.magma), k4 = k_functor(i4.magma);
    const auto kg = k_of_morphism(k3, k4, idg);
    for (Index x = 0; x < c3.size(); ++x)
        CHECK(k4.to_parent(kg(*k3.from_parent(i3.principal[x]))) == i4.principal[g(x)]);
}

TEST_CASE("non-morphisms are rejected") {
    const auto c2 = lattice_magma(FinitePoset::chain(2), LatticeOp::join, "c2");
    const auto i2 = idl(c2);
    const auto swap = chain_map(c2, c2, {1, 0});
    try {
        idl_of_morphism(i2, i2, swap);
        FAIL("expected not-a-morphism");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_a_morphism);
    }
    const auto c3 = lattice_magma(FinitePoset::chain(3), LatticeOp::join, "c3");
    CHECK_THROWS_AS(idl_of_morphism(i2, idl(c3), chain_map(c2, c2, {0, 1})), Error);
}
