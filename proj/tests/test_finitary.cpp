#include <doctest.h>

#include "prequant/finitary.hpp"
#include "prequant/instances.hpp"

using namespace prequant;

TEST_CASE("closures on finite carriers are finitary and equal their companion") {
    for (const auto& e : corpus()) {
        CAPTURE(e.key);
        for (const auto& s : enumerate_nuclei(e.magma)) {
            CHECK(is_finitary(e.magma.poset(), s).is_finitary());
            if (classify(e.magma).precoherent) {
                CHECK(star_f(e.magma, s).table() == s.table());
                const auto k = verify_klattice(e.magma, s);
                CHECK(k.precoherent);
                CHECK(k.same_class);
                CHECK(k.k_identity);
                CHECK_FALSE(k.sampled);
            }
        }
    }
}

TEST_CASE("finitary test needs a closure") {
    const auto q = two_element_lattice();
    SelfMap down(q.poset(), {0, 0});
    CHECK_THROWS_AS(is_finitary(q.poset(), down), Error);
}

TEST_CASE("up-sets: finite-or-all is not finitary") {
    const std::vector<UPSet> targets{UPSet::progression(0, 2), UPSet::naturals()};
    const auto r = is_finitary(UpsetNucleus::finite_or_all(), targets);
    CHECK(r.verdict == FinitaryReport::Verdict::not_finitary);
    REQUIRE(r.witness.has_value());
    // N alone is no witness: every truncation image already covers the window
    const std::vector<UPSet> only_n{UPSet::naturals()};
    CHECK(is_finitary(UpsetNucleus::finite_or_all(), only_n).verdict ==
          FinitaryReport::Verdict::no_violation_found);
}

TEST_CASE("up-sets: translations are finitary") {
    const auto xs = upset_samples(100, 17);
    for (const auto& s : {UpsetNucleus::identity(), UpsetNucleus::ideal(), UpsetNucleus::top(),
                          UpsetNucleus::parse("monoid:2,3")}) {
        CAPTURE(s.name());
        CHECK(is_finitary(s, xs).is_finitary());
        const auto f = star_f(s, xs);
        CHECK(f.name() == s.name());
        const auto k = verify_klattice(s, xs);
        CHECK(k.k_identity);
        CHECK(k.precoherent);
        CHECK(k.sampled);
    }
}

TEST_CASE("up-sets: companion of finite-or-all is the identity") {
    const auto xs = upset_samples(100, 17);
    const auto f = star_f(UpsetNucleus::finite_or_all(), xs);
    CHECK(f.kind() == UpsetNucleus::Kind::translate);
    for (const auto& x : xs) CHECK(f(x) == x);
}

TEST_CASE("opaque nuclei are undecidable") {
    const auto s = UpsetNucleus::opaque("mystery", [](const UPSet& x) { return x; });
    const auto xs = upset_samples(5, 1);
    try {
        is_finitary(s, xs);
        FAIL("expected undecidable-family");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::undecidable_family);
    }
    CHECK_THROWS_AS(star_f(s, xs), Error);
}

TEST_CASE("lazy chain: every closure is finitary") {
    const auto xs = chain_samples(100, 4);
    for (const auto* text : {"d", "e", "mult:3", "threshold:9", "join:4"}) {
        const auto s = ChainClosure::parse(text);
        CHECK(is_finitary(s).is_finitary());
        CHECK(star_f(s, xs).name() == s.name());
    }
    const auto odd = ChainClosure::opaque("even-up", [](ChainValue x) {
        return x == kInfinity ? x : x + (x % 2);
    });
    CHECK(is_finitary(odd).is_finitary());
    const auto bad = ChainClosure::opaque("shrink", [](ChainValue x) { return x == 0 ? 0 : x - 1; });
    CHECK_THROWS_AS(is_finitary(bad), Error);
}

TEST_CASE("composition monoid join") {
    const auto q = lattice_magma(diamond(), LatticeOp::join, "diamond-join");
    const auto ns = enumerate_nuclei(q);
    const std::vector<SelfMap> g(ns.begin(), ns.end());
    const auto j = composition_monoid_join(q, g);
    CHECK(j.table() == MonotoneMap::top(q.poset()).table());
    const std::vector<SelfMap> pair{ns[1], ns[2]};
    CHECK(composition_monoid_join(q, pair).table() == nuclei_join(q, pair).table());
}
