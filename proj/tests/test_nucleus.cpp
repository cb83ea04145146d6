#include <doctest.h>

#include <map>
#include <random>

#include "oracle.hpp"
#include "prequant/instances.hpp"

using namespace prequant;

namespace {

// Nucleus counts, checked against the brute-force oracle below.
const std::map<std::string, std::size_t> kNucleusCounts = {
    {"2^Z2", 3},          {"2^Z2-{}", 2},         {"2^LZ2", 5},          {"2^LZ2-{}", 4},
    {"2^Z3-{}", 3},       {"2^(1)_0", 6},         {"2^(Z2)_0", 14},      {"Id(Z/4)", 3},
    {"Id(Z/6)", 4},       {"Id(Z/8)", 4},         {"Id(Z/9)", 3},        {"Id(Z/12)", 6},
    {"Id(F2[x]/(x^2))", 3}, {"Id(F2[x]/(x^3))", 4}, {"diamond-join", 7}, {"diamond-meet", 4},
    {"chain3-join", 4},   {"chain3-meet", 4},     {"chain4-join", 8},    {"N5-join", 13},
    {"M3-meet", 2},       {"{0,1}", 2},           {"Z3[inf]", 2},        {"Z3[+-inf]", 3},
    {"sat[-1,1]", 3},     {"sat[-1,1]+-inf", 4},
};

OrderedMagma entry(const std::string& key) {
    for (auto& e : corpus())
        if (e.key == key) return e.magma;
    FAIL("missing corpus key " << key);
    return {};
}

std::vector<std::vector<Index>> tables(const std::vector<MonotoneMap>& ms) {
    std::vector<std::vector<Index>> out;
    for (const auto& m : ms) out.push_back(m.table());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("nucleus enumeration matches the oracle") {
    for (const auto& e : corpus()) {
        CAPTURE(e.key);
        const auto got = enumerate_nuclei(e.magma);
        REQUIRE(kNucleusCounts.count(e.key) == 1);
        CHECK(got.size() == kNucleusCounts.at(e.key));
        const auto r = oracle::raw(e.magma);
        if (r.n <= 8) {
            auto want = oracle::nuclei(r);
            std::sort(want.begin(), want.end());
            CHECK(tables(got) == want);
            auto wc = oracle::closures(r);
            std::sort(wc.begin(), wc.end());
            CHECK(tables(enumerate_closures(e.magma.poset())) == wc);
        }
    }
}

TEST_CASE("nucleus predicates agree with the oracle on random maps") {
    std::mt19937_64 rng(11);
    for (const auto& e : corpus()) {
        CAPTURE(e.key);
        const auto& q = e.magma;
        const auto r = oracle::raw(q);
        std::uniform_int_distribution<Index> pick(0, Index(q.size() - 1));
        for (int k = 0; k < 300; ++k) {
            std::vector<Index> t(q.size());
            for (auto& y : t) y = pick(rng);
            SelfMap s(q.poset(), t);
            CHECK(is_closure(q.poset(), s) == oracle::is_closure(r, t));
            CHECK(is_nucleus(q, s) == oracle::is_nucleus(r, t));
        }
    }
}

TEST_CASE("ideals of Z/4: d, radical, e") {
    const auto l = ring_ideal_lattice(RingDesc::zmod(4));
    const auto& q = l.lattice;
    const auto ns = enumerate_nuclei(q);
    REQUIRE(ns.size() == 3);
    CHECK(ns.front().name() == "d");
    CHECK(ns.back().name() == "e");
    const auto rad = radical_operation(l);
    CHECK(std::count_if(ns.begin(), ns.end(), [&](const auto& s) { return s.table() == rad.table(); }) == 1);

    const std::vector<SelfMap> de{ns[0], ns[2]};
    CHECK(nuclei_meet(q, de).table() == ns[0].table());
    CHECK(nuclei_join(q, de).table() == ns[2].table());
    const std::vector<SelfMap> dr{ns[0], rad};
    CHECK(nuclei_join(q, dr).table() == rad.table());

    const auto quo = quotient(q, rad);
    CHECK(quo.magma.size() == 2);
    CHECK(classify(quo.magma).multiplicative_lattice());
}

TEST_CASE("join image is the intersection of images") {
    for (const char* key : {"diamond-join", "N5-join", "2^(Z2)_0", "Id(Z/12)"}) {
        CAPTURE(key);
        const auto q = entry(key);
        const auto& p = q.poset();
        const auto ns = enumerate_nuclei(q);
        for (const auto& a : ns)
            for (const auto& b : ns) {
                const std::vector<SelfMap> g{a, b};
                const auto j = nuclei_join(q, g);
                CHECK(fixed_set(p, j) == (fixed_set(p, a) & fixed_set(p, b)));
                const auto m = nuclei_meet(q, g);
                CHECK(pointwise_leq(p, m, a));
                CHECK(pointwise_leq(p, m, b));
                CHECK(is_nucleus(q, m));
            }
    }
}

TEST_CASE("closures are recovered from their images") {
    for (const auto& e : corpus()) {
        for (const auto& s : enumerate_closures(e.magma.poset())) {
            const auto c = closure_from_image(e.magma.poset(), fixed_set(e.magma.poset(), s));
            REQUIRE(c.has_value());
            CHECK(c->table() == s.table());
        }
    }
}

TEST_CASE("preclosure hull") {
    const auto q = entry("chain4-join");
    // x -> x + 1 capped, a preclosure whose hull is e
    std::vector<Index> t{1, 2, 3, 3};
    const auto h = closure_from_preclosure(q.poset(), SelfMap(q.poset(), t));
    CHECK(h.table() == std::vector<Index>{3, 3, 3, 3});
}

TEST_CASE("identity nucleus transports everything") {
    const auto q = entry("2^Z2");
    const auto d = MonotoneMap::identity(q.poset());
    CHECK(transportable(q, d).all());
    CHECK(is_strict_nucleus(q, d));
}

TEST_CASE("nucleus lattice and tower") {
    const auto two = two_element_lattice();
    auto t = nucleus_tower(two, 2);
    CHECK(t.stabilizes());
    const auto z4 = entry("Id(Z/4)");
    t = nucleus_tower(z4, 2);
    CHECK_FALSE(t.stabilizes());
    CHECK(t.levels[0].magma.size() == 3);
    CHECK(t.levels[1].magma.size() == 4);
    const auto l = nucleus_lattice(entry("diamond-join"));
    // join with the bottom d is not the bottom, so only near
    CHECK(classify(l.magma).near_multiplicative_lattice());
    CHECK_FALSE(classify(l.magma).with_annihilator);
}

TEST_CASE("composition join") {
    const auto q = entry("N5-join");
    const auto ns = enumerate_nuclei(q);
    for (const auto& a : ns)
        for (const auto& b : ns) {
            const auto r = composition_join_check(q, a, b, 16);
            const std::vector<SelfMap> g{a, b};
            CHECK(r.join.table() == nuclei_join(q, g).table());
        }
}

TEST_CASE("d_a on the ideals of Z/4 and the unit part") {
    const auto q = entry("Id(Z/4)");
    const auto d1 = d_map(q, q.at("(1)"));
    CHECK(d1.table() == MonotoneMap::identity(q.poset()).table());
    for (const auto& s : enumerate_nuclei(q)) CHECK(q.label(q.index_of(unit_part(q, s))) == "(1)");
}

TEST_CASE("nucleus of a morphism") {
    const auto l = ring_ideal_lattice(RingDesc::zmod(4));
    const auto& q = l.lattice;
    const auto rad = radical_operation(l);
    const auto quo = quotient(q, rad);
    MagmaMap f{q, quo.magma, {}};
    for (Index x = 0; x < q.size(); ++x) f.table.push_back(quo.from_parent(x));
    CHECK(nucleus_of_morphism(f).table() == rad.table());
}
