#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "prequant/divisorial.hpp"
#include "prequant/instances.hpp"

using namespace prequant;

namespace {

OrderedMagma entry(const std::string& key) {
    for (auto& e : corpus())
        if (e.key == key) return e.magma;
    FAIL("missing corpus key " << key);
    return {};
}

bool hypotheses_hold(const OrderedMagma& q) {
    try {
        check_stable_hypotheses(q);
        return true;
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::hypothesis_not_met);
        return false;
    }
}

// x/y = max{z : zy <= x}, read off the raw tables.
std::optional<Index> raw_residual(const oracle::Raw& r, Index x, Index y) {
    std::vector<Index> below;
    for (Index z = 0; z < r.n; ++z)
        if (r.leq[r.mul[z][y]][x]) below.push_back(z);
    auto s = oracle::sup(r, below);
    if (s && r.leq[r.mul[*s][y]][x]) return s;
    return std::nullopt;
}

std::optional<Index> raw_meet(const oracle::Raw& r, Index x, Index y) {
    std::optional<Index> best;
    for (Index z = 0; z < r.n; ++z)
        if (r.leq[z][x] && r.leq[z][y] && (!best || r.leq[*best][z])) best = z;
    for (Index z = 0; z < r.n; ++z)
        if (r.leq[z][x] && r.leq[z][y] && !r.leq[z][*best]) return std::nullopt;
    return best;
}

// Pairwise meets preserved and (x/y)* = x*/y; on a finite carrier every element is compact.
bool raw_stable(const oracle::Raw& r, const oracle::Map& t) {
    for (Index x = 0; x < r.n; ++x)
        for (Index y = 0; y < r.n; ++y) {
            const auto m = raw_meet(r, x, y), ms = raw_meet(r, t[x], t[y]);
            if (m.has_value() != ms.has_value() || (m && t[*m] != *ms)) return false;
            const auto q = raw_residual(r, x, y), qs = raw_residual(r, t[x], y);
            if (q.has_value() != qs.has_value() || (q && t[*q] != *qs)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("v(a) matches the exhaustive coarsest nucleus") {
    for (const auto& e : corpus()) {
        CAPTURE(e.key);
        const auto& q = e.magma;
        const auto r = oracle::raw(q);
        if (r.n > 8) continue;
        for (Index a = 0; a < q.size(); ++a) {
            const auto want = oracle::v(r, a);
            REQUIRE(want.has_value());
            std::optional<MonotoneMap> got;
            try {
                got = v(q, q.element(a));
            } catch (const Error& err) {
                CHECK(err.kind() == ErrorKind::hypothesis_not_met);
                CHECK_FALSE(classify(q).near_prequantale);
                continue;
            }
            CHECK(got->table() == *want);
        }
    }
}

TEST_CASE("v(a) strategies agree wherever they apply") {
    for (const auto& e : corpus()) {
        CAPTURE(e.key);
        for (Index a = 0; a < e.magma.size(); ++a) CHECK(v_strategies(e.magma, e.magma.element(a)).agree());
    }
}

TEST_CASE("divisorial closures on the ideals of Z/4") {
    const auto l = ring_ideal_lattice(RingDesc::zmod(4));
    const auto& q = l.lattice;
    const auto rad = radical_operation(l);
    CHECK(v(q, q.at("(2)")).table() == rad.table());
    CHECK(v(q, q.at("(0)")).table() == MonotoneMap::identity(q.poset()).table());
    CHECK(v(q, q.at("(1)")).table() == MonotoneMap::top(q.poset()).table());
    const auto s = v_strategies(q, q.at("(2)"));
    CHECK(s.lin.has_value());
    CHECK(s.rs.has_value());
    CHECK(s.residual.has_value());
    CHECK(s.applicable() >= 3);
    CHECK(v(q, q.at("(2)"), VStrategy::residual).table() == rad.table());
    CHECK(divisorial_decomposition(q, rad).size() == 2);
}

TEST_CASE("every nucleus is the meet of its divisorial closures") {
    for (const auto& e : corpus()) {
        CAPTURE(e.key);
        for (const auto& s : enumerate_nuclei(e.magma)) {
            try {
                const auto img = divisorial_decomposition(e.magma, s);
                CHECK(img.size() == fixed_set(e.magma.poset(), s).count());
            } catch (const Error& err) {
                CHECK(err.kind() == ErrorKind::hypothesis_not_met);
            }
        }
    }
}

TEST_CASE("simplicity routes agree with the nucleus count") {
    for (const auto& e : corpus()) {
        CAPTURE(e.key);
        const auto n = enumerate_nuclei(e.magma).size();
        if (!classify(e.magma).near_prequantale) {
            CHECK_THROWS_AS(simplicity(e.magma), Error);
            continue;
        }
        const auto rep = simplicity(e.magma);
        CHECK(rep.simple() == (n <= 2));
        CHECK(rep.by_divisorial == rep.simple());
        if (rep.by_residuals) CHECK(*rep.by_residuals == rep.simple());
    }
    CHECK(is_simple(two_element_lattice()));
    CHECK(is_simple(entry("Z3[inf]")));
    CHECK(is_simple(entry("2^Z2-{}")));
    CHECK_FALSE(is_simple(entry("Id(Z/4)")));
    CHECK_FALSE(is_simple(entry("sat[-1,1]")));
}

TEST_CASE("GV elements") {
    const auto l = ring_ideal_lattice(RingDesc::zmod(4));
    const auto& q = l.lattice;
    const auto one = q.index_of(q.at("(1)"));
    CHECK(gv_elements(q, radical_operation(l)).elements == std::vector<Index>{one});
    const auto top = MonotoneMap::top(q.poset());
    CHECK(gv_elements(q, top).elements.size() == 3);
    const auto gv = gv_elements(q, MonotoneMap::identity(q.poset()));
    CHECK(gv.contains(one));
    CHECK_FALSE(gv.contains(q.index_of(q.at("(2)"))));
    const auto lz = entry("2^LZ2");
    CHECK_THROWS_AS(gv_elements(lz, MonotoneMap::identity(lz.poset())), Error);
}

TEST_CASE("cyclic elements") {
    const auto q = entry("2^LZ2");
    CHECK(is_cyclic(q, q.element(subset_index(q, 0))).is_cyclic);
    const auto r = is_cyclic(q, q.element(subset_index(q, 1)));
    CHECK_FALSE(r.is_cyclic);
    REQUIRE(r.counterexample.has_value());
    const auto [x, y] = *r.counterexample;
    CHECK(q.leq(q.mul(x, y), subset_index(q, 1)));
    CHECK_FALSE(q.leq(q.mul(y, x), subset_index(q, 1)));
    // commutative carriers are cyclic everywhere
    const auto z = entry("Id(Z/12)");
    for (Index a = 0; a < z.size(); ++a) CHECK(is_cyclic(z, z.element(a)).is_cyclic);
}

TEST_CASE("stable nuclei agree with a table-level check") {
    for (const auto& e : corpus()) {
        CAPTURE(e.key);
        const auto& q = e.magma;
        if (!hypotheses_hold(q)) continue;
        const auto r = oracle::raw(q);
        const auto ns = enumerate_nuclei(q);
        for (const auto& s : ns) {
            CAPTURE(s.name());
            const auto c = stable_conditions(q, s);
            CHECK(c.agree());
            CHECK(is_stable(q, s) == raw_stable(r, s.table()));
            // coarsest stable nucleus below s
            std::vector<oracle::Map> below;
            for (const auto& t : ns)
                if (pointwise_leq(q.poset(), t, s) && raw_stable(r, t.table())) below.push_back(t.table());
            const auto want = oracle::maximum(r, below);
            REQUIRE(want.has_value());
            CHECK(stable_closure(q, s).table() == *want);
        }
    }
}

TEST_CASE("stable closures on the ideals of Z/4") {
    const auto l = ring_ideal_lattice(RingDesc::zmod(4));
    const auto& q = l.lattice;
    const auto rad = radical_operation(l);
    CHECK_FALSE(is_stable(q, rad));
    CHECK(stable_closure(q, rad).table() == MonotoneMap::identity(q.poset()).table());
    CHECK(is_stable(q, MonotoneMap::top(q.poset())));
    CHECK(star_w(q, rad).table() == stable_closure(q, rad).table());
}

TEST_CASE("stable hypotheses") {
    for (const char* key : {"diamond-join", "M3-meet", "2^LZ2", "sat[-1,1]"}) {
        CAPTURE(key);
        CHECK_FALSE(hypotheses_hold(entry(key)));
    }
    for (const char* key : {"2^Z2", "Id(Z/12)", "{0,1}", "diamond-meet"}) {
        CAPTURE(key);
        CHECK(hypotheses_hold(entry(key)));
    }
}

TEST_CASE("meets of stable nuclei are stable") {
    for (const char* key : {"Id(Z/12)", "Id(Z/6)", "diamond-meet", "chain3-meet"}) {
        CAPTURE(key);
        const auto q = entry(key);
        std::vector<SelfMap> st;
        for (const auto& s : enumerate_nuclei(q))
            if (is_stable(q, s)) st.push_back(s);
        for (const auto& a : st)
            for (const auto& b : st) {
                const std::vector<SelfMap> g{a, b};
                CHECK(is_stable(q, nuclei_meet(q, g)));
            }
    }
}

TEST_CASE("companion closures t, vbar and w") {
    for (const char* key : {"Id(Z/4)", "Id(Z/12)", "2^Z2", "Id(F2[x]/(x^3))"}) {
        CAPTURE(key);
        const auto q = entry(key);
        for (Index a = 0; a < q.size(); ++a) {
            const auto id = q.element(a);
            const auto t = t_of(q, id);
            CHECK(t.name() == "t(" + q.label(a) + ")");
            // every element is compact here, so t(a) = v(a)
            CHECK(t.table() == v(q, id).table());
            const auto vb = v_bar(q, id);
            CHECK(is_stable(q, vb));
            CHECK(pointwise_leq(q.poset(), vb, v(q, id)));
            CHECK(vb(a) == a);
            const auto w = w_of(q, id);
            CHECK(is_nucleus(q, w));
            CHECK(w(a) == a);
        }
    }
    const auto z4 = entry("Id(Z/4)");
    CHECK(v_bar(z4, z4.at("(2)")).table() == MonotoneMap::identity(z4.poset()).table());
    const auto lz = entry("2^LZ2");
    CHECK_THROWS_AS(v_bar(lz, lz.element(0)), Error);
}

TEST_CASE("v(a) through units") {
    const auto q = entry("2^Z3-{}");
    for (Index a = 0; a < q.size(); ++a) CHECK(v_via_units(q, q.element(a)).table() == v(q, q.element(a), VStrategy::lin).table());
    const auto lz = entry("2^LZ2");
    CHECK_THROWS_AS(v_via_units(lz, lz.element(0)), Error);
}

TEST_CASE("strategy names") {
    for (auto s : {VStrategy::lin, VStrategy::rs, VStrategy::residual, VStrategy::units, VStrategy::all})
        CHECK(parse_strategy(to_string(s)) == s);
    CHECK_THROWS_AS(parse_strategy("guess"), Error);
}
