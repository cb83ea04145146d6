#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "prequant/instances.hpp"

using namespace prequant;

namespace {

using Mask = std::uint32_t;

Mask scale(const FiniteMagmaDesc& m0, Index c, Mask x) {
    Mask out = 0;
    for (Index y = 0; y < m0.size(); ++y)
        if (x >> y & 1) out |= Mask{1} << m0.mul(c, y);
    return out;
}

// Every closure on 2^{M_0} as a Moore family: contains the full set, closed under intersection.
std::vector<std::vector<Mask>> moore_closures(std::size_t k) {
    const Mask full = (Mask{1} << k) - 1;
    const std::size_t subsets = std::size_t{1} << k;
    std::vector<std::vector<Mask>> out;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
        if (!(fam >> full & 1)) continue;
        bool ok = true;
        for (Mask a = 0; a < subsets && ok; ++a)
            for (Mask b = 0; b < subsets && ok; ++b)
                if ((fam >> a & 1) && (fam >> b & 1) && !(fam >> (a & b) & 1)) ok = false;
        if (!ok) continue;
        std::vector<Mask> r(subsets);
        for (Mask x = 0; x < subsets; ++x) {
            Mask c = full;
            for (Mask a = 0; a < subsets; ++a)
                if ((fam >> a & 1) && (x & ~a) == 0) c &= a;
            r[x] = c;
        }
        out.push_back(std::move(r));
    }
    return out;
}

struct RawCounts {
    std::size_t module = 0, weak = 0, ideal = 0;
};

RawCounts raw_counts(const FiniteMagmaDesc& base) {
    const auto m0 = FiniteMagmaDesc::with_zero(base);
    const auto k = m0.size();
    const Index zero = Index(k - 1);
    const Mask full = (Mask{1} << k) - 1;
    RawCounts n;
    for (const auto& r : moore_closures(k)) {
        bool module = r[0] == (Mask{1} << zero);
        bool weak = (r[0] >> zero & 1) != 0, ideal = true;
        for (Index c = 0; c < k; ++c) {
            const Mask cm = scale(m0, c, full);
            if ((cm & ~r[Mask{1} << c]) != 0) weak = false;
            for (Mask x = 0; x <= full; ++x) {
                const Mask lhs = scale(m0, c, r[x]), rhs = r[scale(m0, c, x)];
                if (lhs != rhs) module = ideal = false;
                if ((lhs & ~rhs) != 0) weak = false;
            }
        }
        n.module += module;
        n.weak += weak;
        n.ideal += weak && ideal;
    }
    return n;
}

std::vector<MonotoneMap> systems(const SystemLattice& l, bool (*pred)(const SystemLattice&, const SelfMap&)) {
    std::vector<MonotoneMap> out;
    for (const auto& s : enumerate_closures(l.lattice.poset()))
        if (pred(l, s)) out.push_back(s);
    return out;
}

}  // namespace

TEST_CASE("power sets of small magmas") {
    const auto z3 = powerset_prequantale(FiniteMagmaDesc::cyclic_group(3));
    CHECK(z3.size() == 8);
    CHECK(classify(z3).quantale());
    const auto dropped = powerset_prequantale(FiniteMagmaDesc::cyclic_group(3), true);
    CHECK(dropped.size() == 7);
    CHECK(subset_index(dropped, 0b011) == 2);
    CHECK(subset_mask(dropped, 2) == 0b011);
    CHECK_THROWS_AS(subset_index(dropped, 0), Error);
    CHECK_THROWS_AS(powerset_prequantale(FiniteMagmaDesc::cyclic_group(6)), Error);
    const auto k = powerset_prequantale(FiniteMagmaDesc::klein_group());
    CHECK(classify(k).commutative);
}

TEST_CASE("module systems agree with a Moore-family oracle") {
    for (std::size_t n : {1, 2, 3}) {
        CAPTURE(n);
        const auto g = FiniteMagmaDesc::cyclic_group(n);
        const auto l = module_system_lattice(g);
        const auto got = systems(l, is_module_system);
        CHECK(got.size() == raw_counts(g).module);
        CHECK(got.size() == n);  // frozen
        for (const auto& r : got) {
            const auto c = module_system_conditions(l, r);
            CHECK(c.definition);
            CHECK(c.associative);
            CHECK(c.star_products);
            CHECK(c.residual_form);
            CHECK(c.nucleus);
        }
    }
    CHECK_THROWS_AS(module_system_lattice(FiniteMagmaDesc::idempotent_monoid()), Error);
}

TEST_CASE("trivial group: the only module system adds the zero") {
    const auto l = module_system_lattice(FiniteMagmaDesc::cyclic_group(1));
    const auto got = systems(l, is_module_system);
    REQUIRE(got.size() == 1);
    for (Index x = 0; x < l.lattice.size(); ++x)
        CHECK(subset_mask(l.lattice, got[0](x)) == (subset_mask(l.lattice, x) | subset_mask(l.lattice, l.zero)));
}

TEST_CASE("ideal systems agree with the oracle") {
    struct Case {
        FiniteMagmaDesc m;
        std::size_t weak, ideal;
    };
    for (const auto& [m, weak, ideal] : {Case{FiniteMagmaDesc::cyclic_group(1), 2, 1},
                                         Case{FiniteMagmaDesc::cyclic_group(2), 2, 1},
                                         Case{FiniteMagmaDesc::idempotent_monoid(), 4, 1}}) {
        CAPTURE(m.name);
        const auto l = ideal_system_lattice(m);
        const auto raw = raw_counts(m);
        const auto w = systems(l, is_weak_ideal_system);
        const auto i = systems(l, is_ideal_system);
        CHECK(w.size() == raw.weak);
        CHECK(i.size() == raw.ideal);
        CHECK(w.size() == weak);
        CHECK(i.size() == ideal);
        for (const auto& r : w) {
            const auto c = ideal_system_conditions(l, r);
            CHECK(c.weak_definition == c.weak_nucleus_form);
            CHECK(c.ideal_definition == c.ideal_transport_form);
        }
    }
}

TEST_CASE("ideal lattices of finite rings") {
    for (std::uint32_t n : {2u, 4u, 6u, 8u, 9u, 12u, 30u}) {
        CAPTURE(n);
        const auto l = ring_ideal_lattice(RingDesc::zmod(n));
        CHECK(l.lattice.size() == oracle::divisor_count(n));
        CHECK(classify(l.lattice).multiplicative_lattice());
    }
    const auto f = ring_ideal_lattice(RingDesc::poly(2, "x^3"));
    CHECK(f.lattice.size() == 4);
    for (Index a = 0; a < 4; ++a)
        for (Index b = 0; b < 4; ++b) CHECK((f.lattice.leq(a, b) || f.lattice.leq(b, a)));
    const auto g = ring_ideal_lattice(RingDesc::poly(2, "x^2+x+1"));
    CHECK(g.lattice.size() == 2);  // a field
    CHECK(RingDesc::poly(3, "x^2+1").name() == RingDesc::poly(3, std::vector<std::uint32_t>{1, 0, 1}).name());
    CHECK_THROWS_AS(ring_ideal_lattice(RingDesc::zmod(257)), Error);
}

TEST_CASE("radical, primes and generated ideals of Z/12") {
    const auto l = ring_ideal_lattice(RingDesc::zmod(12));
    const auto& q = l.lattice;
    const auto rad = radical_operation(l);
    CHECK(q.label(rad(l.zero_ideal)) == "(6)");
    CHECK(q.label(rad(q.index_of(q.at("(4)")))) == "(2)");
    CHECK(rad(l.whole) == l.whole);
    std::vector<std::string> primes;
    for (auto i : prime_ideals(l)) primes.push_back(q.label(i));
    std::sort(primes.begin(), primes.end());
    CHECK(primes == std::vector<std::string>{"(2)", "(3)"});
    CHECK(minimal_primes(l).size() == 2);
    ElementSet gens(l.ring.size);
    gens.set(8);
    gens.set(6);
    CHECK(q.label(l.index_of(l.generate(gens))) == "(2)");
    ElementSet bad(l.ring.size);
    bad.set(1);
    bad.set(0);
    bad.set(2);
    CHECK_THROWS_AS(l.index_of(bad), Error);
}

TEST_CASE("Frobenius window") {
    const auto w = frobenius_window(make_ring(RingDesc::zmod(4)));
    CHECK(w.p == 2);
    CHECK(w.preperiod == 1);
    CHECK(w.period == 1);
    const auto f = frobenius_window(make_ring(RingDesc::poly(3, "x^2+1")));
    CHECK(f.p == 3);
    CHECK(f.preperiod == 0);
    CHECK(f.period == 2);  // F9 has Frobenius of order two
}

TEST_CASE("tight closure") {
    for (const auto& d : {RingDesc::zmod(4), RingDesc::zmod(9), RingDesc::poly(2, "x^2"), RingDesc::poly(2, "x^3")}) {
        CAPTURE(d.name());
        const auto l = ring_ideal_lattice(d);
        const auto t = tight_closure(l);
        const auto rad = radical_operation(l);
        // Artinian local: everything below the maximal ideal is tightly closed to it
        CHECK(t.T.table() == rad.table());
        CHECK(t.star.table() == rad.table());
        CHECK(t.nucleus);
        CHECK(t.multiplicative);
        CHECK(t.matches_scan);
        CHECK(t.noetherian_equality);
        for (Index i = 0; i < l.lattice.size(); ++i) CHECK(tight_closure_star(l, i) == rad(i));
    }
    const auto l = ring_ideal_lattice(RingDesc::poly(2, "x^3"));
    CHECK(tight_closure_T(l).table() == std::vector<Index>{2, 2, 2, 3});
    try {
        tight_closure(ring_ideal_lattice(RingDesc::zmod(6)));
        FAIL("expected characteristic-not-prime");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::characteristic_not_prime);
    }
}

TEST_CASE("chains with infinity") {
    const auto g = discrete_group_infinity(3);
    CHECK(g.size() == 4);
    CHECK(enumerate_nuclei(g).size() == 2);
    const auto s = saturating_chain(2);
    CHECK(s.size() == 6);
    CHECK_FALSE(classify(s).associative);
}
