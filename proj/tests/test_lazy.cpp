#include <doctest.h>

#include <bitset>
#include <ostream>
#include <random>

#include "prequant/lazy.hpp"

using namespace prequant;

namespace {

constexpr std::uint64_t kBound = 256;
using Bits = std::bitset<kBound>;

Bits bits(const UPSet& s) {
    Bits b;
    for (std::uint64_t n = 0; n < kBound; ++n) b[n] = s.contains(n);
    return b;
}

// Minkowski sum on the window; exact below kBound.
Bits sum(const Bits& a, const Bits& b) {
    Bits out;
    for (std::uint64_t x = 0; x < kBound; ++x)
        if (a[x])
            for (std::uint64_t y = 0; x + y < kBound; ++y)
                if (b[y]) out[x + y] = true;
    return out;
}

}  // namespace

TEST_CASE("Minkowski sums and generated sets") {
    const auto s = UPSet::finite({2, 3});
    CHECK(s.sum(s) == UPSet::finite({4, 5, 6}));
    CHECK(UpsetNucleus::ideal()(s) == UPSet::from_n(2));
    const auto m = UPSet::monoid({2, 3});
    CHECK(m == UPSet::finite({0}).unite(UPSet::from_n(2)));
    CHECK(m.to_string() == "{0} u [2,inf)");
    CHECK(UPSet::monoid({4, 6}) == UPSet::progression(0, 2).intersect(UPSet::finite({0}).unite(UPSet::from_n(4))));
}

TEST_CASE("normal form is canonical") {
    // the same set described with different thresholds and periods
    const auto a = UPSet::from_membership(10, 6, [](std::uint64_t n) { return n % 3 == 1; });
    const auto b = UPSet::progression(1, 3);
    CHECK(a == b);
    CHECK(a.period() == 3);
    CHECK(a.threshold() == b.threshold());
    CHECK(UPSet::finite({}) == UPSet());
    CHECK(UPSet::from_n(0) == UPSet::naturals());
}

TEST_CASE("directed truncations have the set as supremum") {
    const auto m = UPSet::monoid({2, 3});
    UPSet acc;
    for (std::uint64_t k = 0; k <= 64; ++k) acc = acc.unite(m.truncate(k));
    CHECK(acc == m.truncate(64));
    CHECK(acc.is_finite());
    CHECK_FALSE(m.is_finite());
    CHECK(m.truncate(64).subset_of(m));
}

TEST_CASE("set algebra agrees with the bitset oracle") {
    const auto xs = upset_samples(40, 3);
    for (const auto& a : xs)
        for (const auto& b : xs) {
            CHECK(bits(a.unite(b)) == (bits(a) | bits(b)));
            CHECK(bits(a.intersect(b)) == (bits(a) & bits(b)));
            CHECK(bits(a.sum(b)) == sum(bits(a), bits(b)));
            CHECK(a.sum(b) == b.sum(a));
            CHECK(a.subset_of(b) == (bits(a) & ~bits(b)).none());
        }
}

TEST_CASE("Minkowski sum is associative and order-compatible") {
    const auto xs = upset_samples(16, 5);
    for (const auto& a : xs)
        for (const auto& b : xs)
            for (const auto& c : xs) {
                CHECK(a.sum(b).sum(c) == a.sum(b.sum(c)));
                if (a.subset_of(b)) CHECK(a.sum(c).subset_of(b.sum(c)));
            }
}

TEST_CASE("up-set nuclei") {
    CHECK(UpsetNucleus::parse("d")(UPSet::finite({5})) == UPSet::finite({5}));
    CHECK(UpsetNucleus::parse("e")(UPSet()) == UPSet::naturals());
    CHECK(UpsetNucleus::parse("monoid:2,3")(UPSet::finite({1})) == UPSet::finite({1}).sum(UPSet::monoid({2, 3})));
    CHECK(UpsetNucleus::finite_or_all()(UPSet::progression(0, 2)) == UPSet::naturals());
    CHECK(UpsetNucleus::finite_or_all()(UPSet::finite({1, 4})) == UPSet::finite({1, 4}));
    CHECK_THROWS_AS(UpsetNucleus::parse("bogus"), Error);
    // closure axioms on samples
    const auto xs = upset_samples(30, 9);
    for (const auto& s : {UpsetNucleus::identity(), UpsetNucleus::ideal(), UpsetNucleus::top(),
                          UpsetNucleus::finite_or_all(), UpsetNucleus::parse("monoid:2,3")})
        for (const auto& a : xs) {
            CHECK(a.subset_of(s(a)));
            CHECK(s(s(a)) == s(a));
            for (const auto& b : xs) {
                if (a.subset_of(b)) CHECK(s(a).subset_of(s(b)));
                CHECK(s(a).sum(s(b)).subset_of(s(a.sum(b))));
            }
        }
}

TEST_CASE("chain closures") {
    const auto m = ChainClosure::parse("mult:3");
    CHECK(m(0) == 0);
    CHECK(m(4) == 6);
    CHECK(m(kInfinity) == kInfinity);
    CHECK(ChainClosure::parse("threshold:5")(6) == kInfinity);
    CHECK(ChainClosure::parse("threshold:5")(5) == 5);
    CHECK(ChainClosure::parse("join:7")(2) == 7);
    CHECK(ChainClosure::parse("e")(0) == kInfinity);
    CHECK(chain_label(kInfinity) == "inf");
    CHECK(chain_samples(10, 1).size() == 10);
}
