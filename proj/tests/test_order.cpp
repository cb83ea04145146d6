#include <doctest.h>

#include "prequant/instances.hpp"

using namespace prequant;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::internal;
}

}  // namespace

TEST_CASE("chain basics") {
    const auto c = FinitePoset::chain(3);
    CHECK(c.size() == 3);
    CHECK(c.label(0) == "0");
    CHECK(c.top() == Index{2});
    CHECK(c.bottom() == Index{0});
    CHECK(c.join(0, 1) == 1);
    CHECK(c.meet(1, 2) == 1);
    CHECK(c.ascending() == std::vector<Index>{0, 1, 2});
}

TEST_CASE("antichain has no joins") {
    const auto a = FinitePoset::antichain(2);
    CHECK(a.join(0, 1) == kNone);
    CHECK_FALSE(a.sup(a.full_set()).has_value());
    CHECK_FALSE(a.top().has_value());
    CHECK_FALSE(classify_poset(a).join_semilattice);
}

TEST_CASE("invalid orders are rejected") {
    // 0 <= 1 and 1 <= 0 breaks antisymmetry
    CHECK(kind_of([] { FinitePoset({"x", "y"}, {{true, true}, {true, true}}); }) == ErrorKind::malformed);
    CHECK(kind_of([] { FinitePoset({"x", "y"}, {{false, false}, {false, true}}); }) == ErrorKind::malformed);
    CHECK(kind_of([] { FinitePoset({"x", "x"}, {{true, false}, {false, true}}); }) == ErrorKind::malformed);
    // not transitive: a<b, b<c, a !< c
    CHECK(kind_of([] {
              FinitePoset({"a", "b", "c"}, {{true, true, false}, {false, true, true}, {false, false, true}});
          }) == ErrorKind::malformed);
}

TEST_CASE("diamond") {
    const auto d = diamond();
    const auto a = *d.find("a"), b = *d.find("b");
    CHECK(d.label(d.join(a, b)) == "1");
    CHECK(d.label(d.meet(a, b)) == "0");
    const auto f = classify_poset(d);
    CHECK(f.complete);
    CHECK(f.algebraic);
    CHECK(f.join_semilattice);
    CHECK(f.meet_semilattice);
    CHECK(compact_elements(d).size() == 4);

    auto ab = d.empty_set();
    ab.set(a);
    ab.set(b);
    CHECK_FALSE(is_directed(d, ab));
    ab.set(*d.top());
    CHECK(is_directed(d, ab));
    CHECK_FALSE(is_directed(d, d.empty_set()));
}

TEST_CASE("element ids are tagged by carrier") {
    const auto c = FinitePoset::chain(2);
    const auto e = FinitePoset::chain(2);
    CHECK(c.index_of(c.element(1)) == 1);
    CHECK(kind_of([&] { (void)c.index_of(e.element(1)); }) == ErrorKind::foreign_element);
    CHECK(kind_of([&] { (void)c.at("nope"); }) == ErrorKind::malformed);
}

TEST_CASE("dual swaps top and bottom") {
    const auto p = pentagon();
    const auto q = p.dual();
    CHECK(p.label(*p.top()) == q.label(*q.bottom()));
    CHECK(p.label(*p.bottom()) == q.label(*q.top()));
}

TEST_CASE("sup and inf agree with bounds on every subset") {
    for (const auto& p : {diamond(), pentagon(), m3(), FinitePoset::chain(4), FinitePoset::antichain(3)}) {
        const auto n = p.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            ElementSet s(n, mask);
            const auto ub = p.upper_bounds(s);
            const auto sup = p.sup(s);
            if (sup) {
                CHECK(ub[*sup]);
                for (auto u : members(ub)) CHECK(p.leq(*sup, u));
            }
            const auto lb = p.lower_bounds(s);
            if (auto inf = p.inf(s)) {
                CHECK(lb[*inf]);
                for (auto l : members(lb)) CHECK(p.leq(l, *inf));
            }
        }
    }
}
