#include "prequant/idl.hpp"

#include <algorithm>

namespace prequant {

namespace {

constexpr std::size_t kIdealScanCap = 20;

// Down-set of the finite joins of a nonempty x.
ElementSet join_down(const FinitePoset& s, const ElementSet& x) {
    ElementSet joins = x;
    for (bool grew = true; grew;) {
        grew = false;
        for (auto a : members(joins))
            for (auto b : members(joins)) {
                const auto j = s.join(a, b);
                if (j == kNone) fail(ErrorKind::hypothesis_not_met, "carrier is not a join semilattice");
                if (!joins[j]) {
                    joins.set(j);
                    grew = true;
                }
            }
    }
    ElementSet out(s.size());
    for (auto j : members(joins)) out |= s.geq_row(j);
    return out;
}

bool is_ideal(const FinitePoset& p, const ElementSet& s) {
    if (s.none()) return false;
    for (auto x : members(s))
        if (!p.geq_row(x).is_subset_of(s)) return false;
    return is_directed(p, s);
}

void check_size(const FinitePoset& p, const ElementSet& x) {
    if (x.size() != p.size()) fail(ErrorKind::foreign_element, "subset does not belong to the carrier");
}

}  // namespace

std::vector<ElementSet> poset_ideals(const FinitePoset& p) {
    const auto n = p.size();
    if (n > kIdealScanCap) fail(ErrorKind::carrier_too_large, "ideal scan is capped at 20 elements");
    std::vector<ElementSet> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        ElementSet s(n, mask);
        if (is_ideal(p, s)) out.push_back(std::move(s));
    }
    return out;
}

IdealOfPoset down_closure(const FinitePoset& s, const ElementSet& x) {
    check_size(s, x);
    ElementSet out(s.size());
    if (x.none()) {
        if (!s.bottom()) fail(ErrorKind::empty_without_bottom, "down-closure of the empty set needs a least element");
        out = s.geq_row(*s.bottom());
    } else {
        out = join_down(s, x);
    }
    ensure(is_ideal(s, out), "down-closure is not an ideal");
    if (s.size() <= kIdealScanCap)
        for (const auto& i : poset_ideals(s))
            if (x.is_subset_of(i)) ensure(out.is_subset_of(i), "down-closure is not the smallest ideal");
    return {s.id(), out};
}

Index IdealCompletion::index_of(const ElementSet& ideal) const {
    auto it = std::find(ideals.begin(), ideals.end(), ideal);
    if (it == ideals.end()) fail(ErrorKind::foreign_element, "not an ideal of the source");
    return Index(it - ideals.begin());
}

IdealCompletion idl(const OrderedMagma& m) {
    const auto prof = classify(m);
    if (!(prof.multiplicative_semilattice || prof.prequantic_semilattice))
        fail(ErrorKind::wrong_class, m.name() + " is neither a multiplicative nor a prequantic semilattice");
    const auto& p = m.poset();
    IdealCompletion c{m, poset_ideals(p), {}, {}};
    const auto k = c.ideals.size();
    std::vector<std::string> labels(k);
    for (Index i = 0; i < k; ++i) {
        labels[i] = "I" + std::to_string(i);
        for (Index x = 0; x < m.size(); ++x)
            if (c.ideals[i] == p.geq_row(x)) labels[i] = "↓" + m.label(x);
    }
    auto order = FinitePoset::from_predicate(
        labels, [&](Index a, Index b) { return c.ideals[a].is_subset_of(c.ideals[b]); });
    std::vector<Index> table(k * k);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) table[i * k + j] = c.index_of(join_down(p, m.product(c.ideals[i], c.ideals[j])));
    c.magma = OrderedMagma(order, std::move(table), "Idl(" + m.name() + ")");
    for (Index x = 0; x < m.size(); ++x) c.principal.push_back(c.index_of(p.geq_row(x)));
    // down X . down Y is inside down(XY)
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
            ensure(m.product(c.ideals[i], c.ideals[j]).is_subset_of(c.ideals[c.magma.mul(i, j)]),
                   "ideal product misses the product set");
    const auto cp = classify(c.magma);
    ensure(cp.precoherent && cp.near_prequantale, "ideal completion is not a precoherent near prequantale");
    if (prof.prequantic_semilattice) ensure(cp.prequantale, "ideal completion is not a prequantale");
    return c;
}

Submagma k_functor(const OrderedMagma& q) {
    const auto prof = classify(q);
    if (!prof.precoherent) fail(ErrorKind::not_precoherent, q.name() + " is not precoherent");
    ElementSet k(q.size());
    for (const auto& c : compact_elements(q.poset())) k.set(q.index_of(c));
    auto sub = submagma(q, k);
    const auto kp = classify(sub.magma);
    if (prof.near_prequantale) ensure(kp.multiplicative_semilattice, "K(Q) is not a multiplicative semilattice");
    if (prof.prequantale) ensure(kp.prequantic_semilattice, "K(Q) is not a prequantic semilattice");
    return sub;
}

RoundTrip roundtrip_semilattice(const OrderedMagma& m) {
    const auto c = idl(m);
    const auto k = k_functor(c.magma);
    MagmaMap f{m, k.magma, std::vector<Index>(m.size())};
    for (Index x = 0; x < m.size(); ++x) {
        auto i = k.from_parent(c.principal[x]);
        ensure(i.has_value(), "principal ideal is not compact");
        f.table[x] = *i;
    }
    const bool iso = is_isomorphism(f);
    return {std::move(f), iso};
}

RoundTrip roundtrip_prequantale(const OrderedMagma& q) {
    const auto k = k_functor(q);
    const auto c = idl(k.magma);
    MagmaMap f{c.magma, q, std::vector<Index>(c.ideals.size())};
    for (Index i = 0; i < c.ideals.size(); ++i) {
        ElementSet up(q.size());
        for (auto x : members(c.ideals[i])) up.set(k.to_parent(x));
        auto s = q.poset().sup(up);
        ensure(s.has_value(), "supremum of an ideal of compacts is missing");
        f.table[i] = *s;
    }
    const bool iso = is_isomorphism(f);
    return {std::move(f), iso};
}

MagmaMap idl_of_morphism(const IdealCompletion& src, const IdealCompletion& dst, const MagmaMap& g) {
    if (g.source.id() != src.source.id() || g.target.id() != dst.source.id())
        fail(ErrorKind::foreign_element, "map does not connect the given sources");
    if (!is_homomorphism(g) || !preserves_nonempty_sups(g))
        fail(ErrorKind::not_a_morphism, "map is not a semilattice morphism");
    const auto& tp = dst.source.poset();
    MagmaMap out{src.magma, dst.magma, std::vector<Index>(src.ideals.size())};
    for (Index i = 0; i < src.ideals.size(); ++i) {
        ElementSet img(tp.size());
        for (auto x : members(src.ideals[i])) img.set(g(x));
        out.table[i] = dst.index_of(join_down(tp, img));
    }
    ensure(is_homomorphism(out) && preserves_nonempty_sups(out), "Idl(g) is not a morphism");
    return out;
}

MagmaMap k_of_morphism(const Submagma& src, const Submagma& dst, const MagmaMap& f) {
    if (f.source.id() != src.parent.id() || f.target.id() != dst.parent.id())
        fail(ErrorKind::foreign_element, "map does not connect the given carriers");
    if (!is_homomorphism(f) || !preserves_nonempty_sups(f))
        fail(ErrorKind::not_a_morphism, "map is not a near sup-preserving homomorphism");
    MagmaMap out{src.magma, dst.magma, std::vector<Index>(src.magma.size())};
    for (Index i = 0; i < src.magma.size(); ++i) {
        auto j = dst.from_parent(f(src.to_parent(i)));
        if (!j) fail(ErrorKind::not_a_morphism, "map sends a compact element outside the compacts");
        out.table[i] = *j;
    }
    ensure(is_homomorphism(out) && is_order_preserving(out), "K(f) is not a morphism");
    return out;
}

}  // namespace prequant
