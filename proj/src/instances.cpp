#include "prequant/instances.hpp"

#include <algorithm>
#include <bit>

namespace prequant {

FiniteMagmaDesc FiniteMagmaDesc::make(std::string name, std::vector<std::string> labels, std::vector<Index> table) {
    FiniteMagmaDesc d;
    d.name = std::move(name);
    d.labels = std::move(labels);
    d.table = std::move(table);
    const auto n = d.size();
    if (n == 0) fail(ErrorKind::malformed, "magma must be nonempty");
    if (d.table.size() != n * n) fail(ErrorKind::malformed, "magma table has the wrong size");
    for (auto v : d.table)
        if (v >= n) fail(ErrorKind::malformed, "magma table entry out of range");
    d.associative = d.commutative = true;
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (d.mul(a, b) != d.mul(b, a)) d.commutative = false;
            for (Index c = 0; c < n && d.associative; ++c)
                if (d.mul(d.mul(a, b), c) != d.mul(a, d.mul(b, c))) d.associative = false;
        }
    for (Index u = 0; u < n && !d.unit; ++u) {
        bool ok = true;
        for (Index x = 0; x < n && ok; ++x) ok = d.mul(u, x) == x && d.mul(x, u) == x;
        if (ok) d.unit = u;
    }
    return d;
}

FiniteMagmaDesc FiniteMagmaDesc::cyclic_group(std::size_t n) {
    if (n == 0) fail(ErrorKind::malformed, "cyclic group order must be positive");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
    std::vector<Index> t(n * n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) t[a * n + b] = static_cast<Index>((a + b) % n);
    return make("Z/" + std::to_string(n), std::move(labels), std::move(t));
}

FiniteMagmaDesc FiniteMagmaDesc::klein_group() {
    std::vector<Index> t(16);
    for (Index a = 0; a < 4; ++a)
        for (Index b = 0; b < 4; ++b) t[a * 4 + b] = a ^ b;
    return make("Klein", {"1", "a", "b", "ab"}, std::move(t));
}

FiniteMagmaDesc FiniteMagmaDesc::left_zero(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('p' + i)));
    std::vector<Index> t(n * n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) t[a * n + b] = a;
    return make("LZ" + std::to_string(n), std::move(labels), std::move(t));
}

FiniteMagmaDesc FiniteMagmaDesc::idempotent_monoid() { return make("{1,e}", {"1", "e"}, {0, 1, 1, 1}); }

FiniteMagmaDesc FiniteMagmaDesc::with_zero(const FiniteMagmaDesc& m) {
    const auto n = m.size();
    auto labels = m.labels;
    if (std::find(labels.begin(), labels.end(), "0") != labels.end())
        fail(ErrorKind::malformed, "label 0 is reserved for the adjoined zero");
    labels.push_back("0");
    std::vector<Index> t((n + 1) * (n + 1), static_cast<Index>(n));
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) t[a * (n + 1) + b] = m.mul(a, b);
    return make(m.name + "_0", std::move(labels), std::move(t));
}

// ---------------------------------------------------------------------------

namespace {

bool dropped(std::size_t size) { return ((size + 1) & size) == 0; }

std::string subset_label(const FiniteMagmaDesc& m, std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (Index i = 0; i < m.size(); ++i)
        if (mask >> i & 1u) {
            if (!first) s += ",";
            s += m.labels[i];
            first = false;
        }
    return s + "}";
}

}  // namespace

std::uint32_t subset_mask(const OrderedMagma& ps, Index i) {
    return i + (dropped(ps.size()) ? 1u : 0u);
}

Index subset_index(const OrderedMagma& ps, std::uint32_t mask) {
    if (dropped(ps.size())) {
        if (mask == 0) fail(ErrorKind::foreign_element, "empty set is not in this carrier");
        return mask - 1;
    }
    return mask;
}

OrderedMagma powerset_prequantale(const FiniteMagmaDesc& m, bool drop_empty) {
    const auto k = m.size();
    if (k > kPowersetCap) fail(ErrorKind::carrier_too_large, "power set of a magma above the cap");
    const std::uint32_t full = (1u << k) - 1;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t s = drop_empty ? 1 : 0; s <= full; ++s) masks.push_back(s);
    std::vector<std::string> labels;
    for (auto s : masks) labels.push_back(subset_label(m, s));
    auto p = FinitePoset::from_predicate(labels, [&](Index a, Index b) { return (masks[a] & ~masks[b]) == 0; });
    const Index off = drop_empty ? 1 : 0;
    auto prod = [&](std::uint32_t x, std::uint32_t y) {
        std::uint32_t out = 0;
        for (Index i = 0; i < k; ++i)
            if (x >> i & 1u)
                for (Index j = 0; j < k; ++j)
                    if (y >> j & 1u) out |= 1u << m.mul(i, j);
        return out;
    };
    auto om = OrderedMagma::from_function(
        p, [&](Index a, Index b) { return prod(masks[a], masks[b]) - off; },
        "2^" + m.name + (drop_empty ? "-{}" : ""));
    const auto prof = classify(om);
    if (k >= 2) {
        ensure(prof.prequantale == !drop_empty, "power set prequantale flag unexpected");
        ensure(prof.near_prequantale, "power set is not a near prequantale");
        if (drop_empty) ensure(!prof.with_annihilator, "nonempty subsets have an annihilator");
    }
    ensure(prof.associative == m.associative, "power set associativity differs from the magma");
    return om;
}

// ---------------------------------------------------------------------------

Index SystemLattice::singleton(Index c) const { return subset_index(lattice, 1u << c); }

namespace {

SystemLattice system_lattice(const FiniteMagmaDesc& base, std::size_t cap) {
    if (base.size() > cap) fail(ErrorKind::carrier_too_large, "base magma above the size cap");
    SystemLattice l;
    l.base = base;
    l.base0 = FiniteMagmaDesc::with_zero(base);
    l.lattice = powerset_prequantale(l.base0);
    const auto z = static_cast<Index>(base.size());
    l.empty = subset_index(l.lattice, 0);
    l.zero = subset_index(l.lattice, 1u << z);
    l.one = subset_index(l.lattice, 1u << *base.unit);
    l.full = subset_index(l.lattice, (1u << l.base0.size()) - 1);
    return l;
}

}  // namespace

SystemLattice module_system_lattice(const FiniteMagmaDesc& g) {
    if (!(g.associative && g.commutative && g.unit)) fail(ErrorKind::hypothesis_not_met, "G must be an abelian group");
    for (Index a = 0; a < g.size(); ++a) {
        bool inv = false;
        for (Index b = 0; b < g.size(); ++b) inv = inv || g.mul(a, b) == *g.unit;
        if (!inv) fail(ErrorKind::hypothesis_not_met, "G must be an abelian group");
    }
    return system_lattice(g, 4);
}

SystemLattice ideal_system_lattice(const FiniteMagmaDesc& m) {
    if (!(m.associative && m.commutative && m.unit))
        fail(ErrorKind::hypothesis_not_met, "M must be a commutative monoid");
    return system_lattice(m, 4);
}

ModuleSystemConditions module_system_conditions(const SystemLattice& l, const SelfMap& r) {
    const auto& q = l.lattice;
    const auto& p = q.poset();
    r.check_carrier(p);
    const auto n = q.size();
    ModuleSystemConditions c;
    c.empty_to_zero = r(l.empty) == l.zero;
    const bool closure = is_closure(p, r);
    c.nucleus = is_nucleus(q, r);
    c.definition = closure && c.empty_to_zero;
    for (Index k = 0; k < l.base0.size() && c.definition; ++k) {
        const auto s = l.singleton(k);
        for (Index x = 0; x < n && c.definition; ++x) c.definition = r(q.mul(s, x)) == q.mul(s, r(x));
    }
    c.associative = c.star_products = closure;
    c.residual_form = true;
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            const auto xy = q.mul(x, y);
            if (c.star_products && r(q.mul(r(x), r(y))) != r(xy)) c.star_products = false;
            for (Index z = 0; z < n; ++z) {
                if (c.associative && r(q.mul(r(xy), z)) != r(q.mul(x, r(q.mul(y, z))))) c.associative = false;
                const auto rz = r(z);
                if (p.leq(xy, rz) != p.leq(q.mul(x, r(y)), rz)) c.residual_form = false;
            }
        }
    return c;
}

bool is_module_system(const SystemLattice& l, const SelfMap& r) {
    const auto c = module_system_conditions(l, r);
    if (!c.empty_to_zero) return false;
    ensure(c.definition == c.associative && c.associative == c.star_products &&
               c.star_products == c.residual_form && c.residual_form == c.nucleus,
           "module system characterizations disagree");
    return c.definition;
}

IdealSystemConditions ideal_system_conditions(const SystemLattice& l, const SelfMap& r) {
    const auto& q = l.lattice;
    const auto& p = q.poset();
    r.check_carrier(p);
    const auto n = q.size();
    const auto m0 = l.base0.size();
    const auto zero_elem = static_cast<Index>(l.base.size());
    IdealSystemConditions c;
    const bool closure = is_closure(p, r);
    // raw: 0 in {}^r, cM_0 <= {c}^r, cX^r <= (cX)^r
    bool weak = closure && (subset_mask(q, r(l.empty)) >> zero_elem & 1u);
    bool ideal = true;
    for (Index k = 0; k < m0 && weak; ++k) {
        const auto s = l.singleton(k);
        weak = p.leq(q.mul(s, l.full), r(s));
        for (Index x = 0; x < n && weak; ++x) {
            const auto lhs = q.mul(s, r(x)), rhs = r(q.mul(s, x));
            weak = p.leq(lhs, rhs);
            if (lhs != rhs) ideal = false;
        }
    }
    c.weak_definition = weak;
    c.ideal_definition = weak && ideal;
    c.weak_nucleus_form = is_nucleus(q, r) && r(l.zero) == r(l.empty) && r(l.one) == l.full;
    const auto tr = transportable(q, r);
    bool singletons = true;
    for (Index k = 0; k < m0; ++k) singletons = singletons && tr[l.singleton(k)];
    c.ideal_transport_form = c.weak_nucleus_form && singletons;
    return c;
}

bool is_weak_ideal_system(const SystemLattice& l, const SelfMap& r) {
    const auto c = ideal_system_conditions(l, r);
    ensure(c.weak_definition == c.weak_nucleus_form, "weak ideal system characterizations disagree");
    return c.weak_definition;
}

bool is_ideal_system(const SystemLattice& l, const SelfMap& r) {
    const auto c = ideal_system_conditions(l, r);
    ensure(c.weak_definition == c.weak_nucleus_form, "weak ideal system characterizations disagree");
    ensure(c.ideal_definition == c.ideal_transport_form, "ideal system characterizations disagree");
    return c.ideal_definition;
}

// ---------------------------------------------------------------------------

OrderedMagma saturating_chain(int n) {
    if (n < 0) fail(ErrorKind::malformed, "saturating chain radius must be nonnegative");
    std::vector<std::string> labels;
    for (int v = -n; v <= n; ++v) labels.push_back(std::to_string(v));
    labels.push_back("inf");
    const auto top = static_cast<Index>(labels.size() - 1);
    auto p = FinitePoset::from_predicate(labels, [](Index a, Index b) { return a <= b; });
    return OrderedMagma::from_function(
        p,
        [&](Index a, Index b) -> Index {
            if (a == top || b == top) return top;
            const int s = std::clamp(static_cast<int>(a) + static_cast<int>(b) - 2 * n, -n, n);
            return static_cast<Index>(s + n);
        },
        "sat[" + std::to_string(-n) + "," + std::to_string(n) + "]");
}

OrderedMagma discrete_group_infinity(std::size_t k) {
    if (k == 0) fail(ErrorKind::malformed, "group order must be positive");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
    labels.push_back("inf");
    const auto top = static_cast<Index>(k);
    auto p = FinitePoset::from_predicate(labels, [&](Index a, Index b) { return a == b || b == top; });
    return OrderedMagma::from_function(
        p, [&](Index a, Index b) { return (a == top || b == top) ? top : static_cast<Index>((a + b) % k); },
        "Z" + std::to_string(k) + "[inf]");
}

OrderedMagma plus_minus_infinity(const OrderedMagma& g_inf) {
    auto out = adjoin_annihilator(g_inf, "-inf");
    return out;
}

OrderedMagma lattice_magma(const FinitePoset& p, LatticeOp op, std::string name) {
    for (Index a = 0; a < p.size(); ++a)
        for (Index b = 0; b < p.size(); ++b)
            if ((op == LatticeOp::join ? p.join(a, b) : p.meet(a, b)) == kNone)
                fail(ErrorKind::hypothesis_not_met, "poset lacks the lattice operation");
    return OrderedMagma::from_function(
        p, [&](Index a, Index b) { return op == LatticeOp::join ? p.join(a, b) : p.meet(a, b); }, std::move(name));
}

FinitePoset diamond() {
    return FinitePoset::from_predicate({"0", "a", "b", "1"},
                                       [](Index x, Index y) { return x == y || x == 0 || y == 3; });
}

FinitePoset pentagon() {
    // 0 < a < b < 1, 0 < c < 1
    return FinitePoset::from_predicate({"0", "a", "b", "c", "1"}, [](Index x, Index y) {
        return x == y || x == 0 || y == 4 || (x == 1 && y == 2);
    });
}

FinitePoset m3() {
    return FinitePoset::from_predicate({"0", "a", "b", "c", "1"},
                                       [](Index x, Index y) { return x == y || x == 0 || y == 4; });
}

OrderedMagma two_element_lattice() { return lattice_magma(FinitePoset::chain(2), LatticeOp::meet, "{0,1}"); }

std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> c;
    const auto z2 = FiniteMagmaDesc::cyclic_group(2);
    const auto lz2 = FiniteMagmaDesc::left_zero(2);
    c.push_back({"2^Z2", powerset_prequantale(z2)});
    c.push_back({"2^Z2-{}", powerset_prequantale(z2, true)});
    c.push_back({"2^LZ2", powerset_prequantale(lz2)});
    c.push_back({"2^LZ2-{}", powerset_prequantale(lz2, true)});
    c.push_back({"2^Z3-{}", powerset_prequantale(FiniteMagmaDesc::cyclic_group(3), true)});
    c.push_back({"2^(1)_0", module_system_lattice(FiniteMagmaDesc::cyclic_group(1)).lattice});
    c.push_back({"2^(Z2)_0", module_system_lattice(z2).lattice});
    for (std::uint32_t n : {4u, 6u, 8u, 9u, 12u})
        c.push_back({"Id(Z/" + std::to_string(n) + ")", ring_ideal_lattice(RingDesc::zmod(n)).lattice});
    c.push_back({"Id(F2[x]/(x^2))", ring_ideal_lattice(RingDesc::poly(2, "x^2")).lattice});
    c.push_back({"Id(F2[x]/(x^3))", ring_ideal_lattice(RingDesc::poly(2, "x^3")).lattice});
    c.push_back({"diamond-join", lattice_magma(diamond(), LatticeOp::join, "diamond-join")});
    c.push_back({"diamond-meet", lattice_magma(diamond(), LatticeOp::meet, "diamond-meet")});
    c.push_back({"chain3-join", lattice_magma(FinitePoset::chain(3), LatticeOp::join, "chain3-join")});
    c.push_back({"chain3-meet", lattice_magma(FinitePoset::chain(3), LatticeOp::meet, "chain3-meet")});
    c.push_back({"chain4-join", lattice_magma(FinitePoset::chain(4), LatticeOp::join, "chain4-join")});
    c.push_back({"N5-join", lattice_magma(pentagon(), LatticeOp::join, "N5-join")});
    c.push_back({"M3-meet", lattice_magma(m3(), LatticeOp::meet, "M3-meet")});
    c.push_back({"{0,1}", two_element_lattice()});
    c.push_back({"Z3[inf]", discrete_group_infinity(3)});
    c.push_back({"Z3[+-inf]", plus_minus_infinity(discrete_group_infinity(3))});
    c.push_back({"sat[-1,1]", saturating_chain(1)});
    c.push_back({"sat[-1,1]+-inf", plus_minus_infinity(saturating_chain(1))});
    return c;
}

}  // namespace prequant
