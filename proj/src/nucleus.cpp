#include "prequant/nucleus.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace prequant {

SelfMap::SelfMap(const FinitePoset& p, std::vector<Index> table, std::string name)
    : carrier_(p.id()), table_(std::move(table)), name_(std::move(name)) {
    if (table_.size() != p.size()) fail(ErrorKind::malformed, "map table size differs from carrier size");
    for (auto v : table_)
        if (v >= p.size()) fail(ErrorKind::malformed, "map value out of range");
}

ElementId SelfMap::apply(const FinitePoset& p, ElementId x) const {
    check_carrier(p);
    return p.element(table_[p.index_of(x)]);
}

void SelfMap::check_carrier(const FinitePoset& p) const {
    if (carrier_ != p.id()) fail(ErrorKind::foreign_element, "map belongs to another carrier");
}

MonotoneMap::MonotoneMap(const FinitePoset& p, std::vector<Index> table, std::string name)
    : SelfMap(p, std::move(table), std::move(name)) {
    if (!is_order_preserving(p, *this)) fail(ErrorKind::malformed, "map is not order-preserving");
}

MonotoneMap MonotoneMap::identity(const FinitePoset& p) {
    std::vector<Index> t(p.size());
    for (Index i = 0; i < p.size(); ++i) t[i] = i;
    return MonotoneMap(p, std::move(t), "d");
}

MonotoneMap MonotoneMap::top(const FinitePoset& p) {
    const auto t = p.top();
    if (!t) fail(ErrorKind::hypothesis_not_met, "carrier has no top element");
    return MonotoneMap(p, std::vector<Index>(p.size(), *t), "e");
}

SelfMap compose(const SelfMap& outer, const SelfMap& inner) {
    if (outer.carrier() != inner.carrier()) fail(ErrorKind::foreign_element, "maps on different carriers");
    // carriers already agree, so no poset handle is needed to rebuild
    struct Composite : SelfMap {
        Composite(std::uint64_t c, std::vector<Index> t) {
            carrier_ = c;
            table_ = std::move(t);
        }
    };
    std::vector<Index> t(inner.size());
    for (Index x = 0; x < inner.size(); ++x) t[x] = outer(inner(x));
    return Composite(inner.carrier(), std::move(t));
}

bool pointwise_leq(const FinitePoset& p, const SelfMap& a, const SelfMap& b) {
    a.check_carrier(p);
    b.check_carrier(p);
    for (Index x = 0; x < p.size(); ++x)
        if (!p.leq(a(x), b(x))) return false;
    return true;
}

std::vector<Index> fixed_points(const SelfMap& s) {
    std::vector<Index> out;
    for (Index x = 0; x < s.size(); ++x)
        if (s(x) == x) out.push_back(x);
    return out;
}

ElementSet fixed_set(const FinitePoset& p, const SelfMap& s) {
    s.check_carrier(p);
    ElementSet out(p.size());
    for (Index x = 0; x < s.size(); ++x)
        if (s(x) == x) out.set(x);
    return out;
}

bool is_expansive(const FinitePoset& p, const SelfMap& s) {
    s.check_carrier(p);
    for (Index x = 0; x < p.size(); ++x)
        if (!p.leq(x, s(x))) return false;
    return true;
}

bool is_order_preserving(const FinitePoset& p, const SelfMap& s) {
    s.check_carrier(p);
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y)
            if (p.leq(x, y) && !p.leq(s(x), s(y))) return false;
    return true;
}

bool is_idempotent(const SelfMap& s) {
    for (Index x = 0; x < s.size(); ++x)
        if (s(s(x)) != s(x)) return false;
    return true;
}

bool is_preclosure(const FinitePoset& p, const SelfMap& s) { return is_expansive(p, s) && is_order_preserving(p, s); }

namespace {

bool closure_raw(const FinitePoset& p, const SelfMap& s) { return is_preclosure(p, s) && is_idempotent(s); }

bool closure_single_axiom(const FinitePoset& p, const SelfMap& s) {
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y)
            if (p.leq(x, s(y)) != p.leq(s(x), s(y))) return false;
    return true;
}

void check_same(const OrderedMagma& m, const SelfMap& s) { s.check_carrier(m.poset()); }

}  // namespace

bool is_closure(const FinitePoset& p, const SelfMap& s) {
    const bool raw = closure_raw(p, s);
    ensure(raw == closure_single_axiom(p, s), "closure axioms disagree with the single-axiom form");
    return raw;
}

NucleusConditions nucleus_conditions(const OrderedMagma& m, const SelfMap& s) {
    check_same(m, s);
    const auto& p = m.poset();
    const auto n = m.size();
    NucleusConditions c;
    c.closure = closure_raw(p, s);
    c.products_below = c.star_products = c.one_sided = c.strict = c.star_associative = true;
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            const auto sxy = s(m.mul(x, y));
            const auto prod = m.mul(s(x), s(y));
            if (!p.leq(prod, sxy)) c.products_below = false;
            if (prod != sxy) c.strict = false;
            if (s(prod) != sxy) c.star_products = false;
            if (!p.leq(m.mul(x, s(y)), sxy) || !p.leq(m.mul(s(x), y), sxy)) c.one_sided = false;
        }
    for (Index x = 0; x < n && c.star_associative; ++x)
        for (Index y = 0; y < n && c.star_associative; ++y)
            for (Index z = 0; z < n; ++z)
                if (s(m.mul(s(m.mul(x, y)), z)) != s(m.mul(x, s(m.mul(y, z))))) {
                    c.star_associative = false;
                    break;
                }
    if (m.unit()) {
        bool eq = true, impl = is_expansive(p, s);
        for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y)
                for (Index z = 0; z < n; ++z) {
                    const auto sz = s(z);
                    const bool a = p.leq(m.mul(x, y), sz);
                    const bool b = p.leq(m.mul(x, s(y)), sz);
                    const bool d = p.leq(m.mul(s(x), y), sz);
                    if (a != b || b != d) eq = false;
                    if (a && !p.leq(m.mul(s(x), s(y)), sz)) impl = false;
                }
        c.unital_equivalences = eq;
        c.unital_implication = impl;
    }
    return c;
}

bool is_nucleus(const OrderedMagma& m, const SelfMap& s) {
    const auto c = nucleus_conditions(m, s);
    const bool nucleus = c.closure && c.products_below;
    if (c.closure) {
        ensure(c.products_below == c.star_products && c.star_products == c.one_sided,
               "nucleus characterizations disagree");
        if (m.unit() && is_associative(m))
            ensure(c.star_associative == nucleus, "star-associativity disagrees with nucleus test");
    }
    if (m.unit()) {
        ensure(*c.unital_equivalences == nucleus, "unital nucleus equivalence disagrees");
        ensure(*c.unital_implication == nucleus, "unital nucleus implication disagrees");
    }
    return nucleus;
}

bool is_strict_nucleus(const OrderedMagma& m, const SelfMap& s) {
    return is_nucleus(m, s) && nucleus_conditions(m, s).strict;
}

ElementSet transportable(const OrderedMagma& m, const SelfMap& s) {
    check_same(m, s);
    const auto n = m.size();
    ElementSet t(n);
    for (Index a = 0; a < n; ++a) {
        bool ok = true;
        for (Index x = 0; x < n && ok; ++x)
            ok = s(m.mul(a, x)) == m.mul(a, s(x)) && s(m.mul(x, a)) == m.mul(s(x), a);
        if (ok) t.set(a);
    }
    return t;
}

MonotoneMap closure_from_preclosure(const FinitePoset& p, const SelfMap& plus) {
    plus.check_carrier(p);
    require(is_preclosure(p, plus), "map is not a preclosure (expansive and order-preserving)");
    const auto n = p.size();
    std::vector<Index> t(n);
    for (Index x = 0; x < n; ++x) {
        Index y = x;
        std::size_t steps = 0;
        while (plus(y) != y) {
            y = plus(y);
            if (++steps > n) fail(ErrorKind::iteration_budget, "preclosure iteration did not converge");
        }
        t[x] = y;
    }
    MonotoneMap c(p, std::move(t));
    const auto fix = fixed_set(p, plus);
    for (Index x = 0; x < n; ++x) {
        const auto above = fix & p.leq_row(x);
        const auto m = p.inf(above);
        ensure(m && above[*m] && *m == c(x), "preclosure hull differs from the meet of fixed points");
    }
    ensure(is_closure(p, c), "preclosure hull is not a closure");
    ensure(fixed_set(p, c) == fix, "preclosure hull image differs from Fix(+)");
    return c;
}

PreclosureHull closure_from_preclosure(const OrderedMagma& m, const SelfMap& plus) {
    PreclosureHull h{closure_from_preclosure(m.poset(), plus), false, false};
    const auto prof = classify(m);
    bool mult = prof.near_residuated;
    for (Index x = 0; x < m.size() && mult; ++x)
        for (Index y = 0; y < m.size() && mult; ++y) {
            const auto pxy = plus(m.mul(x, y));
            mult = m.leq(m.mul(x, plus(y)), pxy) && m.leq(m.mul(plus(x), y), pxy);
        }
    h.multiplicative_hypothesis = mult;
    h.nucleus = is_nucleus(m, h.closure);
    if (mult) ensure(h.nucleus, "hull of a multiplicative preclosure is not a nucleus");
    return h;
}

MonotoneMap nuclei_meet(const OrderedMagma& m, std::span<const SelfMap> gamma) {
    const auto& p = m.poset();
    for (const auto& s : gamma) require(is_nucleus(m, s), "every member of the family must be a nucleus");
    if (gamma.empty()) return MonotoneMap::top(p);
    const auto n = m.size();
    std::vector<Index> t(n);
    for (Index x = 0; x < n; ++x) {
        ElementSet vals(n);
        for (const auto& s : gamma) vals.set(s(x));
        auto r = p.inf(vals);
        if (!r) fail(ErrorKind::missing_infimum, "no infimum of the values at " + p.label(x));
        t[x] = *r;
    }
    MonotoneMap out(p, std::move(t));
    ensure(is_nucleus(m, out), "pointwise meet of nuclei is not a nucleus");
    const auto img = fixed_set(p, out);
    for (const auto& s : gamma) {
        ensure(fixed_set(p, s).is_subset_of(img), "meet image misses a member image");
        ensure(pointwise_leq(p, out, s), "meet is not below a member");
    }
    return out;
}

MonotoneMap nuclei_join(const OrderedMagma& m, std::span<const SelfMap> gamma) {
    const auto& p = m.poset();
    const auto n = m.size();
    for (const auto& s : gamma) require(is_nucleus(m, s), "every member of the family must be a nucleus");
    const auto prof = classify(m);
    ElementSet common = p.full_set();
    for (const auto& s : gamma) common &= fixed_set(p, s);
    if (!prof.near_prequantale) {
        require(prof.bounded_complete && prof.near_residuated,
                "joins of nuclei need a near prequantale or a bounded complete near residuated carrier");
        for (Index x = 0; x < n; ++x)
            require((common & p.leq_row(x)).any(), "family of nuclei is not bounded above");
    }
    std::vector<Index> t(n);
    for (Index x = 0; x < n; ++x) {
        const auto above = common & p.leq_row(x);
        auto r = p.inf(above);
        ensure(r && above[*r], "common fixed points above an element have no least member");
        t[x] = *r;
    }
    MonotoneMap out(p, std::move(t));
    // second route: hull of the pointwise join of the family
    if (!gamma.empty()) {
        std::vector<Index> pj(n);
        for (Index x = 0; x < n; ++x) {
            ElementSet vals(n);
            for (const auto& s : gamma) vals.set(s(x));
            auto r = p.sup(vals);
            ensure(r.has_value(), "pointwise join of bounded nuclei missing");
            pj[x] = *r;
        }
        const auto hull = closure_from_preclosure(p, SelfMap(p, pj));
        ensure(hull.table() == out.table(), "join by common fixed points differs from preclosure hull");
    }
    ensure(is_nucleus(m, out), "join of nuclei is not a nucleus");
    ensure(fixed_set(p, out) == common, "join image differs from the intersection of images");
    return out;
}

std::optional<MonotoneMap> closure_from_image(const FinitePoset& p, const ElementSet& c) {
    const auto n = p.size();
    std::vector<Index> t(n);
    for (Index x = 0; x < n; ++x) {
        const auto above = c & p.leq_row(x);
        if (above.none()) return std::nullopt;
        auto r = p.inf(above);
        if (!r || !above[*r]) return std::nullopt;
        t[x] = *r;
    }
    return MonotoneMap(p, std::move(t));
}

namespace {

void name_standard(const FinitePoset& p, MonotoneMap& s) {
    bool id = true, top = p.top().has_value();
    for (Index x = 0; x < p.size(); ++x) {
        if (s(x) != x) id = false;
        if (top && s(x) != *p.top()) top = false;
    }
    if (id) s.set_name("d");
    else if (top) s.set_name("e");
}

struct ImageSearch {
    const FinitePoset& p;
    const OrderedMagma* residual_source;  // prune by residual stability when set
    std::size_t max_results;
    std::vector<Index> order;  // descending
    std::vector<int> status;   // 0 undecided, 1 in, 2 out
    std::vector<int> forced;
    std::vector<Index> in;
    std::vector<MonotoneMap> out;

    void run() {
        const auto n = p.size();
        order.assign(p.ascending().rbegin(), p.ascending().rend());
        status.assign(n, 0);
        forced.assign(n, 0);
        step(0);
    }

    bool add_in(Index x, std::vector<Index>& bumped) {
        for (auto y : in) {
            const auto t = p.meet(x, y);
            if (t == kNone || t == x || t == y) continue;
            if (status[t] == 2) return false;
            if (status[t] == 0) {
                ++forced[t];
                bumped.push_back(t);
            }
        }
        if (residual_source) {
            for (Index y = 0; y < p.size(); ++y)
                for (auto r : {residual_source->left_residual(x, y), residual_source->right_residual(x, y)}) {
                    if (r == kNone || r == x) continue;
                    if (status[r] == 2) return false;
                    if (status[r] == 0) {
                        ++forced[r];
                        bumped.push_back(r);
                    }
                }
        }
        return true;
    }

    void step(std::size_t k) {
        if (k == order.size()) {
            ElementSet c(p.size());
            for (auto x : in) c.set(x);
            if (auto s = closure_from_image(p, c)) {
                if (out.size() >= max_results)
                    fail(ErrorKind::carrier_too_large, "closure enumeration exceeded its result budget");
                out.push_back(std::move(*s));
            }
            return;
        }
        const auto x = order[k];
        const bool is_top = p.top() && *p.top() == x;
        if (forced[x] == 0 && !is_top) {
            status[x] = 2;
            step(k + 1);
        }
        status[x] = 1;
        std::vector<Index> bumped;
        if (add_in(x, bumped)) {
            in.push_back(x);
            step(k + 1);
            in.pop_back();
        }
        for (auto b : bumped) --forced[b];
        status[x] = 0;
    }
};

std::vector<MonotoneMap> finish(const FinitePoset& p, std::vector<MonotoneMap> v) {
    std::sort(v.begin(), v.end());
    for (auto& s : v) name_standard(p, s);
    return v;
}

std::vector<MonotoneMap> nuclei_by_filter(const OrderedMagma& m, const EnumerationOptions& opt) {
    std::vector<MonotoneMap> out;
    for (auto& s : enumerate_closures(m.poset(), opt))
        if (is_nucleus(m, s)) out.push_back(std::move(s));
    return out;
}

}  // namespace

std::vector<MonotoneMap> enumerate_closures(const FinitePoset& p, const EnumerationOptions& opt) {
    if (p.size() > kEnumerationCap) fail(ErrorKind::carrier_too_large, "carrier exceeds the enumeration cap");
    ImageSearch search{p, nullptr, opt.max_results, {}, {}, {}, {}, {}};
    search.run();
    return finish(p, std::move(search.out));
}

std::vector<MonotoneMap> enumerate_nuclei(const OrderedMagma& m, const EnumerationOptions& opt) {
    const auto& p = m.poset();
    if (p.size() > kEnumerationCap) fail(ErrorKind::carrier_too_large, "carrier exceeds the enumeration cap");
    const auto prof = classify(m);
    if (!(prof.bounded_complete && prof.near_residuated)) return finish(p, nuclei_by_filter(m, opt));
    ImageSearch search{p, &m, opt.max_results, {}, {}, {}, {}, {}};
    search.run();
    auto out = finish(p, std::move(search.out));
    if (opt.cross_check) {
        const auto filtered = finish(p, nuclei_by_filter(m, opt));
        ensure(filtered == out, "image-set nucleus enumeration differs from the closure filter");
    }
    return out;
}

// ---------------------------------------------------------------------------

Index QuotientMagma::from_parent(Index x) const {
    const auto v = nucleus(x);
    auto it = std::lower_bound(image.begin(), image.end(), v);
    return static_cast<Index>(it - image.begin());
}

QuotientMagma quotient(const OrderedMagma& m, const SelfMap& s) {
    require(is_nucleus(m, s), "quotient needs a nucleus");
    const auto& p = m.poset();
    const auto n = m.size();
    QuotientMagma q{m, MonotoneMap(p, s.table(), s.name()), fixed_points(s), OrderedMagma()};
    const auto& img = q.image;
    auto pos = [&](Index v) {
        return static_cast<Index>(std::lower_bound(img.begin(), img.end(), v) - img.begin());
    };
    q.magma = OrderedMagma::from_function(
        p.restrict_to(img), [&](Index a, Index b) { return pos(s(m.mul(img[a], img[b]))); },
        m.name() + "/" + (s.name().empty() ? std::string("*") : s.name()));
    const auto& qp = q.magma.poset();

    if (m.unit()) ensure(q.magma.unit() && *q.magma.unit() == pos(s(*m.unit())), "unit not inherited by quotient");

    // corestriction preserves every existing supremum
    auto check_sup = [&](const ElementSet& xs) {
        auto sx = p.sup(xs);
        if (!sx) return;
        ElementSet imgs(img.size());
        for (auto x = xs.find_first(); x != ElementSet::npos; x = xs.find_next(x))
            imgs.set(pos(s(static_cast<Index>(x))));
        auto t = qp.sup(imgs);
        ensure(t && *t == pos(s(*sx)), "corestriction is not sup-preserving");
    };
    if (n <= 10) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) check_sup(ElementSet(n, mask));
    } else {
        check_sup(ElementSet(n));
        for (Index a = 0; a < n; ++a)
            for (Index b = a + 1; b < n; ++b) {
                ElementSet xs(n);
                xs.set(a);
                xs.set(b);
                check_sup(xs);
            }
    }

    const auto pp = classify(m);
    const auto qq = classify(q.magma);
    auto inherit = [&](bool parent, bool child, const char* what) {
        if (parent) ensure(child, std::string("quotient lost property: ") + what);
    };
    inherit(pp.prequantale, qq.prequantale, "prequantale");
    inherit(pp.near_prequantale, qq.near_prequantale, "near prequantale");
    inherit(pp.semiprequantale, qq.semiprequantale, "semiprequantale");
    inherit(pp.quantale(), qq.quantale(), "quantale");
    inherit(pp.near_quantale(), qq.near_quantale(), "near quantale");
    inherit(pp.multiplicative_lattice(), qq.multiplicative_lattice(), "multiplicative lattice");
    inherit(pp.near_multiplicative_lattice(), qq.near_multiplicative_lattice(), "near multiplicative lattice");
    inherit(pp.multiplicative_semilattice, qq.multiplicative_semilattice, "multiplicative semilattice");
    inherit(pp.prequantic_semilattice, qq.prequantic_semilattice, "prequantic semilattice");
    inherit(pp.near_residuated, qq.near_residuated, "near residuated");
    inherit(pp.residuated, qq.residuated, "residuated");
    if (pp.associative && pp.unital) ensure(qq.associative, "star-multiplication not associative on a monoid");
    {
        const auto du = distinguished_sets(m).units;
        const auto dq = distinguished_sets(q.magma).units;
        inherit(pp.near_sup_magma && is_sup_spanning(m, p.make_set(du)),
                qq.near_sup_magma && is_sup_spanning(q.magma, qp.make_set(dq)), "near U-lattice");
    }
    if (pp.near_residuated) {
        for (auto x : img)
            for (Index y = 0; y < n; ++y) {
                const auto l = m.left_residual(x, y), r = m.right_residual(x, y);
                if (l != kNone) {
                    ensure(s(l) == l && m.left_residual(x, s(y)) == l, "residual formula fails in quotient");
                    if (s(y) == y) ensure(q.magma.left_residual(pos(x), pos(y)) == pos(l), "quotient residual differs");
                }
                if (r != kNone) {
                    ensure(s(r) == r && m.right_residual(x, s(y)) == r, "residual formula fails in quotient");
                    if (s(y) == y)
                        ensure(q.magma.right_residual(pos(x), pos(y)) == pos(r), "quotient residual differs");
                }
            }
    }
    return q;
}

MonotoneMap nucleus_of_morphism(const MagmaMap& f) {
    const auto& q = f.source;
    if (!is_homomorphism(f)) fail(ErrorKind::not_a_morphism, "map is not multiplicative");
    if (!is_order_preserving(f)) fail(ErrorKind::not_a_morphism, "map is not order-preserving");
    if (!preserves_nonempty_sups(f)) fail(ErrorKind::not_a_morphism, "map does not preserve nonempty suprema");
    require(classify(q).near_prequantale, "source must be a near prequantale");
    const auto n = q.size();
    const auto& p = q.poset();
    std::vector<Index> t(n);
    for (Index x = 0; x < n; ++x) {
        ElementSet fiber(n);
        for (Index y = 0; y < n; ++y)
            if (f(y) == f(x)) fiber.set(y);
        t[x] = *p.sup(fiber);
    }
    MonotoneMap s(p, std::move(t));
    ensure(is_nucleus(q, s), "nucleus of a morphism is not a nucleus");
    const auto img = fixed_points(s);
    for (Index x = 0; x < n; ++x) ensure(f(s(x)) == f(x), "morphism does not factor through the corestriction");
    ElementSet hit(f.target.size());
    for (auto x : img) {
        ensure(!hit[f(x)], "restriction to the image is not injective");
        hit.set(f(x));
    }
    const auto qt = quotient(q, s);
    const auto im = submagma(f.target, hit);
    MagmaMap iso{qt.magma, im.magma, {}};
    for (auto x : img) iso.table.push_back(*im.from_parent(f(x)));
    ensure(is_isomorphism(iso), "image of the nucleus is not isomorphic to the image of the morphism");
    return s;
}

bool is_saturated(const OrderedMagma& m, const ElementSet& n) {
    const auto z = m.annihilator();
    for (Index x = 0; x < m.size(); ++x)
        for (Index y = 0; y < m.size(); ++y) {
            if (z && (x == *z || y == *z)) continue;
            if (n[m.mul(x, y)] && !(n[x] && n[y])) return false;
        }
    return true;
}

bool is_downward_closed(const FinitePoset& p, const ElementSet& n) {
    for (auto x = n.find_first(); x != ElementSet::npos; x = n.find_next(x))
        if (!p.geq_row(static_cast<Index>(x)).is_subset_of(n)) return false;
    return true;
}

MonotoneMap induced_lower(const Submagma& sub, const SelfMap& s) {
    const auto& m = sub.parent;
    const auto& p = m.poset();
    const auto n = m.size();
    require(is_nucleus(sub.magma, s), "map must be a nucleus on the submagma");
    require(classify(m).near_prequantale, "ambient magma must be a near prequantale");
    const auto nset = p.make_set(sub.elements);
    require(is_sup_spanning(m, nset), "submagma must be sup-spanning");
    // y is admissible when s(z) <= y for every z in N below y
    ElementSet admissible(n);
    for (Index y = 0; y < n; ++y) {
        bool ok = true;
        for (Index i = 0; i < sub.elements.size() && ok; ++i)
            if (p.leq(sub.elements[i], y)) ok = p.leq(sub.to_parent(s(i)), y);
        if (ok) admissible.set(y);
    }
    std::vector<Index> t(n);
    for (Index x = 0; x < n; ++x) {
        const auto above = admissible & p.leq_row(x);
        auto r = p.inf(above);
        ensure(r && above[*r], "induced nucleus formula has no least admissible element");
        t[x] = *r;
    }
    MonotoneMap out(p, std::move(t));
    // second route: hull of x -> x v sup{s(z) : z in N, z <= x}
    std::vector<Index> plus(n);
    for (Index x = 0; x < n; ++x) {
        ElementSet vals(n);
        vals.set(x);
        for (Index i = 0; i < sub.elements.size(); ++i)
            if (p.leq(sub.elements[i], x)) vals.set(sub.to_parent(s(i)));
        plus[x] = *p.sup(vals);
    }
    ensure(closure_from_preclosure(p, SelfMap(p, plus)).table() == out.table(),
           "induced nucleus differs from its preclosure hull");
    ensure(is_nucleus(m, out), "induced nucleus is not a nucleus");
    for (Index i = 0; i < sub.elements.size(); ++i)
        ensure(out(sub.elements[i]) == sub.to_parent(s(i)), "induced nucleus does not restrict to the given one");
    return out;
}

MonotoneMap induced_upper(const Submagma& sub, const SelfMap& s) {
    const auto& m = sub.parent;
    const auto& p = m.poset();
    require(is_nucleus(sub.magma, s), "map must be a nucleus on the submagma");
    require(classify(m).near_sup_magma, "ambient magma must be a near sup-magma");
    const auto nset = p.make_set(sub.elements);
    if (!is_downward_closed(p, nset)) fail(ErrorKind::not_downward_closed, "subset is not downward closed");
    if (!is_saturated(m, nset)) fail(ErrorKind::not_saturated, "subset is not saturated");
    const auto top = *p.top();
    std::vector<Index> t(m.size());
    for (Index x = 0; x < m.size(); ++x) {
        auto i = sub.from_parent(x);
        t[x] = i ? sub.to_parent(s(*i)) : top;
    }
    MonotoneMap out(p, std::move(t));
    ensure(is_nucleus(m, out), "upper induced map is not a nucleus");
    return out;
}

MonotoneMap d_map(const OrderedMagma& m, ElementId a_id) {
    const auto a = m.index_of(a_id);
    require(m.unit() && is_commutative(m) && is_associative(m), "d_a needs an ordered commutative monoid");
    if (!(m.mul(a, a) == a && m.leq(*m.unit(), a)))
        fail(ErrorKind::not_idempotent_above_unit, m.label(a) + " is not an idempotent above the unit");
    std::vector<Index> t(m.size());
    for (Index x = 0; x < m.size(); ++x) t[x] = m.mul(x, a);
    MonotoneMap d(m.poset(), std::move(t), "d_" + m.label(a));
    ensure(is_strict_nucleus(m, d), "d_a is not a strict nucleus");
    ensure(d(*m.unit()) == a, "unit part of d_a differs from a");
    return d;
}

ElementId unit_part(const OrderedMagma& m, const SelfMap& s) {
    if (!m.unit()) fail(ErrorKind::no_unit, "unit part needs a unit");
    require(is_nucleus(m, s), "unit part needs a nucleus");
    const auto u = s(*m.unit());
    ensure(m.mul(u, u) == u && m.leq(*m.unit(), u), "1* is not an idempotent above 1");
    return m.element(u);
}

namespace {

Index bracket(const OrderedMagma& q, Index x) {
    const auto& p = q.poset();
    Index acc = p.join(*q.unit(), x);
    Index pw = x;
    for (std::size_t k = 0; k <= q.size() + 1; ++k) {
        pw = q.mul(pw, x);
        const auto next = p.join(acc, pw);
        if (next == acc) return acc;
        acc = next;
    }
    fail(ErrorKind::internal, "power series did not stabilize");
}

void require_unital_near_quantale(const OrderedMagma& q) {
    const auto prof = classify(q);
    require(prof.near_quantale() && prof.unital, "needs a unital near quantale");
}

}  // namespace

ElementId one_bracket(const OrderedMagma& q, ElementId x_id) {
    const auto x = q.index_of(x_id);
    require_unital_near_quantale(q);
    const auto r = bracket(q, x);
    const auto rs = r_elements(q);
    ensure(std::find(rs.begin(), rs.end(), r) != rs.end(), "1[x] is not in R(Q)");
    for (auto a : rs)
        if (q.leq(x, a)) ensure(q.leq(r, a), "1[x] is not the least element of R(Q) above x");
    return q.element(r);
}

MonotoneMap one_bracket_map(const OrderedMagma& q) {
    require_unital_near_quantale(q);
    std::vector<Index> t(q.size());
    for (Index x = 0; x < q.size(); ++x) t[x] = bracket(q, x);
    MonotoneMap b(q.poset(), std::move(t), "1[-]");
    ensure(is_closure(q.poset(), b), "1[-] is not a closure");
    const auto rs = r_elements(q);
    ensure(fixed_points(b) == rs, "image of 1[-] differs from R(Q)");
    return b;
}

Index NucleusLattice::index_of(const SelfMap& s) const {
    for (Index i = 0; i < nuclei.size(); ++i)
        if (nuclei[i].table() == s.table()) return i;
    fail(ErrorKind::malformed, "map is not in the nucleus lattice");
}

NucleusLattice nucleus_lattice(const OrderedMagma& m, const EnumerationOptions& opt) {
    auto nuclei = enumerate_nuclei(m, opt);
    const auto& p = m.poset();
    std::vector<std::string> labels;
    std::size_t k = 0;
    for (const auto& s : nuclei) labels.push_back(s.name().empty() ? "s" + std::to_string(k++) : s.name());
    auto np = FinitePoset::from_predicate(
        labels, [&](Index a, Index b) { return pointwise_leq(p, nuclei[a], nuclei[b]); });
    for (Index a = 0; a < nuclei.size(); ++a)
        for (Index b = 0; b < nuclei.size(); ++b)
            if (np.join(a, b) == kNone) fail(ErrorKind::hypothesis_not_met, "nuclei do not form a join semilattice");
    auto nm = OrderedMagma::from_function(
        np, [&](Index a, Index b) { return np.join(a, b); }, "N(" + m.name() + ")");
    bool joins_supported = true;
    try {
        std::vector<SelfMap> probe;
        (void)nuclei_join(m, probe);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::hypothesis_not_met) throw;
        joins_supported = false;
    }
    if (joins_supported && nuclei.size() <= 24) {
        for (Index a = 0; a < nuclei.size(); ++a)
            for (Index b = a + 1; b < nuclei.size(); ++b) {
                std::vector<SelfMap> g{nuclei[a], nuclei[b]};
                ensure(nuclei_join(m, g).table() == nuclei[np.join(a, b)].table(),
                       "join in N(M) differs from the common-fixed-point join");
            }
    }
    return NucleusLattice{nm, std::move(nuclei)};
}

bool TowerReport::stabilizes() const { return !d_is_isomorphism.empty() && d_is_isomorphism.front(); }

TowerReport nucleus_tower(const OrderedMagma& m, std::size_t depth, std::size_t level_cap) {
    TowerReport rep;
    OrderedMagma cur = m;
    EnumerationOptions opt;
    opt.cross_check = false;
    for (std::size_t k = 0; k < depth; ++k) {
        if (cur.size() > level_cap) fail(ErrorKind::carrier_too_large, "tower level exceeds the cap");
        auto lvl = nucleus_lattice(cur, opt);
        const auto& lm = lvl.magma;
        const auto& lp = lm.poset();
        // every element idempotent and above the unit d; multiplication is the join
        ensure(lm.unit().has_value() && lvl.nuclei[*lm.unit()].name() == "d", "identity nucleus is not the unit");
        ensure(r_elements(lm).size() == lm.size(), "N is not equal to R(N)");
        for (Index a = 0; a < lm.size(); ++a)
            for (Index b = 0; b < lm.size(); ++b) ensure(lm.mul(a, b) == lp.join(a, b), "multiplication is not join");
        if (k >= 1) {
            // d_- : previous level -> this level, a -> (a v -)
            const auto& prev = rep.levels.back().magma;
            bool iso = prev.size() == lm.size();
            for (Index a = 0; a < prev.size(); ++a) {
                std::vector<Index> t(prev.size());
                for (Index x = 0; x < prev.size(); ++x) t[x] = prev.poset().join(a, x);
                bool found = false;
                for (const auto& s : lvl.nuclei) found = found || s.table() == t;
                ensure(found, "d_a is not a nucleus of the next level");
            }
            rep.d_is_isomorphism.push_back(iso);
        }
        if (k + 1 < depth) {
            // N(N^k) consists of closures, since multiplication is join
            opt.cross_check = lm.size() <= 12;
            if (lm.size() <= 12)
                ensure(enumerate_closures(lp).size() == enumerate_nuclei(lm, opt).size(),
                       "N(N) differs from C(N)");
            opt.cross_check = false;
        }
        cur = lm;
        rep.levels.push_back(std::move(lvl));
    }
    return rep;
}

CompositionJoin composition_join_check(const OrderedMagma& m, const SelfMap& s1, const SelfMap& s2,
                                       std::size_t bound) {
    require(is_nucleus(m, s1) && is_nucleus(m, s2), "both maps must be nuclei");
    const auto& p = m.poset();
    SelfMap a = s2, b = s1;  // n = 1
    for (std::size_t n = 1; n <= bound; ++n) {
        if (pointwise_leq(p, b, a)) {
            MonotoneMap j(p, a.table(), "join");
            ensure(is_nucleus(m, j), "certified composition is not a nucleus");
            ensure(pointwise_leq(p, s1, j) && pointwise_leq(p, s2, j), "composition is not an upper bound");
            try {
                std::vector<SelfMap> g{s1, s2};
                ensure(nuclei_join(m, g).table() == j.table(), "composition join differs from nuclei_join");
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::hypothesis_not_met) throw;
            }
            return CompositionJoin{n, j};
        }
        // extend on the left, alternating
        const bool odd = (n % 2) == 1;
        a = compose(odd ? s1 : s2, a);
        b = compose(odd ? s2 : s1, b);
    }
    fail(ErrorKind::bound_exhausted, "no alternating composition up to the bound is certified");
}

}  // namespace prequant
