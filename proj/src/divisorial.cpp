#include "prequant/divisorial.hpp"

#include <algorithm>
#include <set>

#include "prequant/finitary.hpp"

namespace prequant {

namespace {

constexpr std::size_t kCoarsestCheckCap = 16;
constexpr std::size_t kLinCap = 2'000'000;

using Table = std::vector<Index>;

std::string v_name(const OrderedMagma& q, Index a) { return "v(" + q.label(a) + ")"; }

// Largest y in the set, when the set's supremum belongs to it.
Index largest(const OrderedMagma& q, const ElementSet& ys, const char* what) {
    auto s = q.poset().sup(ys);
    ensure(s && ys[*s], what);
    return *s;
}

MonotoneMap finish(const OrderedMagma& q, Index a, Table t) {
    MonotoneMap m(q.poset(), std::move(t), v_name(q, a));
    ensure(is_nucleus(q, m), "divisorial formula is not a nucleus");
    ensure(m(a) == a, "divisorial formula does not fix a");
    return m;
}

// Lin(Q): the monoid generated by left and right translations.
std::vector<Table> lin_maps(const OrderedMagma& q) {
    const auto n = q.size();
    std::vector<Table> gens;
    for (Index r = 0; r < n; ++r) {
        Table l(n), rr(n);
        for (Index x = 0; x < n; ++x) {
            l[x] = q.mul(r, x);
            rr[x] = q.mul(x, r);
        }
        gens.push_back(std::move(l));
        gens.push_back(std::move(rr));
    }
    Table id(n);
    for (Index x = 0; x < n; ++x) id[x] = x;
    std::set<Table> seen{id};
    std::vector<Table> all{id}, frontier{id};
    while (!frontier.empty()) {
        std::vector<Table> next;
        for (const auto& h : frontier)
            for (const auto& g : gens) {
                Table c(n);
                for (Index x = 0; x < n; ++x) c[x] = g[h[x]];
                if (seen.insert(c).second) {
                    if (all.size() >= kLinCap) fail(ErrorKind::carrier_too_large, "Lin(Q) saturation too large");
                    all.push_back(c);
                    next.push_back(std::move(c));
                }
            }
        frontier = std::move(next);
    }
    return all;
}

std::optional<MonotoneMap> via_lin(const OrderedMagma& q, Index a, const Profile& prof) {
    if (!prof.near_prequantale) return std::nullopt;
    const auto n = q.size();
    const auto lin = lin_maps(q);
    // hits[x] = the maps f with f(x) <= a
    std::vector<boost::dynamic_bitset<>> hits(n, boost::dynamic_bitset<>(lin.size()));
    for (std::size_t f = 0; f < lin.size(); ++f)
        for (Index x = 0; x < n; ++x)
            if (q.leq(lin[f][x], a)) hits[x].set(f);
    Table t(n);
    for (Index x = 0; x < n; ++x) {
        ElementSet ys(n);
        for (Index y = 0; y < n; ++y)
            if (hits[x].is_subset_of(hits[y])) ys.set(y);
        t[x] = largest(q, ys, "Lin formula has no largest element");
    }
    return finish(q, a, std::move(t));
}

std::optional<MonotoneMap> via_rs(const OrderedMagma& q, Index a, const Profile& prof) {
    if (!(prof.near_quantale() && prof.unital)) return std::nullopt;
    const auto n = q.size();
    std::vector<boost::dynamic_bitset<>> hits(n, boost::dynamic_bitset<>(n * n));
    for (Index x = 0; x < n; ++x)
        for (Index r = 0; r < n; ++r)
            for (Index s = 0; s < n; ++s)
                if (q.leq(q.mul(q.mul(r, x), s), a)) hits[x].set(r * n + s);
    Table t(n);
    for (Index x = 0; x < n; ++x) {
        ElementSet ys(n);
        for (Index y = 0; y < n; ++y)
            if (hits[x].is_subset_of(hits[y])) ys.set(y);
        t[x] = largest(q, ys, "rs formula has no largest element");
    }
    return finish(q, a, std::move(t));
}

bool residual_applies(const OrderedMagma& q, const Profile& prof) {
    return prof.associative && prof.unital && prof.near_residuated && q.poset().top().has_value();
}

std::optional<MonotoneMap> via_residual(const OrderedMagma& q, Index a, const Profile& prof) {
    if (!residual_applies(q, prof) || !is_cyclic(q, q.element(a)).is_cyclic) return std::nullopt;
    const auto n = q.size();
    const auto top = *q.poset().top();
    Table t(n);
    for (Index x = 0; x < n; ++x) {
        const auto ax = q.left_residual(a, x);   // a/x
        const auto xa = q.right_residual(a, x);  // x\a
        if (ax == kNone || xa == kNone) {
            t[x] = top;
            continue;
        }
        const auto r = q.left_residual(a, ax);
        ensure(r != kNone, "a/(a/x) is missing");
        t[x] = r;
    }
    return finish(q, a, std::move(t));
}

bool units_apply(const OrderedMagma& q, const Profile& prof) {
    if (!(prof.associative && prof.unital && prof.near_sup_magma && q.poset().top())) return false;
    ElementSet u(q.size());
    for (auto i : distinguished_sets(q).units) u.set(i);
    return is_sup_spanning(q, u);
}

std::optional<MonotoneMap> via_units(const OrderedMagma& q, Index a, const Profile& prof) {
    if (!units_apply(q, prof)) return std::nullopt;
    const auto n = q.size();
    const auto units = distinguished_sets(q).units;
    ElementSet sandwiches(n);
    for (auto u : units)
        for (auto w : units) sandwiches.set(q.mul(q.mul(u, a), w));
    Table t(n);
    for (Index x = 0; x < n; ++x) {
        ElementSet above = sandwiches & q.poset().leq_row(x);
        if (above.none()) {
            t[x] = *q.poset().top();
            continue;
        }
        auto m = q.poset().inf(above);
        if (!m) fail(ErrorKind::missing_infimum, "meet of unit sandwiches above " + q.label(x) + " is missing");
        t[x] = *m;
    }
    return finish(q, a, std::move(t));
}

bool all_compact(const OrderedMagma& q) { return compact_elements(q.poset()).size() == q.size(); }

// x -> sup{x/z : z in zs}.
MonotoneMap bar_formula(const OrderedMagma& q, const std::vector<Index>& zs, const std::string& name) {
    Table t(q.size());
    for (Index x = 0; x < q.size(); ++x) {
        ElementSet vals(q.size());
        for (auto z : zs) {
            const auto r = q.left_residual(x, z);
            ensure(r != kNone, "x/z is missing for z <= 1");
            vals.set(r);
        }
        auto s = q.poset().sup(vals);
        ensure(s.has_value(), "supremum in the stable formula is missing");
        t[x] = *s;
    }
    return MonotoneMap(q.poset(), std::move(t), name);
}

void require_near_mult(const OrderedMagma& q, const Profile& prof) {
    require(prof.near_multiplicative_lattice(), q.name() + " is not a near multiplicative lattice");
    require(prof.precoherent, q.name() + " is not precoherent");
}

// The definition: finite meets, and residuals by compacts where defined.
bool stable_by_definition(const OrderedMagma& q, const SelfMap& s) {
    const auto& p = q.poset();
    const auto n = q.size();
    auto meet_ok = [&](const ElementSet& xs) {
        auto m = p.inf(xs);
        if (!m) return true;
        ElementSet img(n);
        for (auto x : members(xs)) img.set(s(x));
        auto mi = p.inf(img);
        return mi && *mi == s(*m);
    };
    if (n <= 12) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
            if (!meet_ok(ElementSet(n, mask))) return false;
    } else {
        for (Index x = 0; x < n; ++x)
            for (Index y = x + 1; y < n; ++y) {
                ElementSet xs(n);
                xs.set(x);
                xs.set(y);
                if (!meet_ok(xs)) return false;
            }
    }
    for (const auto& tid : compact_elements(p)) {
        const auto t = p.index_of(tid);
        for (Index x = 0; x < n; ++x) {
            if (auto r = q.left_residual(x, t); r != kNone) {
                const auto rs = q.left_residual(s(x), t);
                if (rs == kNone || s(r) != rs) return false;
            }
            if (auto r = q.right_residual(x, t); r != kNone) {
                const auto rs = q.right_residual(s(x), t);
                if (rs == kNone || s(r) != rs) return false;
            }
        }
    }
    return true;
}

std::vector<MonotoneMap> nuclei_fixing(const OrderedMagma& q, Index a) {
    std::vector<MonotoneMap> out;
    for (auto& s : enumerate_nuclei(q))
        if (s(a) == a) out.push_back(std::move(s));
    return out;
}

}  // namespace

VStrategy parse_strategy(const std::string& text) {
    if (text == "lin") return VStrategy::lin;
    if (text == "rs") return VStrategy::rs;
    if (text == "residual") return VStrategy::residual;
    if (text == "units") return VStrategy::units;
    if (text == "all") return VStrategy::all;
    fail(ErrorKind::malformed, "unknown strategy " + text);
}

std::string to_string(VStrategy s) {
    switch (s) {
        case VStrategy::lin: return "lin";
        case VStrategy::rs: return "rs";
        case VStrategy::residual: return "residual";
        case VStrategy::units: return "units";
        case VStrategy::all: return "all";
    }
    return "?";
}

std::size_t VStrategies::applicable() const {
    return std::size_t(lin.has_value()) + rs.has_value() + residual.has_value() + units.has_value();
}

bool VStrategies::agree() const {
    std::vector<const MonotoneMap*> xs;
    for (const auto* o : {&lin, &rs, &residual, &units})
        if (*o) xs.push_back(&**o);
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i]->table() != xs[0]->table()) return false;
    return true;
}

VStrategies v_strategies(const OrderedMagma& q, ElementId a_id) {
    const auto a = q.index_of(a_id);
    const auto prof = classify(q);
    return {via_lin(q, a, prof), via_rs(q, a, prof), via_residual(q, a, prof), via_units(q, a, prof)};
}

MonotoneMap v(const OrderedMagma& q, ElementId a_id, VStrategy strategy) {
    const auto a = q.index_of(a_id);
    const auto prof = classify(q);
    std::optional<MonotoneMap> r;
    switch (strategy) {
        case VStrategy::lin:
            r = via_lin(q, a, prof);
            if (!r) fail(ErrorKind::hypothesis_not_met, "lin strategy needs a near prequantale");
            return *r;
        case VStrategy::rs:
            r = via_rs(q, a, prof);
            if (!r) fail(ErrorKind::hypothesis_not_met, "rs strategy needs a unital near quantale");
            return *r;
        case VStrategy::residual:
            if (!residual_applies(q, prof))
                fail(ErrorKind::hypothesis_not_met, "residual strategy needs a near residuated ordered monoid with top");
            if (!is_cyclic(q, a_id).is_cyclic) fail(ErrorKind::non_cyclic_element, q.label(a) + " is not cyclic");
            return *via_residual(q, a, prof);
        case VStrategy::units:
            r = via_units(q, a, prof);
            if (!r) fail(ErrorKind::hypothesis_not_met, "units strategy needs an associative unital near U-lattice");
            return *r;
        case VStrategy::all: break;
    }
    auto all = v_strategies(q, a_id);
    if (all.applicable() == 0) fail(ErrorKind::hypothesis_not_met, "no v(a) strategy applies to " + q.name());
    ensure(all.agree(), "v(a) strategies disagree");
    for (auto* o : {&all.lin, &all.rs, &all.residual, &all.units})
        if (*o) return **o;
    fail(ErrorKind::internal, "unreachable");
}

std::vector<Index> divisorial_decomposition(const OrderedMagma& q, const SelfMap& s) {
    require(classify(q).near_prequantale, q.name() + " is not a near prequantale");
    require(is_nucleus(q, s), "decomposition needs a nucleus");
    const auto image = fixed_points(s);
    std::vector<SelfMap> vs;
    for (auto a : image) vs.push_back(v(q, q.element(a)));
    const auto meet = nuclei_meet(q, vs);
    ensure(meet.table() == s.table(), "meet of v(a) over the image differs from the nucleus");
    return image;
}

SimplicityReport simplicity(const OrderedMagma& q) {
    const auto prof = classify(q);
    require(prof.near_prequantale, q.name() + " is not a near prequantale");
    const auto top = *q.poset().top();
    SimplicityReport r;
    r.by_enumeration = enumerate_nuclei(q).size() <= 2;
    r.by_divisorial = true;
    for (Index a = 0; a < q.size() && r.by_divisorial; ++a) {
        if (a == top) continue;
        const auto m = v(q, q.element(a));
        for (Index x = 0; x < q.size(); ++x)
            if (m(x) != x) r.by_divisorial = false;
    }
    if (prof.near_multiplicative_lattice()) {
        bool ok = true;
        for (Index x = 0; x < q.size() && ok; ++x)
            for (Index y = 0; y < q.size() && ok; ++y) {
                if (x == top || y == top) continue;
                const auto xy = q.left_residual(x, y);
                ok = xy != kNone && q.left_residual(x, xy) == y;
            }
        r.by_residuals = ok;
    }
    ensure(r.by_enumeration == r.by_divisorial, "simplicity routes disagree");
    ensure(!r.by_residuals || *r.by_residuals == r.by_enumeration, "double-residual simplicity route disagrees");
    return r;
}

bool is_simple(const OrderedMagma& q) { return simplicity(q).simple(); }

bool GVSet::contains(Index z) const { return std::find(elements.begin(), elements.end(), z) != elements.end(); }

GVSet gv_elements(const OrderedMagma& m, const SelfMap& s) {
    if (!m.unit()) fail(ErrorKind::no_unit, m.name() + " has no unit");
    require(is_nucleus(m, s), "GV elements need a nucleus");
    const auto one = *m.unit();
    const auto& p = m.poset();
    ElementSet gv(m.size());
    for (Index z = 0; z < m.size(); ++z)
        if (m.leq(z, one) && s(z) == s(one)) gv.set(z);
    ensure(is_closed_under_mul(m, gv), "GV set is not a submagma");
    if (auto sup = p.sup(gv)) ensure(gv[*sup], "GV set misses its supremum");
    for (auto x : members(gv))
        for (auto y : members(gv)) {
            if (auto j = p.join(x, y); j != kNone) ensure(gv[j], "GV set misses a join");
            if (auto k = p.meet(x, y); k != kNone) ensure(gv[k], "GV set misses a meet");
        }
    return {members(gv)};
}

CyclicityReport is_cyclic(const OrderedMagma& m, ElementId a_id) {
    const auto a = m.index_of(a_id);
    CyclicityReport r;
    for (Index x = 0; x < m.size() && r.is_cyclic; ++x)
        for (Index y = 0; y < m.size(); ++y)
            if (m.leq(m.mul(x, y), a) && !m.leq(m.mul(y, x), a)) {
                r.is_cyclic = false;
                r.counterexample = {x, y};
                break;
            }
    if (classify(m).near_residuated) {
        bool alt = true;
        for (Index x = 0; x < m.size(); ++x) {
            const auto l = m.left_residual(a, x), rr = m.right_residual(a, x);
            if ((l == kNone) != (rr == kNone) || l != rr) alt = false;
        }
        ensure(alt == r.is_cyclic, "cyclicity scan disagrees with the residual criterion");
    }
    return r;
}

void check_stable_hypotheses(const OrderedMagma& q) {
    const auto prof = classify(q);
    require_near_mult(q, prof);
    const auto one = *q.unit();
    for (const auto& tid : compact_elements(q.poset())) {
        const auto t = q.index_of(tid);
        for (Index x = 0; x < q.size(); ++x)
            require(q.left_residual(x, t) != kNone && q.right_residual(x, t) != kNone,
                    "compact element " + q.label(t) + " is not residuated");
    }
    for (Index x = 0; x < q.size(); ++x)
        require(q.poset().meet(x, one) != kNone, q.label(x) + " meet 1 is missing");
}

MonotoneMap stable_closure(const OrderedMagma& q, const SelfMap& s) {
    check_stable_hypotheses(q);
    require(is_nucleus(q, s), "stable closure needs a nucleus");
    auto bar = bar_formula(q, gv_elements(q, s).elements, s.name() + "-bar");
    ensure(is_nucleus(q, bar), "bar is not a nucleus");
    ensure(pointwise_leq(q.poset(), bar, s), "bar is not finer than the nucleus");
    ensure(stable_by_definition(q, bar), "bar is not stable");
    if (q.size() <= kCoarsestCheckCap)
        for (const auto& t : enumerate_nuclei(q))
            if (pointwise_leq(q.poset(), t, s) && stable_by_definition(q, t))
                ensure(pointwise_leq(q.poset(), t, bar), "bar is not the coarsest stable nucleus below");
    return bar;
}

bool StableConditions::agree() const {
    return definition == meet_one_and_residuals && definition == residual_meet_one && definition == equals_bar;
}

StableConditions stable_conditions(const OrderedMagma& q, const SelfMap& s) {
    check_stable_hypotheses(q);
    require(is_nucleus(q, s), "stability needs a nucleus");
    const auto& p = q.poset();
    const auto one = *q.unit();
    const auto one_s = s(one);
    StableConditions c;
    c.definition = stable_by_definition(q, s);
    c.meet_one_and_residuals = true;
    c.residual_meet_one = true;
    const auto compacts = compact_elements(p);
    for (Index x = 0; x < q.size(); ++x) {
        const auto m = p.meet(s(x), one_s);
        if (m == kNone || s(p.meet(x, one)) != m) c.meet_one_and_residuals = false;
        for (const auto& tid : compacts) {
            const auto t = p.index_of(tid);
            const auto xt = q.left_residual(x, t);
            const auto sxt = q.left_residual(s(x), t);
            if (s(xt) != sxt) c.meet_one_and_residuals = false;
            const auto rhs = p.meet(sxt, one_s);
            if (rhs == kNone || s(p.meet(xt, one)) != rhs) c.residual_meet_one = false;
        }
    }
    c.equals_bar = bar_formula(q, gv_elements(q, s).elements, "bar").table() == s.table();
    return c;
}

bool is_stable(const OrderedMagma& q, const SelfMap& s) {
    const auto c = stable_conditions(q, s);
    ensure(c.agree(), "stable conditions disagree");
    return c.definition;
}

MonotoneMap star_w(const OrderedMagma& q, const SelfMap& s) {
    const auto prof = classify(q);
    require_near_mult(q, prof);
    const auto one = *q.unit();
    const auto& p = q.poset();
    std::vector<Index> compact_idx;
    for (const auto& c : compact_elements(p)) compact_idx.push_back(p.index_of(c));
    require(std::count(compact_idx.begin(), compact_idx.end(), one) == 1, "1 is not compact");
    std::vector<Index> zs;
    for (auto z : gv_elements(q, s).elements)
        if (std::count(compact_idx.begin(), compact_idx.end(), z)) zs.push_back(z);
    auto w = bar_formula(q, zs, s.name() + "_w");
    const auto f = star_f(q, s);
    ensure(w.table() == bar_formula(q, gv_elements(q, f).elements, "").table(), "star_w differs from (star_f)-bar");
    ensure(is_finitary(p, w).is_finitary(), "star_w is not finitary");
    if (all_compact(q))
        ensure(w.table() == bar_formula(q, gv_elements(q, s).elements, "").table(), "star_w differs from bar");
    return w;
}

MonotoneMap t_of(const OrderedMagma& q, ElementId a_id) {
    const auto a = q.index_of(a_id);
    auto t = star_f(q, v(q, a_id));
    t.set_name("t(" + q.label(a) + ")");
    ensure(t(a) == a, "t(a) does not fix a");
    if (q.size() <= kCoarsestCheckCap)
        for (const auto& s : nuclei_fixing(q, a))
            ensure(pointwise_leq(q.poset(), s, t), "t(a) is not the coarsest finitary nucleus fixing a");
    return t;
}

namespace {

void require_commutative_monoid(const OrderedMagma& q) {
    const auto prof = classify(q);
    require(prof.associative && prof.commutative && prof.unital, q.name() + " is not a commutative monoid");
}

void check_coarsest_stable(const OrderedMagma& q, Index a, const SelfMap& b, const char* what) {
    if (q.size() > kCoarsestCheckCap) return;
    for (const auto& s : nuclei_fixing(q, a))
        if (stable_by_definition(q, s)) ensure(pointwise_leq(q.poset(), s, b), what);
}

}  // namespace

MonotoneMap v_bar(const OrderedMagma& q, ElementId a_id) {
    require_commutative_monoid(q);
    const auto a = q.index_of(a_id);
    auto b = stable_closure(q, v(q, a_id));
    b.set_name("vbar(" + q.label(a) + ")");
    ensure(b(a) == a, "vbar(a) does not fix a");
    check_coarsest_stable(q, a, b, "vbar(a) is not the coarsest stable nucleus fixing a");
    return b;
}

MonotoneMap w_of(const OrderedMagma& q, ElementId a_id) {
    require_commutative_monoid(q);
    const auto a = q.index_of(a_id);
    const auto one = *q.unit();
    const auto compacts = compact_elements(q.poset());
    require(std::count(compacts.begin(), compacts.end(), q.element(one)) == 1, "1 is not compact");
    auto w = stable_closure(q, t_of(q, a_id));
    w.set_name("w(" + q.label(a) + ")");
    ensure(w(a) == a, "w(a) does not fix a");
    ensure(is_finitary(q.poset(), w).is_finitary(), "w(a) is not finitary");
    check_coarsest_stable(q, a, w, "w(a) is not the coarsest stable finitary nucleus fixing a");
    return w;
}

MonotoneMap v_via_units(const OrderedMagma& q, ElementId a_id) {
    const auto a = q.index_of(a_id);
    const auto prof = classify(q);
    auto r = via_units(q, a, prof);
    if (!r) fail(ErrorKind::hypothesis_not_met, q.name() + " is not an associative unital near U-lattice");
    if (prof.near_prequantale) ensure(r->table() == via_lin(q, a, prof)->table(), "unit formula differs from v(a)");
    return *r;
}

}  // namespace prequant
