#include "prequant/finitary.hpp"

#include <algorithm>
#include <set>

namespace prequant {

std::string to_string(FinitaryReport::Verdict v) {
    switch (v) {
        case FinitaryReport::Verdict::finitary: return "finitary";
        case FinitaryReport::Verdict::no_violation_found: return "no-violation-found";
        case FinitaryReport::Verdict::not_finitary: return "not-finitary";
    }
    return "?";
}

FinitaryReport is_finitary(const FinitePoset& p, const SelfMap& s) {
    require(is_closure(p, s), "finitary test needs a closure");
    const auto n = p.size();
    if (n <= 14) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            ElementSet d(n, mask);
            if (!is_directed(p, d)) continue;
            ElementSet img(n);
            for (auto x : members(d)) img.set(s(x));
            const auto top = p.sup(d);
            const auto rhs = p.sup(img);
            ensure(top && rhs && s(*top) == *rhs, "closure on a finite poset fails a directed family");
        }
    }
    return {FinitaryReport::Verdict::finitary, std::nullopt,
            "directed subsets of a finite poset contain their supremum"};
}

FinitaryReport is_finitary(const UpsetNucleus& s, std::span<const UPSet> targets, std::uint64_t window) {
    if (s.kind() == UpsetNucleus::Kind::opaque)
        fail(ErrorKind::undecidable_family, "nucleus " + s.name() + " exposes no family schema");
    // family schema: truncations of a target, whose union is the target
    for (const auto& t : targets) {
        if (t.is_finite()) continue;
        const auto whole = s(t);
        const auto part = s(t.truncate(window));
        for (std::uint64_t n = 0; n < window; ++n)
            if (whole.contains(n) != part.contains(n)) {
                return {FinitaryReport::Verdict::not_finitary,
                        "truncations of " + t.to_string() + ": image of the union contains " + std::to_string(n) +
                            " but no image of a truncation does",
                        "violation on a describable directed family"};
            }
    }
    switch (s.kind()) {
        case UpsetNucleus::Kind::translate:
            return {FinitaryReport::Verdict::finitary, std::nullopt,
                    "X + S is the union of F + S over finite F inside X"};
        case UpsetNucleus::Kind::top:
            return {FinitaryReport::Verdict::finitary, std::nullopt, "constant map"};
        default:
            return {FinitaryReport::Verdict::no_violation_found, std::nullopt,
                    "family space not exhausted; no violation among the sampled families"};
    }
}

namespace {

void check_chain_closure(const ChainClosure& s) {
    std::vector<ChainValue> xs;
    for (ChainValue v = 0; v <= 64; ++v) xs.push_back(v);
    xs.push_back(kInfinity);
    for (auto x : xs) {
        const auto y = s(x);
        if (y < x || s(y) != y) fail(ErrorKind::hypothesis_not_met, s.name() + " is not a closure");
        for (auto z : xs)
            if (x <= z && s(z) < y) fail(ErrorKind::hypothesis_not_met, s.name() + " is not order-preserving");
    }
}

}  // namespace

FinitaryReport is_finitary(const ChainClosure& s) {
    check_chain_closure(s);
    return {FinitaryReport::Verdict::finitary, std::nullopt,
            "a directed subset of N u {inf} has a maximum or is cofinal with supremum inf = inf*"};
}

MonotoneMap star_f(const OrderedMagma& q, const SelfMap& s) {
    const auto prof = classify(q);
    if (!prof.precoherent) fail(ErrorKind::not_precoherent, "carrier is not precoherent");
    require(is_nucleus(q, s), "star_f needs a nucleus");
    const auto& p = q.poset();
    const auto compacts = compact_elements(p);
    std::vector<Index> t(q.size());
    for (Index x = 0; x < q.size(); ++x) {
        ElementSet vals(q.size());
        for (const auto& c : compacts) {
            const auto y = p.index_of(c);
            if (p.leq(y, x)) vals.set(s(y));
        }
        auto r = p.sup(vals);
        ensure(r.has_value(), "supremum in the star_f formula is missing");
        t[x] = *r;
    }
    MonotoneMap f(p, std::move(t), s.name());
    ensure(f.table() == s.table(), "star_f differs from the nucleus on a finite carrier");
    ensure(is_nucleus(q, f) && pointwise_leq(p, f, s), "star_f is not a nucleus below the original");
    ensure(is_finitary(p, f).is_finitary(), "star_f is not finitary");
    return f;
}

UpsetNucleus star_f(const UpsetNucleus& s, std::span<const UPSet> samples, std::uint64_t window) {
    UpsetNucleus f = s;
    switch (s.kind()) {
        case UpsetNucleus::Kind::translate:
        case UpsetNucleus::Kind::top: break;
        case UpsetNucleus::Kind::finite_or_all: f = UpsetNucleus::identity(); break;
        case UpsetNucleus::Kind::opaque:
            fail(ErrorKind::undecidable_family, "nucleus " + s.name() + " exposes no family schema");
    }
    for (const auto& x : samples) {
        const auto fx = f(x);
        // n is in x^{*f} iff n is in (x restricted to [0, n])^*
        for (std::uint64_t n = 0; n < window; ++n)
            ensure(fx.contains(n) == s(x.truncate(n + 1)).contains(n), "symbolic star_f disagrees with the formula");
        ensure(fx.subset_of(s(x)), "star_f is not below the nucleus");
        if (x.is_finite()) ensure(fx == s(x), "star_f differs from the nucleus on a compact element");
        ensure(f(fx) == fx, "star_f is not idempotent");
    }
    return f;
}

ChainClosure star_f(const ChainClosure& s, std::span<const ChainValue> samples) {
    check_chain_closure(s);
    for (auto x : samples) {
        if (x == kInfinity) {
            // sup of n* over finite n is inf since n* >= n
            ensure(s(x) == kInfinity, "closure does not fix inf");
            continue;
        }
        ChainValue sup = 0;
        for (ChainValue y = 0; y <= x; ++y) sup = std::max(sup, s(y));
        ensure(sup == s(x), "star_f formula differs from the closure on the chain");
    }
    return s;
}

KlatticeVerdict verify_klattice(const OrderedMagma& q, const SelfMap& s) {
    const auto f = star_f(q, s);
    const auto quo = quotient(q, f);
    const auto pq = classify(q), pf = classify(quo.magma);
    KlatticeVerdict v;
    v.precoherent = pf.precoherent;
    v.same_class = (!pq.near_prequantale || pf.near_prequantale) && (!pq.prequantale || pf.prequantale) &&
                   (!pq.semiprequantale || pf.semiprequantale);
    std::set<Index> lhs, rhs;
    for (const auto& c : compact_elements(quo.magma.poset())) lhs.insert(quo.to_parent(quo.magma.index_of(c)));
    for (const auto& c : compact_elements(q.poset())) rhs.insert(f(q.index_of(c)));
    v.k_identity = lhs == rhs;
    return v;
}

KlatticeVerdict verify_klattice(const UpsetNucleus& s, std::span<const UPSet> generators, std::uint64_t window) {
    const auto f = star_f(s, generators, window);
    KlatticeVerdict v;
    v.sampled = true;
    v.precoherent = v.same_class = v.k_identity = true;
    std::vector<UPSet> finite, infinite;
    for (const auto& g : generators) (g.is_finite() ? finite : infinite).push_back(g);
    for (const auto& a : finite) {
        const auto fa = f(a);
        // compact in the quotient: below the image of an infinite target, hence below an image of a truncation
        for (const auto& t : infinite) {
            if (!fa.subset_of(f(t))) continue;
            bool found = false;
            for (std::uint64_t k = 0; k <= window && !found; ++k) found = fa.subset_of(f(t.truncate(k)));
            if (!found) v.k_identity = false;
        }
        for (const auto& b : finite)
            if (!f(fa.sum(f(b))).subset_of(f(a.sum(b)))) v.precoherent = false;
    }
    return v;
}

MonotoneMap composition_monoid_join(const OrderedMagma& m, std::span<const SelfMap> gamma) {
    const auto& p = m.poset();
    std::set<std::vector<Index>> seen;
    std::vector<SelfMap> frontier{MonotoneMap::identity(p)};
    seen.insert(frontier.front().table());
    std::vector<SelfMap> all = frontier;
    while (!frontier.empty()) {
        std::vector<SelfMap> next;
        for (const auto& h : frontier)
            for (const auto& g : gamma) {
                auto c = compose(g, h);
                if (seen.insert(c.table()).second) {
                    next.push_back(c);
                    all.push_back(c);
                    if (all.size() > 200000) fail(ErrorKind::carrier_too_large, "composition monoid too large");
                }
            }
        frontier = std::move(next);
    }
    std::vector<Index> t(m.size());
    for (Index x = 0; x < m.size(); ++x) {
        ElementSet vals(m.size());
        for (const auto& h : all) vals.set(h(x));
        auto r = p.sup(vals);
        if (!r) fail(ErrorKind::hypothesis_not_met, "images under the composition monoid have no supremum");
        t[x] = *r;
    }
    return MonotoneMap(p, std::move(t));
}

}  // namespace prequant
