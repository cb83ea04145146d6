#include "prequant/magma.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace prequant {

struct OrderedMagma::Impl {
    FinitePoset poset;
    std::vector<Index> table;
    std::string name;
    std::optional<Index> unit, annihilator;
    mutable std::once_flag residual_once;
    mutable std::vector<Index> left, right;

    Index mul(Index a, Index b) const { return table[a * poset.size() + b]; }

    void compute_residuals() const {
        const auto n = poset.size();
        left.assign(n * n, kNone);
        right.assign(n * n, kNone);
        for (Index x = 0; x < n; ++x)
            for (Index a = 0; a < n; ++a) {
                ElementSet l(n), r(n);
                for (Index z = 0; z < n; ++z) {
                    if (poset.leq(mul(z, a), x)) l.set(z);
                    if (poset.leq(mul(a, z), x)) r.set(z);
                }
                // both sets are down-closed, so a maximum is a supremum lying inside
                if (auto s = poset.sup(l); s && l[*s] && l.any()) left[x * n + a] = *s;
                if (auto s = poset.sup(r); s && r[*s] && r.any()) right[x * n + a] = *s;
            }
    }
};

OrderedMagma::OrderedMagma() : OrderedMagma(FinitePoset::chain(1), {0}, "trivial") {}

OrderedMagma::OrderedMagma(FinitePoset p, std::vector<Index> table, std::string name) {
    const auto n = p.size();
    if (table.size() != n * n) fail(ErrorKind::malformed, "multiplication table has wrong size");
    for (auto v : table)
        if (v >= n) fail(ErrorKind::malformed, "multiplication table entry out of range");
    auto impl = std::make_shared<Impl>();
    impl->poset = std::move(p);
    impl->table = std::move(table);
    impl->name = std::move(name);
    const auto& q = impl->poset;
    // order compatibility: monotone in each argument separately suffices
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (a == b || !q.leq(a, b)) continue;
            for (Index c = 0; c < n; ++c) {
                if (!q.leq(impl->mul(a, c), impl->mul(b, c)) || !q.leq(impl->mul(c, a), impl->mul(c, b))) {
                    std::ostringstream os;
                    os << "multiplication not order-compatible: " << q.label(a) << " <= " << q.label(b)
                       << " with factor " << q.label(c);
                    fail(ErrorKind::malformed, os.str());
                }
            }
        }
    for (Index e = 0; e < n && !impl->unit; ++e) {
        bool ok = true;
        for (Index x = 0; x < n && ok; ++x) ok = impl->mul(e, x) == x && impl->mul(x, e) == x;
        if (ok) impl->unit = e;
    }
    if (auto b = q.bottom()) {
        bool ok = true;
        for (Index x = 0; x < n && ok; ++x) ok = impl->mul(*b, x) == *b && impl->mul(x, *b) == *b;
        if (ok) impl->annihilator = *b;
    }
    impl_ = std::move(impl);
}

OrderedMagma OrderedMagma::from_function(FinitePoset p, const std::function<Index(Index, Index)>& mul,
                                         std::string name) {
    const auto n = p.size();
    std::vector<Index> t(n * n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) t[a * n + b] = mul(a, b);
    return OrderedMagma(std::move(p), std::move(t), std::move(name));
}

const FinitePoset& OrderedMagma::poset() const { return impl_->poset; }
const std::string& OrderedMagma::name() const { return impl_->name; }
Index OrderedMagma::mul(Index a, Index b) const { return impl_->mul(a, b); }
const std::vector<Index>& OrderedMagma::table() const { return impl_->table; }
std::optional<Index> OrderedMagma::unit() const { return impl_->unit; }
std::optional<Index> OrderedMagma::annihilator() const { return impl_->annihilator; }

Index OrderedMagma::left_residual(Index x, Index a) const {
    std::call_once(impl_->residual_once, [this] { impl_->compute_residuals(); });
    return impl_->left[x * size() + a];
}

Index OrderedMagma::right_residual(Index x, Index a) const {
    std::call_once(impl_->residual_once, [this] { impl_->compute_residuals(); });
    return impl_->right[x * size() + a];
}

ElementSet OrderedMagma::product(const ElementSet& xs, const ElementSet& ys) const {
    ElementSet out(size());
    for (auto x = xs.find_first(); x != ElementSet::npos; x = xs.find_next(x))
        for (auto y = ys.find_first(); y != ElementSet::npos; y = ys.find_next(y))
            out.set(mul(static_cast<Index>(x), static_cast<Index>(y)));
    return out;
}

// ---------------------------------------------------------------------------
// classification

namespace {

bool binary_distributive(const OrderedMagma& m) {
    const auto& p = m.poset();
    const auto n = m.size();
    for (Index x = 0; x < n; ++x)
        for (Index y = x + 1; y < n; ++y) {
            const auto j = p.join(x, y);
            if (j == kNone) continue;
            for (Index a = 0; a < n; ++a) {
                if (m.mul(a, j) != p.join(m.mul(a, x), m.mul(a, y))) return false;
                if (m.mul(j, a) != p.join(m.mul(x, a), m.mul(y, a))) return false;
            }
        }
    return true;
}

bool bottom_annihilates(const OrderedMagma& m) { return m.annihilator().has_value(); }

bool all_residuals(const OrderedMagma& m, bool near) {
    const auto& p = m.poset();
    const auto n = m.size();
    for (Index x = 0; x < n; ++x)
        for (Index a = 0; a < n; ++a) {
            if (m.left_residual(x, a) == kNone) {
                if (!near) return false;
                for (Index z = 0; z < n; ++z)
                    if (p.leq(m.mul(z, a), x)) return false;
            }
            if (m.right_residual(x, a) == kNone) {
                if (!near) return false;
                for (Index z = 0; z < n; ++z)
                    if (p.leq(m.mul(a, z), x)) return false;
            }
        }
    return true;
}

// Residual sets characterized through suprema instead of maxima.
bool residual_sets_have_sups(const OrderedMagma& m, bool near) {
    const auto& p = m.poset();
    const auto n = m.size();
    for (Index x = 0; x < n; ++x)
        for (Index a = 0; a < n; ++a) {
            ElementSet l(n), r(n);
            for (Index z = 0; z < n; ++z) {
                if (p.leq(m.mul(z, a), x)) l.set(z);
                if (p.leq(m.mul(a, z), x)) r.set(z);
            }
            for (const auto* s : {&l, &r}) {
                if (near && s->none()) continue;
                if (!p.sup(*s)) return false;
            }
        }
    return true;
}

// Residual sets whose supremum exists and itself satisfies the defining inequality.
bool residual_sups_attained(const OrderedMagma& m, bool near) {
    const auto& p = m.poset();
    const auto n = m.size();
    for (Index x = 0; x < n; ++x)
        for (Index a = 0; a < n; ++a) {
            ElementSet l(n), r(n);
            for (Index z = 0; z < n; ++z) {
                if (p.leq(m.mul(z, a), x)) l.set(z);
                if (p.leq(m.mul(a, z), x)) r.set(z);
            }
            if (!(near && l.none())) {
                auto s = p.sup(l);
                if (!s || l.none() || !p.leq(m.mul(*s, a), x)) return false;
            }
            if (!(near && r.none())) {
                auto s = p.sup(r);
                if (!s || r.none() || !p.leq(m.mul(a, *s), x)) return false;
            }
        }
    return true;
}

struct SubsetScan {
    bool all_pairs = true;        // sup X, sup Y, sup XY exist and sup(XY) = sup X sup Y
    bool nonempty_pairs = true;   // same for X, Y nonempty
    bool existing_pairs = true;   // whenever sup X, sup Y exist
    bool existing_nonempty = true;
};

constexpr std::size_t kSubsetScanCap = 8;

SubsetScan subset_scan(const OrderedMagma& m) {
    const auto n = m.size();
    const std::size_t subsets = std::size_t{1} << n;
    const auto& p = m.poset();
    std::vector<Index> sups(subsets, kNone);
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        ElementSet s(n, mask);
        if (auto r = p.sup(s)) sups[mask] = *r;
    }
    // xy_row[x][mask] = {x y : y in mask}
    std::vector<std::vector<std::uint32_t>> xrow(n, std::vector<std::uint32_t>(subsets, 0));
    for (Index x = 0; x < n; ++x)
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            const auto low = static_cast<Index>(__builtin_ctzll(mask));
            xrow[x][mask] = xrow[x][mask & (mask - 1)] | (1u << m.mul(x, low));
        }
    SubsetScan out;
    for (std::size_t xm = 0; xm < subsets; ++xm)
        for (std::size_t ym = 0; ym < subsets; ++ym) {
            std::uint32_t prod = 0;
            for (std::size_t t = xm; t; t &= t - 1) prod |= xrow[__builtin_ctzll(t)][ym];
            const auto sx = sups[xm], sy = sups[ym], sp = sups[prod];
            const bool exist = sx != kNone && sy != kNone;
            const bool eq = exist && sp != kNone && sp == m.mul(sx, sy);
            const bool nonempty = xm && ym;
            if (!eq) {
                out.all_pairs = false;
                if (nonempty) out.nonempty_pairs = false;
                if (exist) {
                    out.existing_pairs = false;
                    if (nonempty) out.existing_nonempty = false;
                }
            }
        }
    return out;
}

bool prequantale_routes(const OrderedMagma& m, const PosetFlags& pf, bool distributive, bool residuated) {
    const bool a = pf.complete && bottom_annihilates(m) && distributive;
    const bool b = pf.complete && residuated;
    ensure(a == b, "prequantale characterizations disagree on " + m.name());
    return a;
}

}  // namespace

Profile classify(const OrderedMagma& m) {
    const auto& p = m.poset();
    const auto n = m.size();
    const auto pf = classify_poset(p);
    Profile f;
    f.sup_magma = pf.complete;
    f.near_sup_magma = pf.near_sup_complete;
    f.dcpo_magma = pf.dcpo;
    f.bounded_complete = pf.bounded_complete;
    f.bounded_above = pf.bounded_above;
    f.with_annihilator = m.annihilator().has_value();
    f.associative = is_associative(m);
    f.commutative = is_commutative(m);
    f.unital = m.unit().has_value();
    f.scott_topological = is_scott_topological(m);

    const bool dist = binary_distributive(m);
    f.residuated = all_residuals(m, false);
    f.near_residuated = all_residuals(m, true);
    ensure(f.residuated == residual_sups_attained(m, false), "residuation routes disagree");
    ensure(f.near_residuated == residual_sups_attained(m, true), "near residuation routes disagree");

    f.prequantale = prequantale_routes(m, pf, dist, f.residuated);
    f.near_prequantale = pf.near_sup_complete && dist;
    ensure(f.near_prequantale == (pf.near_sup_complete && f.near_residuated),
           "near prequantale characterizations disagree on " + m.name());
    {
        // M is a near prequantale iff M with an adjoined annihilator is a prequantale
        const auto m0 = adjoin_annihilator(m);
        const auto pf0 = classify_poset(m0.poset());
        const bool via_m0 =
            prequantale_routes(m0, pf0, binary_distributive(m0), all_residuals(m0, false));
        ensure(via_m0 == f.near_prequantale, "near prequantale differs from prequantale of M_0");
    }
    f.multiplicative_semilattice = pf.join_semilattice && dist;
    f.prequantic_semilattice = f.multiplicative_semilattice && bottom_annihilates(m);
    f.semiprequantale = pf.join_semilattice && pf.bounded_complete && dist;

    if (n <= kSubsetScanCap) {
        const auto s = subset_scan(m);
        ensure(s.all_pairs == f.prequantale, "prequantale subset scan disagrees");
        ensure(s.nonempty_pairs == f.near_prequantale, "near prequantale subset scan disagrees");
        // finite carriers: finite subsets are all subsets
        ensure(s.all_pairs == f.prequantic_semilattice, "prequantic semilattice scan disagrees");
        ensure((s.nonempty_pairs && pf.join_semilattice) == f.multiplicative_semilattice,
               "multiplicative semilattice scan disagrees");
        ensure((s.nonempty_pairs && pf.join_semilattice) == f.semiprequantale,
               "semiprequantale scan disagrees");
        ensure((s.existing_pairs && residual_sets_have_sups(m, false)) == f.residuated,
               "residuated subset scan disagrees");
        ensure((s.existing_nonempty && residual_sets_have_sups(m, true)) == f.near_residuated,
               "near residuated subset scan disagrees");
    }

    // precoherent: algebraic with compact elements closed under multiplication
    {
        const auto ks = compact_elements(p);
        ElementSet k(n);
        for (auto e : ks) k.set(p.index_of(e));
        f.precoherent = pf.algebraic && is_closed_under_mul(m, k);
    }
    return f;
}

std::vector<std::pair<std::string, bool>> Profile::rows() const {
    return {{"sup-magma", sup_magma},
            {"near-sup-magma", near_sup_magma},
            {"dcpo-magma", dcpo_magma},
            {"bounded-complete", bounded_complete},
            {"bounded-above", bounded_above},
            {"with-annihilator", with_annihilator},
            {"prequantale", prequantale},
            {"near-prequantale", near_prequantale},
            {"semiprequantale", semiprequantale},
            {"prequantic-semilattice", prequantic_semilattice},
            {"multiplicative-semilattice", multiplicative_semilattice},
            {"scott-topological", scott_topological},
            {"residuated", residuated},
            {"near-residuated", near_residuated},
            {"associative", associative},
            {"commutative", commutative},
            {"unital", unital},
            {"precoherent", precoherent}};
}

std::vector<std::string> diagram_position(const Profile& p) {
    std::vector<std::string> out;
    if (p.multiplicative_lattice()) out.push_back("multiplicative lattice");
    else if (p.quantale()) out.push_back("quantale");
    else if (p.prequantale) out.push_back("prequantale");
    if (!p.prequantale) {
        if (p.near_multiplicative_lattice()) out.push_back("near multiplicative lattice");
        else if (p.near_quantale()) out.push_back("near quantale");
        else if (p.near_prequantale) out.push_back("near prequantale");
    }
    if (!p.near_prequantale) {
        if (p.semiprequantale) out.push_back("semiprequantale");
        else if (p.prequantic_semilattice) out.push_back("prequantic semilattice");
        else if (p.multiplicative_semilattice) out.push_back("multiplicative semilattice");
    }
    if (p.residuated) out.push_back("residuated");
    else if (p.near_residuated) out.push_back("near residuated");
    if (out.empty()) out.push_back(p.sup_magma ? "sup-magma" : p.near_sup_magma ? "near sup-magma" : "ordered magma");
    return out;
}

Residual residual(const OrderedMagma& m, ElementId x, ElementId a) {
    const auto xi = m.index_of(x), ai = m.index_of(a);
    Residual r;
    if (auto l = m.left_residual(xi, ai); l != kNone) r.left = m.element(l);
    if (auto rr = m.right_residual(xi, ai); rr != kNone) r.right = m.element(rr);
    return r;
}

bool is_associative(const OrderedMagma& m) {
    const auto n = m.size();
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c)
                if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) return false;
    return true;
}

bool is_commutative(const OrderedMagma& m) {
    for (Index a = 0; a < m.size(); ++a)
        for (Index b = a + 1; b < m.size(); ++b)
            if (m.mul(a, b) != m.mul(b, a)) return false;
    return true;
}

bool is_closed_under_mul(const OrderedMagma& m, const ElementSet& s) {
    for (auto a = s.find_first(); a != ElementSet::npos; a = s.find_next(a))
        for (auto b = s.find_first(); b != ElementSet::npos; b = s.find_next(b))
            if (!s[m.mul(static_cast<Index>(a), static_cast<Index>(b))]) return false;
    return true;
}

namespace {

bool translation_is_automorphism(const OrderedMagma& m, Index u, bool left) {
    const auto n = m.size();
    ElementSet hit(n);
    for (Index x = 0; x < n; ++x) hit.set(left ? m.mul(u, x) : m.mul(x, u));
    if (hit.count() != n) return false;
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            const auto fx = left ? m.mul(u, x) : m.mul(x, u);
            const auto fy = left ? m.mul(u, y) : m.mul(y, u);
            if (m.leq(x, y) != m.leq(fx, fy)) return false;
        }
    return true;
}

bool is_inverse_pair(const OrderedMagma& m, Index u, Index v) {
    for (Index x = 0; x < m.size(); ++x) {
        if (m.mul(v, m.mul(u, x)) != x || m.mul(u, m.mul(v, x)) != x) return false;
        if (m.mul(m.mul(x, u), v) != x || m.mul(m.mul(x, v), u) != x) return false;
    }
    return true;
}

}  // namespace

std::vector<Index> r_elements(const OrderedMagma& m) {
    if (!m.unit()) fail(ErrorKind::no_unit, "R(M) needs a unit");
    std::vector<Index> out;
    for (Index a = 0; a < m.size(); ++a)
        if (m.mul(a, a) == a && m.leq(*m.unit(), a)) out.push_back(a);
    return out;
}

DistinguishedSets distinguished_sets(const OrderedMagma& m) {
    DistinguishedSets d;
    const auto n = m.size();
    for (Index u = 0; u < n; ++u) {
        if (translation_is_automorphism(m, u, true) && translation_is_automorphism(m, u, false))
            d.units.push_back(u);
        for (Index v = 0; v < n; ++v)
            if (is_inverse_pair(m, u, v)) {
                d.invertibles.push_back(u);
                break;
            }
        if (m.mul(u, u) == u) d.idempotents.push_back(u);
    }
    for (auto u : d.invertibles)
        ensure(std::find(d.units.begin(), d.units.end(), u) != d.units.end(), "Inv(M) not inside U(M)");
    if (m.unit()) {
        d.above_unit_idempotents = r_elements(m);
        if (is_associative(m)) ensure(d.units == d.invertibles, "U(M) differs from Inv(M) in a monoid");
    }
    ElementSet k(n);
    for (auto e : compact_elements(m.poset())) {
        d.compacts.push_back(m.index_of(e));
        k.set(m.index_of(e));
    }
    d.compacts_form_submagma = is_closed_under_mul(m, k);
    return d;
}

bool is_sup_spanning(const OrderedMagma& m, const ElementSet& sigma) {
    const auto& p = m.poset();
    const auto n = m.size();
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            ElementSet l(n), r(n);
            for (auto a = sigma.find_first(); a != ElementSet::npos; a = sigma.find_next(a)) {
                const auto ai = static_cast<Index>(a);
                if (p.leq(ai, x)) l.set(m.mul(ai, y));
                if (p.leq(ai, y)) r.set(m.mul(x, ai));
            }
            const auto sl = p.sup(l), sr = p.sup(r);
            if (!sl || !sr || *sl != m.mul(x, y) || *sr != m.mul(x, y)) return false;
        }
    return true;
}

bool is_sup_spanning(const OrderedMagma& m, std::span<const ElementId> sigma) {
    const auto idx = m.poset().indices_of(sigma);
    return is_sup_spanning(m, m.poset().make_set(idx));
}

bool is_scott_topological(const OrderedMagma&) {
    // Directed subsets of a finite poset have maxima and the table is order-compatible.
    return true;
}

OrderedMagma adjoin_annihilator(const OrderedMagma& m, const std::string& label) {
    const auto n = static_cast<Index>(m.size());
    auto labels = m.poset().labels();
    labels.push_back(label);
    const auto& p = m.poset();
    auto q = FinitePoset::from_predicate(labels, [p, n](Index a, Index b) {
        if (a == n) return true;
        if (b == n) return false;
        return p.leq(a, b);
    });
    return OrderedMagma::from_function(
        q, [m, n](Index a, Index b) { return (a == n || b == n) ? n : m.mul(a, b); },
        m.name() + "_0");
}

OrderedMagma adjoin_top(const OrderedMagma& m, const std::string& label) {
    const auto n = static_cast<Index>(m.size());
    auto labels = m.poset().labels();
    labels.push_back(label);
    const auto& p = m.poset();
    auto q = FinitePoset::from_predicate(labels, [p, n](Index a, Index b) {
        if (b == n) return true;
        if (a == n) return false;
        return p.leq(a, b);
    });
    // the new top absorbs everything except an annihilator
    const auto z = m.annihilator();
    return OrderedMagma::from_function(
        q,
        [m, n, z](Index a, Index b) {
            if (a == n || b == n) {
                if (z && (a == *z || b == *z)) return *z;
                return n;
            }
            return m.mul(a, b);
        },
        m.name() + "^top");
}

std::optional<Index> Submagma::from_parent(Index p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) return std::nullopt;
    return static_cast<Index>(it - elements.begin());
}

Submagma submagma(const OrderedMagma& m, const ElementSet& s) {
    if (s.none()) fail(ErrorKind::malformed, "empty submagma");
    if (!is_closed_under_mul(m, s)) fail(ErrorKind::hypothesis_not_met, "subset not closed under multiplication");
    Submagma out{m, members(s), OrderedMagma()};
    const auto q = m.poset().restrict_to(out.elements);
    const auto& el = out.elements;
    out.magma = OrderedMagma::from_function(
        q,
        [&](Index a, Index b) {
            const auto v = m.mul(el[a], el[b]);
            return static_cast<Index>(std::lower_bound(el.begin(), el.end(), v) - el.begin());
        },
        m.name() + "|sub");
    return out;
}

bool is_homomorphism(const MagmaMap& f) {
    const auto n = f.source.size();
    if (f.table.size() != n) fail(ErrorKind::malformed, "map table size mismatch");
    for (auto v : f.table)
        if (v >= f.target.size()) fail(ErrorKind::malformed, "map value out of range");
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (f(f.source.mul(a, b)) != f.target.mul(f(a), f(b))) return false;
    return true;
}

bool is_order_preserving(const MagmaMap& f) {
    for (Index a = 0; a < f.source.size(); ++a)
        for (Index b = 0; b < f.source.size(); ++b)
            if (f.source.leq(a, b) && !f.target.leq(f(a), f(b))) return false;
    return true;
}

bool is_order_embedding(const MagmaMap& f) {
    for (Index a = 0; a < f.source.size(); ++a)
        for (Index b = 0; b < f.source.size(); ++b)
            if (f.source.leq(a, b) != f.target.leq(f(a), f(b))) return false;
    return true;
}

bool preserves_nonempty_sups(const MagmaMap& f) {
    const auto& sp = f.source.poset();
    const auto& tp = f.target.poset();
    const auto n = sp.size();
    auto image_sup = [&](const ElementSet& xs) {
        ElementSet img(tp.size());
        for (auto x = xs.find_first(); x != ElementSet::npos; x = xs.find_next(x)) img.set(f(static_cast<Index>(x)));
        return tp.sup(img);
    };
    if (n <= 12) {
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            ElementSet xs(n, mask);
            auto s = sp.sup(xs);
            if (!s) continue;
            auto t = image_sup(xs);
            if (!t || *t != f(*s)) return false;
        }
        return true;
    }
    if (!classify_poset(sp).join_semilattice)
        fail(ErrorKind::carrier_too_large, "sup preservation on a large non-semilattice source");
    // finite nonempty sups are iterated binary joins
    for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b)
            if (tp.join(f(a), f(b)) != f(sp.join(a, b))) return false;
    return true;
}

bool preserves_bottom(const MagmaMap& f) {
    const auto b = f.source.poset().bottom();
    const auto tb = f.target.poset().bottom();
    return b && tb && f(*b) == *tb;
}

bool is_isomorphism(const MagmaMap& f) {
    if (f.source.size() != f.target.size()) return false;
    ElementSet hit(f.target.size());
    for (auto v : f.table) hit.set(v);
    return hit.all() && is_order_embedding(f) && is_homomorphism(f);
}

MagmaMap compose(const MagmaMap& g, const MagmaMap& f) {
    if (f.target.id() != g.source.id()) fail(ErrorKind::foreign_element, "maps are not composable");
    MagmaMap h{f.source, g.target, {}};
    for (auto v : f.table) h.table.push_back(g(v));
    return h;
}

MagmaMap identity_morphism(const OrderedMagma& m) {
    MagmaMap f{m, m, {}};
    for (Index i = 0; i < m.size(); ++i) f.table.push_back(i);
    return f;
}

}  // namespace prequant
