#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "prequant/instances.hpp"

namespace prequant {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string poly_label(const std::vector<std::uint32_t>& c) {
    std::string s;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        const bool show_coeff = c[i] != 1 || i == 0;
        if (show_coeff) s += std::to_string(c[i]);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

}  // namespace

RingDesc RingDesc::zmod(std::uint32_t n) {
    if (n < 2) fail(ErrorKind::malformed, "modulus must be at least 2");
    RingDesc d;
    d.kind = Kind::zmod;
    d.n = n;
    return d;
}

RingDesc RingDesc::poly(std::uint32_t p, std::vector<std::uint32_t> f) {
    if (!is_prime(p)) fail(ErrorKind::malformed, "coefficient field size must be prime");
    for (auto& c : f) c %= p;
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.size() < 2) fail(ErrorKind::malformed, "modulus polynomial must have positive degree");
    if (f.back() != 1) fail(ErrorKind::malformed, "modulus polynomial must be monic");
    RingDesc d;
    d.kind = Kind::poly;
    d.p = p;
    d.f = std::move(f);
    return d;
}

RingDesc RingDesc::poly(std::uint32_t p, const std::string& text) {
    std::vector<std::uint32_t> coeffs;
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) fail(ErrorKind::malformed, "empty polynomial");
    std::size_t i = 0;
    while (i < s.size()) {
        std::uint32_t coeff = 1;
        std::size_t deg = 0;
        bool have_digits = false;
        std::uint32_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint32_t>(s[i] - '0');
            have_digits = true;
            ++i;
        }
        if (have_digits) coeff = v;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t e = 0;
                bool digits = false;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    e = e * 10 + static_cast<std::size_t>(s[i] - '0');
                    digits = true;
                    ++i;
                }
                if (!digits) fail(ErrorKind::malformed, "missing exponent in polynomial " + text);
                deg = e;
            }
        } else if (!have_digits) {
            fail(ErrorKind::malformed, "cannot parse polynomial " + text);
        }
        if (deg > 16) fail(ErrorKind::malformed, "polynomial degree too large");
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] += coeff;
        if (i < s.size()) {
            if (s[i] != '+') fail(ErrorKind::malformed, "cannot parse polynomial " + text);
            ++i;
        }
    }
    return poly(p, std::move(coeffs));
}

std::string RingDesc::name() const {
    if (kind == Kind::zmod) return "Z/" + std::to_string(n);
    return "F" + std::to_string(p) + "[x]/(" + poly_label(f) + ")";
}

std::uint32_t FiniteRing::power(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = one, base = a;
    while (e > 0) {
        if (e & 1) result = times(result, base);
        base = times(base, base);
        e >>= 1;
    }
    return result;
}

std::string FiniteRing::element_label(std::uint32_t a) const {
    if (desc.kind == RingDesc::Kind::zmod) return std::to_string(a);
    const auto deg = desc.f.size() - 1;
    std::vector<std::uint32_t> c(deg);
    for (std::size_t i = 0; i < deg; ++i) {
        c[i] = a % desc.p;
        a /= desc.p;
    }
    return poly_label(c);
}

FiniteRing make_ring(const RingDesc& d) {
    FiniteRing r;
    r.desc = d;
    if (d.kind == RingDesc::Kind::zmod) {
        if (d.n > kRingCap) fail(ErrorKind::carrier_too_large, "ring above the size cap");
        r.size = d.n;
        r.characteristic = d.n;
        r.add.resize(r.size * r.size);
        r.mul.resize(r.size * r.size);
        for (std::uint32_t a = 0; a < d.n; ++a)
            for (std::uint32_t b = 0; b < d.n; ++b) {
                r.add[a * r.size + b] = (a + b) % d.n;
                r.mul[a * r.size + b] = (a * b) % d.n;
            }
        r.one = 1;
        return r;
    }
    const auto deg = d.f.size() - 1;
    std::size_t size = 1;
    for (std::size_t i = 0; i < deg; ++i) {
        size *= d.p;
        if (size > kRingCap) fail(ErrorKind::carrier_too_large, "ring above the size cap");
    }
    r.size = size;
    r.characteristic = d.p;
    auto decode = [&](std::uint32_t a) {
        std::vector<std::uint32_t> c(deg);
        for (std::size_t i = 0; i < deg; ++i) {
            c[i] = a % d.p;
            a /= d.p;
        }
        return c;
    };
    auto encode = [&](const std::vector<std::uint32_t>& c) {
        std::uint32_t a = 0;
        for (std::size_t i = deg; i-- > 0;) a = a * d.p + c[i];
        return a;
    };
    r.add.resize(size * size);
    r.mul.resize(size * size);
    for (std::uint32_t a = 0; a < size; ++a)
        for (std::uint32_t b = 0; b < size; ++b) {
            const auto ca = decode(a), cb = decode(b);
            std::vector<std::uint32_t> s(deg);
            for (std::size_t i = 0; i < deg; ++i) s[i] = (ca[i] + cb[i]) % d.p;
            r.add[a * size + b] = encode(s);
            std::vector<std::uint32_t> prod(2 * deg, 0);
            for (std::size_t i = 0; i < deg; ++i)
                for (std::size_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % d.p;
            for (std::size_t k = prod.size(); k-- > deg;) {
                const auto c = prod[k];
                if (c == 0) continue;
                for (std::size_t i = 0; i <= deg; ++i)
                    prod[k - deg + i] = (prod[k - deg + i] + (d.p - c) * d.f[i] % d.p) % d.p;
            }
            prod.resize(deg);
            r.mul[a * size + b] = encode(prod);
        }
    r.one = 1;  // constant polynomial 1
    if (deg == 0) fail(ErrorKind::malformed, "modulus polynomial must have positive degree");
    return r;
}

// ---------------------------------------------------------------------------

ElementSet RingIdealLattice::generate(const ElementSet& gens) const {
    const auto n = ring.size;
    ElementSet products(n);
    for (auto g = gens.find_first(); g != ElementSet::npos; g = gens.find_next(g))
        for (std::uint32_t r = 0; r < n; ++r) products.set(ring.times(r, static_cast<std::uint32_t>(g)));
    ElementSet out(n);
    out.set(ring.zero);
    std::vector<std::uint32_t> queue{ring.zero};
    const auto ps = members(products);
    while (!queue.empty()) {
        const auto s = queue.back();
        queue.pop_back();
        for (auto g : ps) {
            const auto t = ring.plus(s, g);
            if (!out[t]) {
                out.set(t);
                queue.push_back(t);
            }
        }
    }
    return out;
}

Index RingIdealLattice::index_of(const ElementSet& ideal) const {
    for (Index i = 0; i < ideals.size(); ++i)
        if (ideals[i] == ideal) return i;
    fail(ErrorKind::malformed, "set is not an ideal of the ring");
}

namespace {

bool is_ideal(const FiniteRing& r, const ElementSet& s) {
    if (!s[r.zero]) return false;
    for (auto a = s.find_first(); a != ElementSet::npos; a = s.find_next(a))
        for (std::uint32_t b = 0; b < r.size; ++b) {
            if (s[b] && !s[r.plus(static_cast<std::uint32_t>(a), b)]) return false;
            if (!s[r.times(static_cast<std::uint32_t>(a), b)]) return false;
        }
    return true;
}

std::string ideal_label(const RingIdealLattice& l, const ElementSet& ideal) {
    if (ideal.count() == 1) return "(0)";
    // greedy generators in canonical element order (degree-then-encoding is numeric order)
    std::vector<std::uint32_t> gens;
    ElementSet cur(l.ring.size);
    cur.set(l.ring.zero);
    for (std::uint32_t a = 1; a < l.ring.size && cur != ideal; ++a) {
        if (!ideal[a] || cur[a]) continue;
        gens.push_back(a);
        ElementSet g(l.ring.size);
        for (auto x : gens) g.set(x);
        cur = l.generate(g);
    }
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + l.ring.element_label(gens[i]);
    return s + ")";
}

}  // namespace

RingIdealLattice ring_ideal_lattice(const RingDesc& d) {
    RingIdealLattice l;
    l.ring = make_ring(d);
    const auto& r = l.ring;
    const auto n = r.size;
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            if (r.times(a, b) != r.times(b, a)) fail(ErrorKind::not_commutative, "ring is not commutative");
    std::vector<ElementSet> found;
    auto add = [&](const ElementSet& s) {
        if (std::find(found.begin(), found.end(), s) == found.end()) {
            found.push_back(s);
            return true;
        }
        return false;
    };
    for (std::uint32_t a = 0; a < n; ++a) {
        ElementSet g(n);
        g.set(a);
        add(l.generate(g));
    }
    for (bool grew = true; grew;) {
        grew = false;
        const auto snapshot = found;
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j)
                grew = add(l.generate(snapshot[i] | snapshot[j])) || grew;
    }
    for (const auto& s : found) ensure(is_ideal(r, s), "generated set is not an ideal");
    std::vector<std::pair<std::string, ElementSet>> labelled;
    for (const auto& s : found) labelled.emplace_back(ideal_label(l, s), s);
    std::sort(labelled.begin(), labelled.end(), [](const auto& a, const auto& b) {
        if (a.second.count() != b.second.count()) return a.second.count() < b.second.count();
        return a.first < b.first;
    });
    std::vector<std::string> labels;
    for (auto& [lab, s] : labelled) {
        labels.push_back(lab);
        l.ideals.push_back(s);
    }
    auto p = FinitePoset::from_predicate(labels, [&](Index a, Index b) { return l.ideals[a].is_subset_of(l.ideals[b]); });
    l.lattice = OrderedMagma::from_function(
        p,
        [&](Index a, Index b) {
            ElementSet prods(n);
            for (auto x = l.ideals[a].find_first(); x != ElementSet::npos; x = l.ideals[a].find_next(x))
                for (auto y = l.ideals[b].find_first(); y != ElementSet::npos; y = l.ideals[b].find_next(y))
                    prods.set(r.times(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)));
            return l.index_of(l.generate(prods));
        },
        "Id(" + d.name() + ")");
    l.zero_ideal = 0;
    l.whole = static_cast<Index>(l.ideals.size() - 1);
    ensure(l.ideals[l.whole].count() == n, "largest ideal is not the whole ring");
    const auto prof = classify(l.lattice);
    ensure(prof.multiplicative_lattice(), "ideal lattice is not a multiplicative lattice");
    ensure(l.lattice.unit() == l.whole, "unit of the ideal lattice is not the whole ring");
    ensure(l.lattice.annihilator() == l.zero_ideal, "annihilator of the ideal lattice is not the zero ideal");
    return l;
}

MonotoneMap radical_operation(const RingIdealLattice& l) {
    const auto& r = l.ring;
    std::vector<Index> t;
    for (const auto& ideal : l.ideals) {
        ElementSet rad(r.size);
        for (std::uint32_t x = 0; x < r.size; ++x) {
            std::uint32_t pw = x;
            for (std::size_t k = 1; k <= r.size + 1; ++k) {
                if (ideal[pw]) {
                    rad.set(x);
                    break;
                }
                pw = r.times(pw, x);
            }
        }
        t.push_back(l.index_of(rad));
    }
    MonotoneMap out(l.lattice.poset(), std::move(t), "radical");
    ensure(is_nucleus(l.lattice, out), "radical is not a nucleus");
    return out;
}

std::vector<Index> prime_ideals(const RingIdealLattice& l) {
    const auto& r = l.ring;
    std::vector<Index> out;
    for (Index i = 0; i < l.ideals.size(); ++i) {
        if (i == l.whole) continue;
        const auto& p = l.ideals[i];
        bool prime = true;
        for (std::uint32_t a = 0; a < r.size && prime; ++a)
            for (std::uint32_t b = 0; b < r.size && prime; ++b)
                if (p[r.times(a, b)] && !p[a] && !p[b]) prime = false;
        if (prime) out.push_back(i);
    }
    return out;
}

std::vector<Index> minimal_primes(const RingIdealLattice& l) {
    const auto primes = prime_ideals(l);
    std::vector<Index> out;
    for (auto p : primes) {
        bool minimal = true;
        for (auto q : primes)
            if (q != p && l.ideals[q].is_subset_of(l.ideals[p])) minimal = false;
        if (minimal) out.push_back(p);
    }
    return out;
}

FrobeniusWindow frobenius_window(const FiniteRing& r) {
    FrobeniusWindow w;
    const auto c = r.characteristic;
    std::uint32_t p = 2;
    while (c % p != 0) ++p;
    std::uint32_t rest = c;
    while (rest % p == 0) rest /= p;
    if (rest != 1) fail(ErrorKind::characteristic_not_prime, "characteristic " + std::to_string(c) + " is not a prime power");
    w.p = p;
    std::map<std::vector<std::uint32_t>, std::size_t> seen;
    std::vector<std::uint32_t> f(r.size);
    std::iota(f.begin(), f.end(), 0u);
    for (std::size_t e = 0;; ++e) {
        auto [it, inserted] = seen.emplace(f, e);
        if (!inserted) {
            w.preperiod = it->second;
            w.period = e - it->second;
            return w;
        }
        for (auto& v : f) v = r.power(v, p);
    }
}

namespace {

// Tables of x -> x^(p^e) for e in [lo, hi).
std::vector<std::vector<std::uint32_t>> frobenius_tables(const FiniteRing& r, std::uint32_t p, std::size_t lo,
                                                         std::size_t hi) {
    std::vector<std::uint32_t> f(r.size);
    std::iota(f.begin(), f.end(), 0u);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t e = 0; e < hi; ++e) {
        if (e >= lo) out.push_back(f);
        for (auto& v : f) v = r.power(v, p);
    }
    return out;
}

std::vector<Index> tight_table(const RingIdealLattice& l, std::size_t lo, std::size_t hi, std::uint32_t p) {
    const auto& r = l.ring;
    ElementSet r_o(r.size);
    r_o.set();
    for (auto m : minimal_primes(l)) r_o -= l.ideals[m];
    const auto tables = frobenius_tables(r, p, lo, hi);
    std::vector<Index> out;
    for (const auto& ideal : l.ideals) {
        std::vector<ElementSet> bracket;
        for (const auto& f : tables) {
            ElementSet img(r.size);
            for (auto x = ideal.find_first(); x != ElementSet::npos; x = ideal.find_next(x)) img.set(f[x]);
            bracket.push_back(l.generate(img));
        }
        ElementSet t(r.size);
        for (std::uint32_t x = 0; x < r.size; ++x)
            for (auto c = r_o.find_first(); c != ElementSet::npos && !t[x]; c = r_o.find_next(c)) {
                bool all = true;
                for (std::size_t k = 0; k < tables.size() && all; ++k)
                    all = bracket[k][r.times(static_cast<std::uint32_t>(c), tables[k][x])];
                if (all) t.set(x);
            }
        if (!is_ideal(r, t))
            fail(ErrorKind::hypothesis_not_met, "I^T is not an ideal for I = " + ideal_label(l, ideal));
        out.push_back(l.index_of(t));
    }
    return out;
}

}  // namespace

MonotoneMap tight_closure_T(const RingIdealLattice& l) {
    const auto w = frobenius_window(l.ring);
    auto t = tight_table(l, w.preperiod, w.preperiod + w.period, w.p);
    // enlarging the window past the preperiod never changes I^T
    ensure(t == tight_table(l, w.preperiod + w.period, w.preperiod + 2 * w.period, w.p),
           "I^T depends on the Frobenius window");
    return MonotoneMap(l.lattice.poset(), std::move(t), "T");
}

Index tight_closure_T(const RingIdealLattice& l, Index i) { return tight_closure_T(l)(i); }

TightClosure tight_closure(const RingIdealLattice& l) {
    const auto& m = l.lattice;
    const auto& p = m.poset();
    auto T = tight_closure_T(l);
    ensure(is_preclosure(p, T), "T is not a preclosure");
    TightClosure tc{T, MonotoneMap(), {}, true, false, false, false};
    for (Index i = 0; i < m.size(); ++i)
        for (Index j = 0; j < m.size(); ++j)
            if (!p.leq(m.mul(i, T(j)), T(m.mul(i, j)))) tc.multiplicative = false;
    auto hull = closure_from_preclosure(m, T);
    tc.star = hull.closure;
    tc.star.set_name("*");
    tc.nucleus = hull.nucleus;
    tc.tightly_closed = fixed_points(T);
    bool scan = true;
    for (Index i = 0; i < m.size(); ++i) {
        ElementSet meet(l.ring.size);
        meet.set();
        for (auto j : tc.tightly_closed)
            if (l.ideals[i].is_subset_of(l.ideals[j])) meet &= l.ideals[j];
        if (l.index_of(meet) != tc.star(i)) scan = false;
    }
    tc.matches_scan = scan;
    tc.noetherian_equality = T.table() == tc.star.table();
    ensure(fixed_points(tc.star) == tc.tightly_closed, "fixed ideals of * differ from the tightly closed ones");
    return tc;
}

Index tight_closure_star(const RingIdealLattice& l, Index i) { return tight_closure(l).star(i); }

}  // namespace prequant
