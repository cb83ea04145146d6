#include "prequant/lazy.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace prequant {

UPSet::UPSet() = default;

UPSet UPSet::from_membership(std::uint64_t t, std::uint64_t p, const std::function<bool(std::uint64_t)>& in) {
    if (p == 0) fail(ErrorKind::malformed, "period must be positive");
    UPSet s;
    s.bits_.resize(t);
    for (std::uint64_t n = 0; n < t; ++n) s.bits_[n] = in(n);
    s.pattern_.assign(p, false);
    for (std::uint64_t i = 0; i < p; ++i) s.pattern_[i] = in(t + i);
    s.normalize();
    return s;
}

void UPSet::normalize() {
    const auto p = pattern_.size();
    for (std::size_t d = 1; d <= p; ++d) {
        if (p % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = 0; i < p && periodic; ++i) periodic = pattern_[i] == pattern_[i % d];
        if (periodic) {
            pattern_.resize(d);
            break;
        }
    }
    while (!bits_.empty() && bits_.back() == pattern_.back()) {
        pattern_.insert(pattern_.begin(), pattern_.back());
        pattern_.pop_back();
        bits_.pop_back();
    }
}

UPSet UPSet::finite(const std::vector<std::uint64_t>& xs) {
    std::uint64_t t = 0;
    for (auto x : xs) t = std::max(t, x + 1);
    return from_membership(t, 1, [&](std::uint64_t n) { return std::find(xs.begin(), xs.end(), n) != xs.end(); });
}

UPSet UPSet::naturals() { return from_membership(0, 1, [](std::uint64_t) { return true; }); }

UPSet UPSet::from_n(std::uint64_t t) {
    return from_membership(t, 1, [t](std::uint64_t n) { return n >= t; });
}

UPSet UPSet::progression(std::uint64_t a, std::uint64_t d) {
    if (d == 0) fail(ErrorKind::malformed, "progression step must be positive");
    return from_membership(a, d, [a, d](std::uint64_t n) { return n >= a && (n - a) % d == 0; });
}

UPSet UPSet::monoid(const std::vector<std::uint64_t>& gens) {
    std::uint64_t g = 0, mx = 0;
    for (auto x : gens) {
        g = std::gcd(g, x);
        mx = std::max(mx, x);
    }
    if (g == 0) return finite({0});
    if (mx > 64) fail(ErrorKind::carrier_too_large, "monoid generators above 64");
    const auto bound = mx * mx + mx + 1;
    std::vector<bool> reach(bound + g, false);
    reach[0] = true;
    for (std::uint64_t n = 1; n < reach.size(); ++n)
        for (auto a : gens)
            if (a != 0 && a <= n && reach[n - a]) {
                reach[n] = true;
                break;
            }
    return from_membership(bound, g, [&](std::uint64_t n) { return reach[n]; });
}

bool UPSet::contains(std::uint64_t n) const {
    if (n < bits_.size()) return bits_[n];
    return pattern_[(n - bits_.size()) % pattern_.size()];
}

bool UPSet::empty() const { return bits_.empty() && pattern_.size() == 1 && !pattern_[0]; }

bool UPSet::is_finite() const { return pattern_.size() == 1 && !pattern_[0]; }

std::vector<std::uint64_t> UPSet::elements_below(std::uint64_t bound) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n < bound; ++n)
        if (contains(n)) out.push_back(n);
    return out;
}

UPSet UPSet::truncate(std::uint64_t k) const {
    return from_membership(k, 1, [&](std::uint64_t n) { return n < k && contains(n); });
}

UPSet UPSet::unite(const UPSet& o) const {
    const auto t = std::max(threshold(), o.threshold());
    const auto p = std::lcm(period(), o.period());
    return from_membership(t, p, [&](std::uint64_t n) { return contains(n) || o.contains(n); });
}

UPSet UPSet::intersect(const UPSet& o) const {
    const auto t = std::max(threshold(), o.threshold());
    const auto p = std::lcm(period(), o.period());
    return from_membership(t, p, [&](std::uint64_t n) { return contains(n) && o.contains(n); });
}

UPSet UPSet::sum(const UPSet& o) const {
    if (empty() || o.empty()) return UPSet();
    const auto p = std::lcm(period(), o.period());
    // beyond t1 + t2 + 2p every residue class of the sum is already periodic
    const auto t = threshold() + o.threshold() + 2 * p;
    std::vector<bool> in(t + p, false);
    const auto mine = elements_below(t + p);
    for (auto a : mine)
        for (std::uint64_t n = a; n < t + p; ++n)
            if (!in[n] && o.contains(n - a)) in[n] = true;
    return from_membership(t, p, [&](std::uint64_t n) { return static_cast<bool>(in[n]); });
}

bool UPSet::subset_of(const UPSet& o) const {
    const auto bound = std::max(threshold(), o.threshold()) + std::lcm(period(), o.period());
    for (std::uint64_t n = 0; n < bound; ++n)
        if (contains(n) && !o.contains(n)) return false;
    return true;
}

std::string UPSet::to_string() const {
    if (empty()) return "{}";
    std::ostringstream os;
    const auto low = elements_below(threshold());
    if (!low.empty() || is_finite()) {
        os << "{";
        for (std::size_t i = 0; i < low.size(); ++i) os << (i ? "," : "") << low[i];
        os << "}";
    }
    if (!is_finite()) {
        if (!low.empty()) os << " u ";
        const auto t = threshold(), p = period();
        if (std::all_of(pattern_.begin(), pattern_.end(), [](bool b) { return b; })) {
            os << "[" << t << ",inf)";
        } else {
            os << "(" << t << "+{";
            bool first = true;
            for (std::uint64_t i = 0; i < p; ++i)
                if (pattern_[i]) {
                    os << (first ? "" : ",") << i;
                    first = false;
                }
            os << "}+" << p << "N)";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

UpsetNucleus UpsetNucleus::translate(const UPSet& s, std::string name) {
    if (!s.contains(0) || !(s.sum(s) == s))
        fail(ErrorKind::hypothesis_not_met, "translation set must be a submonoid of (N,+)");
    UpsetNucleus n;
    n.kind_ = Kind::translate;
    n.shift_ = s;
    n.name_ = std::move(name);
    return n;
}

UpsetNucleus UpsetNucleus::identity() { return translate(UPSet::finite({0}), "d"); }
UpsetNucleus UpsetNucleus::ideal() { return translate(UPSet::naturals(), "ideal"); }

UpsetNucleus UpsetNucleus::top() {
    UpsetNucleus n;
    n.kind_ = Kind::top;
    n.name_ = "e";
    return n;
}

UpsetNucleus UpsetNucleus::finite_or_all() {
    UpsetNucleus n;
    n.kind_ = Kind::finite_or_all;
    n.name_ = "finite-or-all";
    return n;
}

UpsetNucleus UpsetNucleus::opaque(std::string name, std::function<UPSet(const UPSet&)> rule) {
    UpsetNucleus n;
    n.kind_ = Kind::opaque;
    n.name_ = std::move(name);
    n.rule_ = std::move(rule);
    return n;
}

UpsetNucleus UpsetNucleus::parse(const std::string& text) {
    if (text == "d") return identity();
    if (text == "e") return top();
    if (text == "ideal") return ideal();
    if (text == "finite-or-all") return finite_or_all();
    if (text.rfind("monoid:", 0) == 0) {
        std::vector<std::uint64_t> gens;
        std::stringstream ss(text.substr(7));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                gens.push_back(std::stoull(tok));
            } catch (const std::exception&) {
                fail(ErrorKind::malformed, "bad monoid generator " + tok);
            }
        }
        return translate(UPSet::monoid(gens), text);
    }
    fail(ErrorKind::malformed, "unknown up-sets nucleus " + text);
}

UPSet UpsetNucleus::operator()(const UPSet& x) const {
    switch (kind_) {
        case Kind::translate: return x.sum(shift_);
        case Kind::top: return UPSet::naturals();
        case Kind::finite_or_all: return x.is_finite() ? x : UPSet::naturals();
        case Kind::opaque: return rule_(x);
    }
    fail(ErrorKind::internal, "unknown nucleus kind");
}

std::vector<UPSet> upset_samples(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
    };
    std::vector<UPSet> out{UPSet(), UPSet::finite({0}), UPSet::naturals(), UPSet::monoid({2, 3})};
    while (out.size() < count) {
        UPSet s;
        switch (pick(0, 4)) {
            case 0: {
                std::vector<std::uint64_t> xs;
                for (auto k = pick(1, 5); k > 0; --k) xs.push_back(pick(0, 20));
                s = UPSet::finite(xs);
                break;
            }
            case 1: s = UPSet::progression(pick(0, 10), pick(1, 6)); break;
            case 2: s = UPSet::monoid({pick(2, 7), pick(2, 9)}); break;
            case 3: s = UPSet::from_n(pick(0, 15)); break;
            default: s = UPSet::finite({pick(0, 9), pick(0, 9)}).unite(UPSet::progression(pick(5, 15), pick(2, 5)));
        }
        out.push_back(s);
    }
    out.resize(count);
    return out;
}

// ---------------------------------------------------------------------------

std::string chain_label(ChainValue v) { return v == kInfinity ? "inf" : std::to_string(v); }

ChainClosure ChainClosure::identity() {
    ChainClosure c;
    c.kind_ = Kind::identity;
    c.name_ = "d";
    return c;
}

ChainClosure ChainClosure::top() {
    ChainClosure c;
    c.kind_ = Kind::top;
    c.name_ = "e";
    return c;
}

ChainClosure ChainClosure::multiple_of(std::uint64_t k) {
    if (k == 0) fail(ErrorKind::malformed, "multiple_of needs k >= 1");
    ChainClosure c;
    c.kind_ = Kind::multiple_of;
    c.param_ = k;
    c.name_ = "mult:" + std::to_string(k);
    return c;
}

ChainClosure ChainClosure::threshold(std::uint64_t t) {
    ChainClosure c;
    c.kind_ = Kind::threshold;
    c.param_ = t;
    c.name_ = "threshold:" + std::to_string(t);
    return c;
}

ChainClosure ChainClosure::join_with(std::uint64_t a) {
    ChainClosure c;
    c.kind_ = Kind::join_with;
    c.param_ = a;
    c.name_ = "join:" + std::to_string(a);
    return c;
}

ChainClosure ChainClosure::opaque(std::string name, std::function<ChainValue(ChainValue)> rule) {
    ChainClosure c;
    c.kind_ = Kind::opaque;
    c.name_ = std::move(name);
    c.rule_ = std::move(rule);
    return c;
}

ChainClosure ChainClosure::parse(const std::string& text) {
    if (text == "d") return identity();
    if (text == "e") return top();
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        const auto head = text.substr(0, colon);
        std::uint64_t v = 0;
        try {
            v = std::stoull(text.substr(colon + 1));
        } catch (const std::exception&) {
            fail(ErrorKind::malformed, "bad chain closure parameter in " + text);
        }
        if (head == "mult") return multiple_of(v);
        if (head == "threshold") return threshold(v);
        if (head == "join") return join_with(v);
    }
    fail(ErrorKind::malformed, "unknown chain closure " + text);
}

ChainValue ChainClosure::operator()(ChainValue x) const {
    switch (kind_) {
        case Kind::identity: return x;
        case Kind::top: return kInfinity;
        case Kind::multiple_of: return x == kInfinity ? x : (x + param_ - 1) / param_ * param_;
        case Kind::threshold: return x <= param_ ? x : kInfinity;
        case Kind::join_with: return x == kInfinity ? x : std::max(x, param_);
        case Kind::opaque: return rule_(x);
    }
    fail(ErrorKind::internal, "unknown closure kind");
}

std::vector<ChainValue> chain_samples(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ChainValue> out{0, kInfinity};
    while (out.size() < count) out.push_back(std::uniform_int_distribution<ChainValue>(0, 60)(rng));
    out.resize(count);
    return out;
}

}  // namespace prequant
