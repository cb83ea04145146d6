#include "prequant/order.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>

namespace prequant {

namespace {
std::atomic<std::uint64_t> next_carrier_id{1};
}

struct FinitePoset::Impl {
    std::uint64_t id = 0;
    std::vector<std::string> labels;
    std::vector<ElementSet> up;    // up[a][b] iff a <= b
    std::vector<ElementSet> down;  // down[a][b] iff b <= a
    std::vector<std::size_t> up_count, down_count;
    std::vector<Index> join, meet;
    std::vector<Index> asc;
    std::optional<Index> top, bottom;

    std::size_t n() const { return labels.size(); }

    Index least_in(const ElementSet& ub) const {
        const auto c = ub.count();
        for (auto u = ub.find_first(); u != ElementSet::npos; u = ub.find_next(u))
            if (up_count[u] == c) return static_cast<Index>(u);
        return kNone;
    }
    Index greatest_in(const ElementSet& lb) const {
        const auto c = lb.count();
        for (auto u = lb.find_first(); u != ElementSet::npos; u = lb.find_next(u))
            if (down_count[u] == c) return static_cast<Index>(u);
        return kNone;
    }

    void finish() {
        const auto sz = n();
        up_count.resize(sz);
        down_count.resize(sz);
        for (std::size_t i = 0; i < sz; ++i) {
            up_count[i] = up[i].count();
            down_count[i] = down[i].count();
        }
        join.assign(sz * sz, kNone);
        meet.assign(sz * sz, kNone);
        for (std::size_t a = 0; a < sz; ++a)
            for (std::size_t b = a; b < sz; ++b) {
                join[a * sz + b] = join[b * sz + a] = least_in(up[a] & up[b]);
                meet[a * sz + b] = meet[b * sz + a] = greatest_in(down[a] & down[b]);
            }
        asc.resize(sz);
        std::iota(asc.begin(), asc.end(), Index{0});
        std::stable_sort(asc.begin(), asc.end(),
                         [&](Index a, Index b) { return down_count[a] < down_count[b]; });
        ElementSet all(sz);
        all.set();
        if (auto t = greatest_in(all); t != kNone) top = t;
        if (auto b = least_in(all); b != kNone) bottom = b;
    }
};

namespace {

std::shared_ptr<FinitePoset::Impl> build(std::vector<std::string> labels,
                                         const std::function<bool(Index, Index)>& leq) {
    const auto n = labels.size();
    if (n == 0) fail(ErrorKind::malformed, "poset must have at least one element");
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != n) fail(ErrorKind::malformed, "duplicate element labels");
    }
    auto impl = std::make_shared<FinitePoset::Impl>();
    impl->id = next_carrier_id.fetch_add(1);
    impl->labels = std::move(labels);
    impl->up.assign(n, ElementSet(n));
    impl->down.assign(n, ElementSet(n));
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (leq(a, b)) {
                impl->up[a].set(b);
                impl->down[b].set(a);
            }
    for (Index a = 0; a < n; ++a)
        if (!impl->up[a][a])
            fail(ErrorKind::malformed, "order not reflexive at " + impl->labels[a]);
    for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b)
            if (impl->up[a][b] && impl->up[b][a])
                fail(ErrorKind::malformed,
                     "order not antisymmetric: " + impl->labels[a] + ", " + impl->labels[b]);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (!impl->up[a][b]) continue;
            // up[b] must be inside up[a]
            if (!impl->up[b].is_subset_of(impl->up[a])) {
                const auto missing = impl->up[b] - impl->up[a];
                const auto c = missing.find_first();
                std::ostringstream os;
                os << "order not transitive: " << impl->labels[a] << " <= " << impl->labels[b]
                   << " <= " << impl->labels[c] << " but not " << impl->labels[a]
                   << " <= " << impl->labels[c];
                fail(ErrorKind::malformed, os.str());
            }
        }
    impl->finish();
    return impl;
}

}  // namespace

FinitePoset::FinitePoset() : FinitePoset(chain(1)) {}

FinitePoset::FinitePoset(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FinitePoset::FinitePoset(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq) {
    const auto n = labels.size();
    if (leq.size() != n) fail(ErrorKind::malformed, "leq matrix has wrong number of rows");
    for (const auto& row : leq)
        if (row.size() != n) fail(ErrorKind::malformed, "leq matrix row has wrong length");
    impl_ = build(std::move(labels), [&](Index a, Index b) { return leq[a][b]; });
}

FinitePoset FinitePoset::from_predicate(std::vector<std::string> labels,
                                        const std::function<bool(Index, Index)>& leq) {
    return FinitePoset(build(std::move(labels), leq));
}

FinitePoset FinitePoset::chain(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return from_predicate(std::move(labels), [](Index a, Index b) { return a <= b; });
}

FinitePoset FinitePoset::antichain(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return from_predicate(std::move(labels), [](Index a, Index b) { return a == b; });
}

std::size_t FinitePoset::size() const { return impl_->n(); }
std::uint64_t FinitePoset::id() const { return impl_->id; }
const ElementSet& FinitePoset::leq_row(Index a) const { return impl_->up[a]; }
const ElementSet& FinitePoset::geq_row(Index a) const { return impl_->down[a]; }
const std::string& FinitePoset::label(Index i) const { return impl_->labels.at(i); }
const std::vector<std::string>& FinitePoset::labels() const { return impl_->labels; }

std::optional<Index> FinitePoset::find(std::string_view label) const {
    for (Index i = 0; i < size(); ++i)
        if (impl_->labels[i] == label) return i;
    return std::nullopt;
}

ElementId FinitePoset::element(Index i) const {
    if (i >= size()) fail(ErrorKind::foreign_element, "index out of range");
    return ElementId{impl_->id, i};
}

Index FinitePoset::index_of(ElementId e) const {
    if (e.carrier != impl_->id || e.index >= size())
        fail(ErrorKind::foreign_element, "element id issued by another carrier");
    return e.index;
}

ElementId FinitePoset::at(std::string_view label) const {
    auto i = find(label);
    if (!i) fail(ErrorKind::malformed, "no element labelled " + std::string(label));
    return element(*i);
}

std::vector<Index> FinitePoset::indices_of(std::span<const ElementId> xs) const {
    std::vector<Index> out;
    ElementSet seen(size());
    for (const auto& e : xs) {
        const auto i = index_of(e);
        if (seen[i]) fail(ErrorKind::malformed, "duplicate element in subset");
        seen.set(i);
        out.push_back(i);
    }
    return out;
}

std::optional<Index> FinitePoset::top() const { return impl_->top; }
std::optional<Index> FinitePoset::bottom() const { return impl_->bottom; }
Index FinitePoset::join(Index a, Index b) const { return impl_->join[a * size() + b]; }
Index FinitePoset::meet(Index a, Index b) const { return impl_->meet[a * size() + b]; }

ElementSet FinitePoset::upper_bounds(const ElementSet& xs) const {
    ElementSet ub = full_set();
    for (auto x = xs.find_first(); x != ElementSet::npos; x = xs.find_next(x)) ub &= impl_->up[x];
    return ub;
}

ElementSet FinitePoset::lower_bounds(const ElementSet& xs) const {
    ElementSet lb = full_set();
    for (auto x = xs.find_first(); x != ElementSet::npos; x = xs.find_next(x)) lb &= impl_->down[x];
    return lb;
}

std::optional<Index> FinitePoset::sup(const ElementSet& xs) const {
    const auto r = impl_->least_in(upper_bounds(xs));
    if (r == kNone) return std::nullopt;
    return r;
}

std::optional<Index> FinitePoset::inf(const ElementSet& xs) const {
    const auto r = impl_->greatest_in(lower_bounds(xs));
    if (r == kNone) return std::nullopt;
    return r;
}

const std::vector<Index>& FinitePoset::ascending() const { return impl_->asc; }

ElementSet FinitePoset::full_set() const {
    ElementSet s(size());
    s.set();
    return s;
}

ElementSet FinitePoset::make_set(std::span<const Index> xs) const {
    ElementSet s(size());
    for (auto x : xs) {
        if (x >= size()) fail(ErrorKind::foreign_element, "index out of range");
        s.set(x);
    }
    return s;
}

FinitePoset FinitePoset::dual() const {
    auto self = *this;
    return from_predicate(labels(), [self](Index a, Index b) { return self.leq(b, a); });
}

FinitePoset FinitePoset::restrict_to(std::span<const Index> elems) const {
    std::vector<std::string> ls;
    std::vector<Index> idx(elems.begin(), elems.end());
    for (auto e : idx) ls.push_back(label(e));
    auto self = *this;
    return from_predicate(std::move(ls),
                          [self, idx](Index a, Index b) { return self.leq(idx[a], idx[b]); });
}

bool FinitePoset::same_order(const FinitePoset& other) const {
    if (size() != other.size()) return false;
    for (Index a = 0; a < size(); ++a)
        if (leq_row(a) != other.leq_row(a)) return false;
    return true;
}

std::vector<Index> members(const ElementSet& s) {
    std::vector<Index> out;
    for (auto x = s.find_first(); x != ElementSet::npos; x = s.find_next(x))
        out.push_back(static_cast<Index>(x));
    return out;
}

std::optional<ElementId> sup(const FinitePoset& p, std::span<const ElementId> xs) {
    const auto idx = p.indices_of(xs);
    auto r = p.sup(p.make_set(idx));
    if (!r) return std::nullopt;
    return p.element(*r);
}

std::optional<ElementId> inf(const FinitePoset& p, std::span<const ElementId> xs) {
    const auto idx = p.indices_of(xs);
    auto r = p.inf(p.make_set(idx));
    if (!r) return std::nullopt;
    return p.element(*r);
}

bool is_directed(const FinitePoset& p, const ElementSet& xs) {
    if (xs.none()) return false;
    const auto m = members(xs);
    for (auto a : m)
        for (auto b : m)
            if (!(p.leq_row(a) & p.leq_row(b)).intersects(xs)) return false;
    return true;
}

bool is_directed(const FinitePoset& p, std::span<const ElementId> xs) {
    const auto idx = p.indices_of(xs);
    return is_directed(p, p.make_set(idx));
}

std::vector<ElementId> compact_elements(const FinitePoset& p) {
    // Directed subsets of a finite poset contain their supremum.
    std::vector<ElementId> out;
    for (Index i = 0; i < p.size(); ++i) out.push_back(p.element(i));
    return out;
}

PosetFlags classify_poset(const FinitePoset& p) {
    PosetFlags f;
    const auto n = p.size();
    f.join_semilattice = f.meet_semilattice = f.bounded_complete = true;
    for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b) {
            const bool has_join = p.join(a, b) != kNone;
            if (!has_join) {
                f.join_semilattice = false;
                if ((p.leq_row(a) & p.leq_row(b)).any()) f.bounded_complete = false;
            }
            if (p.meet(a, b) == kNone) f.meet_semilattice = false;
        }
    f.bounded_above = p.top().has_value();
    f.near_sup_complete = f.join_semilattice;  // finite and nonempty
    f.complete = f.near_sup_complete && p.bottom().has_value();
    f.dcpo = f.bdcpo = f.algebraic = true;
    return f;
}

}  // namespace prequant
