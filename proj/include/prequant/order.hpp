#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prequant/errors.hpp"

namespace prequant {

using Index = std::uint32_t;
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr Index kNone = 0xffffffffu;

// Enumeration operations refuse carriers above this size.
inline constexpr std::size_t kEnumerationCap = 64;

// An element handle tagged with the carrier that issued it.
struct ElementId {
    std::uint64_t carrier = 0;
    Index index = 0;
    auto operator<=>(const ElementId&) const = default;
};

enum class CarrierKind { finite, lazy_chain, upsets_of_naturals };

struct PosetFlags {
    bool complete = false;
    bool near_sup_complete = false;
    bool bounded_complete = false;
    bool dcpo = false;
    bool bdcpo = false;
    bool bounded_above = false;
    bool join_semilattice = false;
    bool meet_semilattice = false;
    bool algebraic = false;
    bool operator==(const PosetFlags&) const = default;
};

class FinitePoset {
public:
    FinitePoset();
    // Validates reflexivity, antisymmetry and transitivity.
    FinitePoset(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq);
    static FinitePoset from_predicate(std::vector<std::string> labels,
                                      const std::function<bool(Index, Index)>& leq);
    static FinitePoset chain(std::size_t n);
    static FinitePoset antichain(std::size_t n);

    std::size_t size() const;
    std::uint64_t id() const;
    bool leq(Index a, Index b) const { return leq_row(a)[b]; }
    bool lt(Index a, Index b) const { return a != b && leq(a, b); }
    const ElementSet& leq_row(Index a) const;  // up-set of a
    const ElementSet& geq_row(Index a) const;  // down-set of a

    const std::string& label(Index i) const;
    const std::vector<std::string>& labels() const;
    std::optional<Index> find(std::string_view label) const;

    ElementId element(Index i) const;
    Index index_of(ElementId e) const;  // rejects foreign ids
    ElementId at(std::string_view label) const;
    std::vector<Index> indices_of(std::span<const ElementId> xs) const;

    std::optional<Index> top() const;
    std::optional<Index> bottom() const;
    // Pairwise tables; kNone when absent.
    Index join(Index a, Index b) const;
    Index meet(Index a, Index b) const;
    std::optional<Index> sup(const ElementSet& xs) const;
    std::optional<Index> inf(const ElementSet& xs) const;
    ElementSet upper_bounds(const ElementSet& xs) const;
    ElementSet lower_bounds(const ElementSet& xs) const;

    // Elements sorted so that x before y whenever x < y.
    const std::vector<Index>& ascending() const;

    ElementSet empty_set() const { return ElementSet(size()); }
    ElementSet full_set() const;
    ElementSet make_set(std::span<const Index> xs) const;

    FinitePoset dual() const;
    FinitePoset restrict_to(std::span<const Index> elems) const;
    bool same_order(const FinitePoset& other) const;

    struct Impl;  // implementation detail

private:
    explicit FinitePoset(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

std::vector<Index> members(const ElementSet& s);

// Id-level operations on finite carriers. Explicit lists must be duplicate-free.
std::optional<ElementId> sup(const FinitePoset& p, std::span<const ElementId> xs);
std::optional<ElementId> inf(const FinitePoset& p, std::span<const ElementId> xs);
bool is_directed(const FinitePoset& p, std::span<const ElementId> xs);
bool is_directed(const FinitePoset& p, const ElementSet& xs);
std::vector<ElementId> compact_elements(const FinitePoset& p);
PosetFlags classify_poset(const FinitePoset& p);

}  // namespace prequant
