#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "prequant/errors.hpp"

namespace prequant {

// Ultimately periodic subset of the naturals: explicit membership below the
// threshold, then a repeating pattern. Normal form: minimal period, then
// minimal threshold, so equality of representations is equality of sets.
class UPSet {
public:
    UPSet();  // empty set
    static UPSet finite(const std::vector<std::uint64_t>& xs);
    static UPSet naturals();
    static UPSet from_n(std::uint64_t t);                        // [t, inf)
    static UPSet progression(std::uint64_t a, std::uint64_t d);  // a + dN, d >= 1
    // Submonoid of (N,+) generated by gens.
    static UPSet monoid(const std::vector<std::uint64_t>& gens);
    // Membership of n < t by the predicate, then period p from t on.
    static UPSet from_membership(std::uint64_t t, std::uint64_t p, const std::function<bool(std::uint64_t)>& in);

    bool contains(std::uint64_t n) const;
    bool empty() const;
    bool is_finite() const;
    std::uint64_t threshold() const { return bits_.size(); }
    std::uint64_t period() const { return pattern_.size(); }
    std::vector<std::uint64_t> elements_below(std::uint64_t bound) const;

    UPSet truncate(std::uint64_t k) const;  // X intersected with [0, k)
    UPSet unite(const UPSet& o) const;
    UPSet intersect(const UPSet& o) const;
    UPSet sum(const UPSet& o) const;  // Minkowski sum
    bool subset_of(const UPSet& o) const;

    bool operator==(const UPSet& o) const = default;
    std::string to_string() const;

private:
    std::vector<bool> bits_;
    std::vector<bool> pattern_{false};
    void normalize();
};

// Lazy nuclei on the up-sets carrier (subsets of N under Minkowski sum), by kind.
class UpsetNucleus {
public:
    enum class Kind { translate, top, finite_or_all, opaque };
    // X -> X + S for a submonoid S; S = {0} is d, S = N generates monoid ideals.
    static UpsetNucleus translate(const UPSet& s, std::string name);
    static UpsetNucleus identity();
    static UpsetNucleus ideal();
    static UpsetNucleus top();
    // Finite sets fixed, infinite sets sent to N.
    static UpsetNucleus finite_or_all();
    // No family schema attached; finitary questions on it are undecidable here.
    static UpsetNucleus opaque(std::string name, std::function<UPSet(const UPSet&)> rule);
    // Parses d, e, ideal, finite-or-all, monoid:2,3.
    static UpsetNucleus parse(const std::string& text);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const UPSet& shift() const { return shift_; }
    UPSet operator()(const UPSet& x) const;

private:
    Kind kind_ = Kind::translate;
    std::string name_;
    UPSet shift_;
    std::function<UPSet(const UPSet&)> rule_;
};

// Describable sample elements of the up-sets carrier, deterministic in the seed.
std::vector<UPSet> upset_samples(std::size_t count, std::uint64_t seed);

// The chain N u {inf} under max.
using ChainValue = std::uint64_t;
inline constexpr ChainValue kInfinity = std::numeric_limits<ChainValue>::max();
std::string chain_label(ChainValue v);

class ChainClosure {
public:
    enum class Kind { identity, top, multiple_of, threshold, join_with, opaque };
    static ChainClosure identity();
    static ChainClosure top();
    static ChainClosure multiple_of(std::uint64_t k);  // round up to a multiple of k
    static ChainClosure threshold(std::uint64_t t);    // fixed up to t, inf above
    static ChainClosure join_with(std::uint64_t a);    // x -> max(x, a)
    static ChainClosure opaque(std::string name, std::function<ChainValue(ChainValue)> rule);
    // Parses d, e, mult:k, threshold:t, join:a.
    static ChainClosure parse(const std::string& text);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    ChainValue operator()(ChainValue x) const;

private:
    Kind kind_ = Kind::identity;
    std::uint64_t param_ = 0;
    std::string name_;
    std::function<ChainValue(ChainValue)> rule_;
};

std::vector<ChainValue> chain_samples(std::size_t count, std::uint64_t seed);

}  // namespace prequant
