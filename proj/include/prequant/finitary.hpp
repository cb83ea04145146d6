#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prequant/lazy.hpp"
#include "prequant/nucleus.hpp"

namespace prequant {

struct FinitaryReport {
    enum class Verdict { finitary, no_violation_found, not_finitary };
    Verdict verdict = Verdict::finitary;
    // A directed family on which (sup D)* differs from sup(D*).
    std::optional<std::string> witness;
    std::string note;
    bool is_finitary() const { return verdict == Verdict::finitary; }
};
std::string to_string(FinitaryReport::Verdict v);

// Finite carriers: always finitary; cross-checked over every directed subset when small.
FinitaryReport is_finitary(const FinitePoset& p, const SelfMap& s);
// Up-sets carrier: searched over truncation families of the sample sets (window-bounded).
FinitaryReport is_finitary(const UpsetNucleus& s, std::span<const UPSet> targets, std::uint64_t window = 48);
// Lazy chain: every closure fixing inf is finitary; the family space is exhausted.
FinitaryReport is_finitary(const ChainClosure& s);

// x -> sup{y* : y compact, y <= x}; requires a precoherent carrier.
MonotoneMap star_f(const OrderedMagma& q, const SelfMap& s);
// Symbolic per kind; verified against the windowed formula on the samples.
UpsetNucleus star_f(const UpsetNucleus& s, std::span<const UPSet> samples, std::uint64_t window = 48);
ChainClosure star_f(const ChainClosure& s, std::span<const ChainValue> samples);

struct KlatticeVerdict {
    bool precoherent = false;  // quotient by star_f is precoherent
    bool same_class = false;   // near prequantale / prequantale class preserved
    bool k_identity = false;   // K(Q^{*f}) = K(Q)^{*f}
    bool sampled = false;      // lazy carrier: checked on generators only
};
KlatticeVerdict verify_klattice(const OrderedMagma& q, const SelfMap& s);
KlatticeVerdict verify_klattice(const UpsetNucleus& s, std::span<const UPSet> generators, std::uint64_t window = 48);

// x -> sup{g(x) : g in the composition monoid generated by gamma}.
MonotoneMap composition_monoid_join(const OrderedMagma& m, std::span<const SelfMap> gamma);

}  // namespace prequant
