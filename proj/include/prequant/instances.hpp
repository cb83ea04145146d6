#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prequant/nucleus.hpp"

namespace prequant {

// A finite magma given by its table; flags are recomputed from the table.
struct FiniteMagmaDesc {
    std::string name;
    std::vector<std::string> labels;
    std::vector<Index> table;  // row-major, labels.size()^2 entries
    bool associative = false;
    bool commutative = false;
    std::optional<Index> unit;

    std::size_t size() const { return labels.size(); }
    Index mul(Index a, Index b) const { return table[a * size() + b]; }

    static FiniteMagmaDesc make(std::string name, std::vector<std::string> labels, std::vector<Index> table);
    static FiniteMagmaDesc cyclic_group(std::size_t n);      // Z/n, labels "0".."n-1"
    static FiniteMagmaDesc klein_group();                    // Z/2 x Z/2
    static FiniteMagmaDesc left_zero(std::size_t n);         // xy = x
    static FiniteMagmaDesc idempotent_monoid();              // {1, e}, e*e = e
    // M_0 = M with an absorbing element "0" appended.
    static FiniteMagmaDesc with_zero(const FiniteMagmaDesc& m);
};

// Largest magma accepted by the power-set constructions.
inline constexpr std::size_t kPowersetCap = 5;

// Complex multiplication XY = {xy}; subsets labelled "{a,b}", ordered by inclusion.
OrderedMagma powerset_prequantale(const FiniteMagmaDesc& m, bool drop_empty = false);
// Bitmask of the subset carried by element i of a power-set magma built above.
std::uint32_t subset_mask(const OrderedMagma& ps, Index i);
Index subset_index(const OrderedMagma& ps, std::uint32_t mask);

// ---- module and ideal systems on 2^{M_0} ---------------------------------

struct SystemLattice {
    FiniteMagmaDesc base;  // G or M
    FiniteMagmaDesc base0; // G_0 or M_0; the zero is the last element
    OrderedMagma lattice;  // 2^{base0}
    Index empty = 0;       // the subset {} in lattice
    Index zero = 0;        // the subset {0}
    Index one = 0;         // the subset {1} (unit of base)
    Index full = 0;        // base0 itself
    Index singleton(Index c) const;  // {c}, c an index of base0
};

SystemLattice module_system_lattice(const FiniteMagmaDesc& g);
SystemLattice ideal_system_lattice(const FiniteMagmaDesc& m);

struct ModuleSystemConditions {
    bool empty_to_zero = false;  // {}^r = {0}
    bool definition = false;     // closure with (cX)^r = cX^r
    bool associative = false;    // closure and r-multiplication associative
    bool star_products = false;  // closure and (X^r Y^r)^r = (XY)^r
    bool residual_form = false;  // XY <= Z^r iff XY^r <= Z^r
    bool nucleus = false;
};
ModuleSystemConditions module_system_conditions(const SystemLattice& l, const SelfMap& r);
// Throws internal when the equivalent conditions disagree on a map with {}^r = {0}.
bool is_module_system(const SystemLattice& l, const SelfMap& r);

struct IdealSystemConditions {
    bool weak_definition = false;    // 0 in {}^r, cM_0 <= {c}^r, cX^r <= (cX)^r, closure
    bool weak_nucleus_form = false;  // nucleus, {0}^r = {}^r, {1}^r = M_0
    bool ideal_definition = false;   // weak and (cX)^r = cX^r
    bool ideal_transport_form = false;  // weak and every singleton transportable
};
IdealSystemConditions ideal_system_conditions(const SystemLattice& l, const SelfMap& r);
bool is_weak_ideal_system(const SystemLattice& l, const SelfMap& r);
bool is_ideal_system(const SystemLattice& l, const SelfMap& r);

// ---- finite commutative rings ---------------------------------------------

struct RingDesc {
    enum class Kind { zmod, poly } kind = Kind::zmod;
    std::uint32_t n = 0;            // zmod modulus
    std::uint32_t p = 0;            // poly: prime field
    std::vector<std::uint32_t> f;   // poly: monic modulus, coefficients low to high
    static RingDesc zmod(std::uint32_t n);
    static RingDesc poly(std::uint32_t p, std::vector<std::uint32_t> f);
    // Parses "x^3", "x^2+1", "x^2+x+1"; coefficients reduced mod p.
    static RingDesc poly(std::uint32_t p, const std::string& f);
    std::string name() const;
};

inline constexpr std::size_t kRingCap = 256;

struct FiniteRing {
    RingDesc desc;
    std::size_t size = 0;
    std::vector<std::uint32_t> add, mul;  // size x size tables
    std::uint32_t zero = 0, one = 0;
    std::uint32_t characteristic = 0;
    std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[a * size + b]; }
    std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[a * size + b]; }
    std::uint32_t power(std::uint32_t a, std::uint64_t e) const;
    std::string element_label(std::uint32_t a) const;
};
FiniteRing make_ring(const RingDesc& d);

struct RingIdealLattice {
    FiniteRing ring;
    std::vector<ElementSet> ideals;  // member sets, in lattice index order
    OrderedMagma lattice;            // inclusion order, ideal product
    Index zero_ideal = 0, whole = 0;
    Index index_of(const ElementSet& ideal) const;  // throws malformed when not an ideal
    // Ideal generated by a set of ring elements.
    ElementSet generate(const ElementSet& gens) const;
};
RingIdealLattice ring_ideal_lattice(const RingDesc& d);

MonotoneMap radical_operation(const RingIdealLattice& l);
std::vector<Index> prime_ideals(const RingIdealLattice& l);
std::vector<Index> minimal_primes(const RingIdealLattice& l);

struct FrobeniusWindow {
    std::uint32_t p = 0;          // prime with char = p^k
    std::size_t preperiod = 0;    // first e on the periodic part of e -> (x -> x^(p^e))
    std::size_t period = 0;
};
FrobeniusWindow frobenius_window(const FiniteRing& r);

// I -> I^T; throws characteristic-not-prime unless the characteristic is a prime power.
MonotoneMap tight_closure_T(const RingIdealLattice& l);
Index tight_closure_T(const RingIdealLattice& l, Index i);

struct TightClosure {
    MonotoneMap T;
    MonotoneMap star;               // hull of T
    std::vector<Index> tightly_closed;
    bool multiplicative = false;    // I J^T <= (IJ)^T for all I, J
    bool matches_scan = false;      // star equals intersection of tightly closed ideals above
    bool noetherian_equality = false;  // T = star
    bool nucleus = false;
};
TightClosure tight_closure(const RingIdealLattice& l);
Index tight_closure_star(const RingIdealLattice& l, Index i);

// ---- chains and lattices ----------------------------------------------------

// {-n..n} with saturating addition, plus an absorbing top "inf".
OrderedMagma saturating_chain(int n);
// Discretely ordered Z/k with an absorbing top "inf".
OrderedMagma discrete_group_infinity(std::size_t k);
// Adjoins "-inf" as an annihilator below everything.
OrderedMagma plus_minus_infinity(const OrderedMagma& g_inf);

enum class LatticeOp { join, meet };
OrderedMagma lattice_magma(const FinitePoset& p, LatticeOp op, std::string name = {});
FinitePoset diamond();  // 0 < a, b < 1
FinitePoset pentagon(); // N5
FinitePoset m3();
// The two-element multiplicative lattice {0, 1} under meet.
OrderedMagma two_element_lattice();

struct CorpusEntry {
    std::string key;
    OrderedMagma magma;
};
// The shipped finite corpus, in a fixed order.
std::vector<CorpusEntry> corpus();

}  // namespace prequant
