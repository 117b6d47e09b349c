#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdual/qform.hpp"

namespace tdual {

// A dual root datum sitting inside the source coweight lattice. The datum's
// X^* is the weight sublattice written in the coordinates of its HNF basis;
// simple root i is r_i times source coroot i, simple coroot i is source root i
// divided by r_i, as a functional on the sublattice.
struct TwistedDual {
  RootDatum source;
  Sublattice weight_sublattice;
  std::vector<std::optional<Int>> multipliers;  // nullopt = infinite
  std::vector<std::size_t> dropped;             // source simple indices with infinite multiplier
  std::vector<std::size_t> kept;                // source simple indices of the dual's simple roots
  RootDatum datum;

  // Source coweight corresponding to a dual weight in basis coordinates.
  IntVector to_source(const IntVector& coords) const;
  // Basis coordinates of a source coweight lying in the weight sublattice.
  std::optional<IntVector> to_dual(const IntVector& coweight) const;
};

// Builds and validates the dual from a lattice and multipliers. Throws Error
// when a root falls outside the lattice or a coroot is not integral on it.
TwistedDual assemble_dual(const RootDatum& rd, const Sublattice& lattice,
                          const std::vector<std::optional<Int>>& multipliers, const std::string& name);

TwistedDual twisted_dual(const QForm& q, KernelMode mode = KernelMode::full);

struct Rank1Row {
  Int r0;  // 0 encodes infinite order
  Int p;
  Sublattice pgl2;  // in PGL2 coweight units
  Sublattice sl2;   // in PGL2 coweight units (SL2 coweights = 2Z)
  std::string case_label;
};
// Kernels of kappa(m, n) = q0^{2mn} with q0 = exp(2 pi i p / r0).
Rank1Row rank1_table(const Int& r0, const Int& p);
// Closed-form answer by the 2-adic valuation of r0, in PGL2 units.
std::pair<Int, Int> rank1_expected_generators(const Int& r0);

// Weight lattice {x : d iota(x) in N X^*}, multipliers denominator(d (c, c) / 2N).
TwistedDual fl_dual(const RootDatum& rd, const Int& d, const Int& n);
// The form with exponent d (x, x) / 2N whose twisted dual fl_dual should match.
QForm fl_qform(const RootDatum& rd, const Int& d, const Int& n);

TwistedDual lusztig_dual(const CartanDatum& cd, const Int& l);
// q^f with q a primitive l-th root of unity, for use in coroot mode.
QForm lusztig_qform(const CartanDatum& cd, const Int& l);

enum class IsoStatus { iso, none, undecided };
std::string to_string(IsoStatus s);

struct IsoResult {
  IsoStatus status = IsoStatus::none;
  IntMatrix map;                     // on X^*: sends simple root i of d1 to simple root perm[i] of d2
  std::vector<std::size_t> permutation;
  std::string reason;
};

inline constexpr long kDefaultIsoEntryBound = 2;
IsoResult isomorphic(const RootDatum& d1, const RootDatum& d2, long entry_bound = kDefaultIsoEntryBound);

struct QuantumPair {
  TwistedDual left;
  TwistedDual right;
  bool verified = false;
  IntMatrix iso;  // left X^* coordinates -> right X^* coordinates
  IsoResult cross_check;
  std::string report;
};
// b is a nondegenerate W-invariant rational Gram on X_*.
QuantumPair quantum_dual_pair(const RootDatum& rd, const RatMatrix& b);

}  // namespace tdual
