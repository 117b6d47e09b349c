#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tdual/lattice.hpp"

namespace tdual {

// A root datum with X^* = X_* = Z^rank under the dot pairing. Rows of
// simple_roots live in X^*, rows of simple_coroots in X_*.
struct RootDatum {
  std::string name;
  std::size_t rank = 0;
  IntMatrix simple_roots;
  IntMatrix simple_coroots;

  std::size_t semisimple_rank() const { return simple_roots.rows(); }
  IntVector root(std::size_t i) const { return simple_roots.row(i); }
  IntVector coroot(std::size_t i) const { return simple_coroots.row(i); }

  // cartan(i, j) = <alpha_j, coroot_i>.
  IntMatrix cartan() const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.rank == b.rank && a.simple_roots == b.simple_roots && a.simple_coroots == b.simple_coroots;
  }
};

inline constexpr std::size_t kDefaultWeylBound = 200000;

// Full root system generated from a datum: matching (root, coroot) pairs.
struct RootSystem {
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;
  std::vector<RatVector> simple_coords;  // root = sum coords_i * alpha_i
  std::vector<bool> positive;
  IntVector two_rho;         // sum of positive roots, in X^*
  IntVector two_rho_check;   // sum of positive coroots, in X_*

  std::size_t size() const { return roots.size(); }
  std::optional<std::size_t> find_root(const IntVector& r) const;
  std::optional<std::size_t> find_coroot(const IntVector& c) const;
};

RootSystem root_system(const RootDatum& rd, std::size_t bound = kDefaultWeylBound);

// Throws RootDatumError describing the first violated axiom.
void validate(const RootDatum& rd, std::size_t bound = kDefaultWeylBound);

struct WeylGroup {
  std::vector<IntMatrix> elements;   // action on X_* (column vectors)
  std::vector<std::size_t> lengths;  // word length of each element
  std::vector<IntMatrix> generators; // simple reflections on X_*
  std::size_t order() const { return elements.size(); }
};

// Closure of the simple reflections, breadth-first by length. Throws
// RootDatumError when the bound is exceeded.
WeylGroup weyl_group(const RootDatum& rd, std::size_t bound = kDefaultWeylBound);

// Simple reflection s_i on coweights: lambda - <alpha_i, lambda> coroot_i.
IntMatrix simple_reflection_coweights(const RootDatum& rd, std::size_t i);
IntVector reflect_coweight(const RootDatum& rd, std::size_t i, const IntVector& lambda);
IntVector reflect_weight(const RootDatum& rd, std::size_t i, const IntVector& x);

// Preset data: SL<n>, PGL<n>, GL<n> (also SL(n) etc.), Sp4, G2, T<r> /
// torus(r), and products joined with 'x'.
RootDatum standard(const std::string& label);

RootDatum langlands_dual(const RootDatum& rd);

// Connected components of the Dynkin diagram, as sorted index sets.
std::vector<std::vector<std::size_t>> components(const RootDatum& rd);

// Type label such as "A1", "B2", "G2", "A2xA1"; "T" for no roots.
std::string cartan_type(const RootDatum& rd);
bool is_simply_connected(const RootDatum& rd);
bool is_adjoint(const RootDatum& rd);
// e.g. "A1 (simply-connected)".
std::string describe(const RootDatum& rd);

enum class Dominance { less_equal, greater_equal, equal, incomparable };
std::string to_string(Dominance d);

// Compares coweights through the simple coroots.
Dominance dominance_leq(const RootDatum& rd, const IntVector& lambda, const IntVector& mu);
bool is_dominant_coweight(const RootDatum& rd, const IntVector& lambda);
// Dominant representative of the W-orbit of a coweight.
IntVector dominant_coweight(const RootDatum& rd, const IntVector& lambda);
IntVector antidominant_coweight(const RootDatum& rd, const IntVector& lambda);

FGAbelianGroup pi1(const RootDatum& rd);
Sublattice coroot_lattice(const RootDatum& rd);

// <2 rho, lambda> for a dominant coweight.
Int orbit_dim(const RootDatum& rd, const IntVector& lambda);
// <rho, lambda + mu>, requiring w0(lambda) <= mu <= lambda.
Int sib_dim(const RootDatum& rd, const IntVector& lambda, const IntVector& mu);

// Sum over all roots of beta beta^T (rows and columns indexed by X_*).
IntMatrix killing_matrix(const RootDatum& rd);
// Same, restricted to roots supported on one Dynkin component.
IntMatrix killing_matrix(const RootDatum& rd, std::size_t component);

// Dual Coxeter number of one Dynkin component.
Int dual_coxeter_number(const RootDatum& rd, std::size_t component);
// Sum over components of K_c / (2 h_c): short coroots get square length 2.
RatMatrix normalized_killing(const RootDatum& rd);

struct DualCoxeter {
  Int h_check;
  RatMatrix iota;  // iota(lambda) = iota * lambda, landing in Q (x) X^*
};

// Irreducible root systems only; a central torus is allowed.
DualCoxeter dual_coxeter_and_iota(const RootDatum& rd);

}  // namespace tdual
