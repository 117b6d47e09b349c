#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdual/matrix.hpp"

namespace tdual {

struct SmithForm {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // rows x cols, diagonal with d1 | d2 | ...
  IntMatrix v;  // cols x cols, unimodular
};

// U * M * V = D with nonnegative diagonal entries forming a divisibility chain.
SmithForm smith_normal_form(const IntMatrix& m);

// Row Hermite normal form of the row span of m, zero rows removed. Pivots are
// positive, entries above a pivot lie in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

Int determinant(const IntMatrix& m);
Rat determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

// Coefficients c with sum_i c_i * basis.row(i) = target, if target lies in the
// rational row span. The basis rows must be linearly independent.
std::optional<RatVector> solve_in_row_span(const RatMatrix& basis, const RatVector& target);

// A full-rank-in-its-span sublattice of Z^ambient_rank, stored in row HNF so
// that sublattice equality is representation equality.
class Sublattice {
 public:
  explicit Sublattice(std::size_t ambient_rank = 0);
  // Spanned by the rows of generators (which may be dependent).
  Sublattice(std::size_t ambient_rank, const IntMatrix& generators);

  static Sublattice full(std::size_t ambient_rank);
  static Sublattice zero(std::size_t ambient_rank) { return Sublattice(ambient_rank); }

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const IntVector& v) const;
  // Integer coordinates of v in the HNF basis, if v belongs to the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const Sublattice& other) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Sublattice& a, const Sublattice& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t ambient_rank_;
  IntMatrix basis_;
};

// Invariant factors d_i >= 2 (ascending, each dividing the next) followed by
// zeros for the free part.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;
  // Any list of cyclic orders (0 = infinite cyclic, 1 = trivial); normalized.
  explicit FGAbelianGroup(const std::vector<Int>& cyclic_orders);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  std::size_t free_rank() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_finite() const { return free_rank() == 0; }
  // Order, or nullopt when infinite.
  std::optional<Int> order() const;

  // Elements are coordinate vectors, one per invariant factor.
  IntVector reduce(const IntVector& element) const;
  IntVector add(const IntVector& a, const IntVector& b) const;
  IntVector zero() const { return IntVector(factors_.size(), 0); }

  FGAbelianGroup power(std::size_t k) const;

  friend bool operator==(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }
  std::string to_string() const;

 private:
  std::vector<Int> factors_;
};

// {x in Z^c : M x == 0 (mod N)}; N = nullopt means the exact kernel.
Sublattice kernel_mod(const IntMatrix& m, const std::optional<Int>& modulus);
Sublattice saturation(const Sublattice& s);
FGAbelianGroup quotient_group(const Sublattice& s);
Sublattice intersect(const Sublattice& a, const Sublattice& b);
// Index [b : a] for a contained in b with equal rank.
Int index_in(const Sublattice& a, const Sublattice& b);

// Least common multiple of all denominators of m.
Int denominator_lcm(const RatMatrix& m);

}  // namespace tdual
