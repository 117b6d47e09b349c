#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tdual/lattice.hpp"
#include "tdual/partition.hpp"

namespace tdual {

// A component of Gr_{T, X^n}: one coweight per coordinate.
using ComponentIndex = std::vector<IntVector>;

// Components meet over the diagonal of p iff the sums over each part agree.
bool meets_over(const ComponentIndex& a, const ComponentIndex& b, const Partition& p);

// The incidence partition with the most parts (ties: least restricted growth
// string), or nullopt when the total sums differ.
std::optional<Partition> incident(const ComponentIndex& a, const ComponentIndex& b);

// Homomorphism Z^rank -> A given by the images of the standard basis.
struct Homomorphism {
  FGAbelianGroup target;
  std::vector<IntVector> images;
  IntVector operator()(const IntVector& x) const;
};

// Values of a function on components, in coordinates of a fixed group.
struct ComponentMapping {
  FGAbelianGroup target;
  std::size_t n = 0;
  std::size_t rank = 0;
  std::function<IntVector(const ComponentIndex&)> value;
};

ComponentMapping factorizable_function(const Homomorphism& h, std::size_t n);

struct FactorizabilityReport {
  bool local_constancy = true;
  bool product_rule = true;
  std::optional<ComponentIndex> witness;
  bool ok() const { return local_constancy && product_rule; }
};

// Checks every component with coordinates in [-bound, bound]. Lower levels
// are read off by padding with zero coweights.
FactorizabilityReport check_factorizable(const ComponentMapping& m, long bound);
inline bool is_factorizable(const ComponentMapping& m, long bound) { return check_factorizable(m, bound).ok(); }

// h(e_j) = m(e_j, 0, ..., 0).
Homomorphism reconstruct_homomorphism(const ComponentMapping& m);

// Sections of Fact(A)_n over the stratum of p: A^{#parts}.
FGAbelianGroup fact_sections(const FGAbelianGroup& a, std::size_t n, const Partition& p);

}  // namespace tdual
