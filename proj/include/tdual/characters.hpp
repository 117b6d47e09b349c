#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdual/dualgroup.hpp"

namespace tdual {

// Weight multiplicities of a finite-dimensional representation. Weights live
// in X^* of rd.
struct Character {
  RootDatum rd;
  std::map<IntVector, Int> multiplicities;
  std::optional<IntVector> highest;

  Int dimension() const;
  Int multiplicity(const IntVector& weight) const;
  // "weight: multiplicity" lines in sorted weight order.
  std::string to_table() const;
};

bool is_dominant_weight(const RootDatum& rd, const IntVector& x);
IntVector dominant_weight(const RootDatum& rd, const IntVector& x);
std::vector<IntVector> weyl_orbit(const RootDatum& rd, const IntVector& x);

// W-invariant form on X^*, positive definite on the root span.
RatMatrix weight_form(const RootDatum& rd);

// Dominant weights below lambda in dominance order.
std::vector<IntVector> dominant_weights_below(const RootDatum& rd, const IntVector& lambda);

// Freudenthal recursion.
Character irreducible_character(const RootDatum& rd, const IntVector& lambda);

// Weyl dimension formula.
Int weyl_dimension(const RootDatum& rd, const IntVector& lambda);

Character product(const Character& a, const Character& b);

// Highest weights of the constituents with multiplicity, highest first.
std::vector<std::pair<IntVector, Int>> tensor_decompose(const Character& a, const Character& b);

// mu - lambda is a nonnegative integral combination of simple roots.
bool weight_leq(const RootDatum& rd, const IntVector& lambda, const IntVector& mu);

struct FiberDim {
  Rat value;
  bool integral = false;
  bool nonnegative = false;
};
// 1/2 (<2rho, lambda> + <2rho, mu> - <2rho, nu>) for coweights of rd.
FiberDim fiber_dim(const RootDatum& rd, const IntVector& lambda, const IntVector& mu, const IntVector& nu);

struct SatakeConstituent {
  IntVector coweight;  // in source X_*
  IntVector weight;    // in dual X^* coordinates
  Int multiplicity;
  bool below_top = false;
  FiberDim fiber;
};

struct SatakeReport {
  TwistedDual dual;
  std::vector<SatakeConstituent> constituents;
  Int top_multiplicity = 0;
  bool all_below = true;
  bool fibers_ok = true;
  BraidingSigns braiding;
  bool holds() const { return top_multiplicity == 1 && all_below && fibers_ok; }
};

// lambda, mu: dominant source coweights in the full kernel of q.
SatakeReport satake_prediction(const QForm& q, const IntVector& lambda, const IntVector& mu);
SatakeReport satake_prediction(const QForm& q, const TwistedDual& dual, const IntVector& lambda, const IntVector& mu);

}  // namespace tdual
