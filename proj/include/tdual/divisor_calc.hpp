#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "tdual/qform.hpp"

namespace tdual {

// Exponents of a trivialization along the pairwise diagonals of X^n and along
// the tangent direction of each coordinate. Coordinates are 1-based ids; after
// a merge the surviving coordinate keeps the smaller id.
class DivisorLedger {
 public:
  DivisorLedger() = default;
  explicit DivisorLedger(std::size_t n);

  const std::set<std::size_t>& live() const { return live_; }
  bool is_live(std::size_t i) const { return live_.count(i) > 0; }

  Exponent pair(std::size_t i, std::size_t j) const;
  Exponent tangent(std::size_t i) const;
  void set_pair(std::size_t i, std::size_t j, const Exponent& e);
  void set_tangent(std::size_t i, const Exponent& e);

  // Sum of every recorded exponent.
  Exponent total() const;

  friend bool operator==(const DivisorLedger& a, const DivisorLedger& b) {
    return a.live_ == b.live_ && a.pairs_ == b.pairs_ && a.tangents_ == b.tangents_;
  }

  std::string to_string() const;

  friend DivisorLedger restrict(const DivisorLedger& ledger, std::size_t i, std::size_t j);

 private:
  static std::pair<std::size_t, std::size_t> key(std::size_t i, std::size_t j);
  void require_live(std::size_t i) const;

  std::set<std::size_t> live_;
  std::map<std::pair<std::size_t, std::size_t>, Exponent> pairs_;
  std::map<std::size_t, Exponent> tangents_;
};

// Pair (i, j) gets kappa(l_i, l_j); coordinate i gets Q(l_i).
DivisorLedger ledger_for_components(const QForm& q, const std::vector<IntVector>& coweights);

// Restriction to the diagonal x_i = x_j.
DivisorLedger restrict(const DivisorLedger& ledger, std::size_t i, std::size_t j);

bool verify_bilinearity(const QForm& q, const IntVector& lambda, const IntVector& mu, const IntVector& nu);
bool verify_bilinearity(const DivisorLedger& ledger, const QForm& q, const IntVector& lambda, const IntVector& mu,
                        const IntVector& nu);
bool verify_quadratic(const QForm& q, const IntVector& lambda, const IntVector& mu);
bool verify_quadratic(const DivisorLedger& ledger, const QForm& q, const IntVector& lambda, const IntVector& mu);

}  // namespace tdual
