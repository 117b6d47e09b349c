#include "tdual/divisor_calc.hpp"

namespace tdual {

DivisorLedger::DivisorLedger(std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) {
    live_.insert(i);
    tangents_[i] = Exponent();
    for (std::size_t j = i + 1; j <= n; ++j) pairs_[{i, j}] = Exponent();
  }
}

std::pair<std::size_t, std::size_t> DivisorLedger::key(std::size_t i, std::size_t j) {
  if (i == j) throw DomainError("a diagonal needs two distinct coordinates");
  return i < j ? std::make_pair(i, j) : std::make_pair(j, i);
}

void DivisorLedger::require_live(std::size_t i) const {
  if (!is_live(i)) throw DomainError("coordinate " + std::to_string(i) + " is not live");
}

Exponent DivisorLedger::pair(std::size_t i, std::size_t j) const {
  require_live(i);
  require_live(j);
  return pairs_.at(key(i, j));
}

Exponent DivisorLedger::tangent(std::size_t i) const {
  require_live(i);
  return tangents_.at(i);
}

void DivisorLedger::set_pair(std::size_t i, std::size_t j, const Exponent& e) {
  require_live(i);
  require_live(j);
  pairs_[key(i, j)] = e;
}

void DivisorLedger::set_tangent(std::size_t i, const Exponent& e) {
  require_live(i);
  tangents_[i] = e;
}

Exponent DivisorLedger::total() const {
  Exponent s;
  for (const auto& [k, e] : pairs_) s += e;
  for (const auto& [k, e] : tangents_) s += e;
  return s;
}

std::string DivisorLedger::to_string() const {
  std::string out;
  for (const auto& [k, e] : pairs_)
    out += "D" + std::to_string(k.first) + "," + std::to_string(k.second) + ": " + e.to_string() + "\n";
  for (const auto& [k, e] : tangents_) out += "T" + std::to_string(k) + ": " + e.to_string() + "\n";
  return out;
}

DivisorLedger ledger_for_components(const QForm& q, const std::vector<IntVector>& coweights) {
  DivisorLedger l(coweights.size());
  for (std::size_t i = 0; i < coweights.size(); ++i) {
    l.set_tangent(i + 1, q.value(coweights[i]));
    for (std::size_t j = i + 1; j < coweights.size(); ++j) l.set_pair(i + 1, j + 1, q.kappa(coweights[i], coweights[j]));
  }
  return l;
}

DivisorLedger restrict(const DivisorLedger& ledger, std::size_t i, std::size_t j) {
  if (i == j) throw DomainError("restrict: cannot merge a coordinate with itself");
  if (!ledger.is_live(i) || !ledger.is_live(j)) throw DomainError("restrict: merging a dead coordinate");
  const std::size_t keep = std::min(i, j), gone = std::max(i, j);
  std::set<std::size_t> survivors = ledger.live();
  survivors.erase(gone);
  DivisorLedger fresh;
  fresh.live_ = survivors;
  for (std::size_t a : survivors) {
    fresh.tangents_[a] = a == keep ? ledger.tangent(i) + ledger.tangent(j) + ledger.pair(i, j) : ledger.tangent(a);
    for (std::size_t b : survivors) {
      if (b <= a) continue;
      Exponent e;
      if (a == keep || b == keep) {
        std::size_t other = a == keep ? b : a;
        e = ledger.pair(keep, other) + ledger.pair(gone, other);
      } else {
        e = ledger.pair(a, b);
      }
      fresh.pairs_[{a, b}] = e;
    }
  }
  return fresh;
}

bool verify_bilinearity(const DivisorLedger& ledger, const QForm& q, const IntVector& lambda, const IntVector& mu,
                        const IntVector& nu) {
  if (ledger.live() != std::set<std::size_t>{1, 2, 3}) return false;
  DivisorLedger r = restrict(ledger, 1, 2);
  IntVector sum = add(lambda, mu);
  return r.pair(1, 3) == q.kappa(sum, nu) && r.tangent(1) == q.value(sum) && r.tangent(3) == q.value(nu);
}

bool verify_bilinearity(const QForm& q, const IntVector& lambda, const IntVector& mu, const IntVector& nu) {
  return verify_bilinearity(ledger_for_components(q, {lambda, mu, nu}), q, lambda, mu, nu);
}

bool verify_quadratic(const DivisorLedger& ledger, const QForm& q, const IntVector& lambda, const IntVector& mu) {
  if (ledger.live() != std::set<std::size_t>{1, 2, 3, 4}) return false;
  DivisorLedger r = restrict(restrict(ledger, 1, 2), 3, 4);
  IntVector sum = add(lambda, mu);
  Exponent qs = q.value(sum);
  return r.pair(1, 3) == Int(2) * qs && r.tangent(1) == qs && r.tangent(3) == qs;
}

bool verify_quadratic(const QForm& q, const IntVector& lambda, const IntVector& mu) {
  return verify_quadratic(ledger_for_components(q, {lambda, mu, lambda, mu}), q, lambda, mu);
}

}  // namespace tdual
