#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tdual/divisor_calc.hpp"

using namespace tdual;

namespace {

QForm sample_form(std::mt19937& rng) {
  static const std::vector<std::string> labels = {"SL2", "PGL2", "GL2", "SL3", "Sp4", "G2", "T2"};
  RootDatum rd = standard(labels[rng() % labels.size()]);
  return qform_from_gram(rd, oracle::random_invariant_gram(rd, rng));
}

}  // namespace

TEST_CASE("ledger for two components") {
  RootDatum pgl2 = standard("PGL2");
  QForm q = qform_from_gram(pgl2, Rat(1, 7) * RatMatrix{{2}});
  IntVector l = int_vector({2}), m = int_vector({3});
  DivisorLedger d = ledger_for_components(q, {l, m});
  CHECK(d.pair(1, 2) == q.kappa(l, m));
  CHECK(d.tangent(1) == q.value(l));
  CHECK(d.tangent(2) == q.value(m));
}

TEST_CASE("ledger of the trivial form is zero") {
  RootDatum sl3 = standard("SL3");
  DivisorLedger d = ledger_for_components(trivial_qform(sl3), {int_vector({1, 2}), int_vector({3, -1}), int_vector({0, 4})});
  CHECK(d.total().is_zero());
  CHECK(d.pair(1, 3).is_zero());
}

TEST_CASE("ledger for three components") {
  RootDatum sl3 = standard("SL3");
  std::mt19937 rng(41);
  QForm q = qform_from_gram(sl3, oracle::random_invariant_gram(sl3, rng));
  IntVector l = int_vector({1, 2}), m = int_vector({-2, 1}), n = int_vector({0, 3});
  DivisorLedger d = ledger_for_components(q, {l, m, n});
  CHECK(d.pair(1, 2) == q.kappa(l, m));
  CHECK(d.pair(1, 3) == q.kappa(l, n));
  CHECK(d.pair(2, 3) == q.kappa(m, n));
  CHECK(d.pair(3, 2) == d.pair(2, 3));
}

TEST_CASE("restriction of a two-coordinate ledger") {
  DivisorLedger d(2);
  d.set_pair(1, 2, Exponent(Rat(1, 5)));
  d.set_tangent(1, Exponent(Rat(1, 3)));
  d.set_tangent(2, Exponent(Rat(1, 7)));
  DivisorLedger r = restrict(d, 1, 2);
  CHECK(r.live() == std::set<std::size_t>{1});
  CHECK(r.tangent(1) == Exponent(Rat(1, 5) + Rat(1, 3) + Rat(1, 7)));
  CHECK(restrict(DivisorLedger(3), 1, 3).total().is_zero());
}

TEST_CASE("restriction of a three-coordinate ledger merges the diagonals") {
  RootDatum g2 = standard("G2");
  std::mt19937 rng(42);
  QForm q = qform_from_gram(g2, oracle::random_invariant_gram(g2, rng));
  IntVector l = int_vector({1, 0}), m = int_vector({2, -1}), n = int_vector({-1, 3});
  DivisorLedger r = restrict(ledger_for_components(q, {l, m, n}), 1, 2);
  CHECK(r.pair(1, 3) == q.kappa(l, n) + q.kappa(m, n));
  CHECK(r.pair(1, 3) == q.kappa(add(l, m), n));
  CHECK(r.tangent(1) == q.value(add(l, m)));
}

TEST_CASE("restriction errors") {
  DivisorLedger d(3);
  CHECK_THROWS_AS(restrict(d, 2, 2), DomainError);
  DivisorLedger r = restrict(d, 1, 2);
  CHECK_THROWS_AS(restrict(r, 2, 3), DomainError);
  CHECK_THROWS(d.pair(1, 4));
}

TEST_CASE("verification on sampled forms") {
  std::mt19937 rng(43);
  for (int t = 0; t < 100; ++t) {
    QForm q = sample_form(rng);
    const std::size_t r = q.datum().rank;
    IntVector l = oracle::random_vector(r, 5, rng), m = oracle::random_vector(r, 5, rng), n = oracle::random_vector(r, 5, rng);
    CHECK(verify_bilinearity(q, l, m, n));
    CHECK(verify_quadratic(q, l, m));
  }
  QForm triv = trivial_qform(standard("SL2"));
  CHECK(verify_bilinearity(triv, int_vector({1}), int_vector({2}), int_vector({3})));
  CHECK(verify_quadratic(triv, int_vector({1}), int_vector({2})));
}

TEST_CASE("tampered ledgers are caught") {
  std::mt19937 rng(44);
  const Exponent bump(Rat(1, 11));
  for (int t = 0; t < 60; ++t) {
    QForm q = sample_form(rng);
    const std::size_t r = q.datum().rank;
    IntVector l = oracle::random_vector(r, 5, rng), m = oracle::random_vector(r, 5, rng), n = oracle::random_vector(r, 5, rng);
    DivisorLedger three = ledger_for_components(q, {l, m, n});
    std::size_t i = 1 + rng() % 3, j = 1 + rng() % 3;
    if (i == j)
      three.set_tangent(i, three.tangent(i) + bump);
    else
      three.set_pair(i, j, three.pair(i, j) + bump);
    CHECK_FALSE(verify_bilinearity(three, q, l, m, n));

    DivisorLedger four = ledger_for_components(q, {l, m, l, m});
    i = 1 + rng() % 4;
    j = 1 + rng() % 4;
    if (i == j)
      four.set_tangent(i, four.tangent(i) + bump);
    else
      four.set_pair(i, j, four.pair(i, j) + bump);
    CHECK_FALSE(verify_quadratic(four, q, l, m));
  }
}

TEST_CASE("restriction is confluent and preserves total mass") {
  std::mt19937 rng(45);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 4 + rng() % 2;
    DivisorLedger d(n);
    for (std::size_t i = 1; i <= n; ++i) {
      d.set_tangent(i, Exponent(Rat(static_cast<long>(rng() % 13), 13), Rat(static_cast<long>(rng() % 5) - 2)));
      for (std::size_t j = i + 1; j <= n; ++j) d.set_pair(i, j, Exponent(Rat(static_cast<long>(rng() % 17), 17)));
    }
    DivisorLedger ab = restrict(restrict(d, 1, 2), 3, 4);
    DivisorLedger ba = restrict(restrict(d, 3, 4), 1, 2);
    CHECK(ab == ba);
    CHECK(ab.total() == d.total());
    CHECK(restrict(d, 2, 4).total() == d.total());
  }
}
