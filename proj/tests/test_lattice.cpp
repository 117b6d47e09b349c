#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tdual/lattice.hpp"

using namespace tdual;

namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, long bound, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

void check_smith(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  std::size_t k = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j) CHECK(s.d(i, j) == 0);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    CHECK(s.d(i, i) >= 0);
    if (s.d(i, i) == 0)
      CHECK(s.d(i + 1, i + 1) == 0);
    else
      CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
  }
}

}  // namespace

TEST_CASE("smith form of diag(2,3)") {
  IntMatrix m{{2, 0}, {0, 3}};
  SmithForm s = smith_normal_form(m);
  CHECK(s.d == IntMatrix{{1, 0}, {0, 6}});
  check_smith(m);
}

TEST_CASE("smith form of small fixed matrices") {
  CHECK(smith_normal_form(IntMatrix::identity(2)).d == IntMatrix::identity(2));
  CHECK(smith_normal_form(IntMatrix{{2}}).d == IntMatrix{{2}});
  check_smith(IntMatrix{{0, 0}, {0, 0}});
  check_smith(IntMatrix{{4, 6, 8}, {2, 2, 2}});
}

TEST_CASE("smith form on random matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    check_smith(random_matrix(r, c, 9, rng));
  }
}

TEST_CASE("hermite form is invariant under unimodular row operations") {
  std::mt19937 rng(12);
  for (int t = 0; t < 100; ++t) {
    IntMatrix m = random_matrix(3, 3, 6, rng);
    IntMatrix u = IntMatrix::identity(3);
    u(0, 1) = static_cast<long>(rng() % 5) - 2;
    u(2, 0) = static_cast<long>(rng() % 5) - 2;
    u.swap_rows(1, 2);
    CHECK(hermite_normal_form(u * m) == hermite_normal_form(m));
  }
}

TEST_CASE("kernel mod N examples") {
  CHECK(kernel_mod(IntMatrix{{2}}, Int(6)) == Sublattice(1, IntMatrix{{3}}));
  CHECK(kernel_mod(IntMatrix(1, 3), Int(5)) == Sublattice::full(3));
  CHECK(kernel_mod(IntMatrix::identity(2), Int(1)) == Sublattice::full(2));
  CHECK(kernel_mod(IntMatrix{{1, 1}}, std::nullopt) == Sublattice(2, IntMatrix{{1, -1}}));
}

TEST_CASE("kernel mod N agrees with brute force membership") {
  std::mt19937 rng(13);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 3, c = 1 + rng() % 2;
    IntMatrix m = random_matrix(r, c, 7, rng);
    Int n = 1 + static_cast<long>(rng() % 12);
    Sublattice k = kernel_mod(m, n);
    for (std::size_t i = 0; i < k.rank(); ++i) CHECK(oracle::in_kernel_mod(m, k.basis().row(i), n));
    oracle::for_each_in_box(c, 8, [&](const IntVector& x) { CHECK(k.contains(x) == oracle::in_kernel_mod(m, x, n)); });
  }
}

TEST_CASE("saturation examples") {
  CHECK(saturation(Sublattice(2, IntMatrix{{2, 0}})) == Sublattice(2, IntMatrix{{1, 0}}));
  CHECK(saturation(Sublattice::full(2)) == Sublattice::full(2));
  CHECK(saturation(Sublattice(2, IntMatrix{{2, 2}})) == Sublattice(2, IntMatrix{{1, 1}}));
}

TEST_CASE("saturation is idempotent and contains its input") {
  std::mt19937 rng(14);
  for (int t = 0; t < 100; ++t) {
    Sublattice s(3, random_matrix(1 + rng() % 2, 3, 6, rng));
    Sublattice sat = saturation(s);
    CHECK(saturation(sat) == sat);
    CHECK(sat.contains(s));
    CHECK(sat.rank() == s.rank());
    CHECK(index_in(s, sat) > 0);
  }
}

TEST_CASE("quotient group examples") {
  CHECK(quotient_group(Sublattice(2, IntMatrix{{2, 0}, {0, 3}})) == FGAbelianGroup({Int(6)}));
  CHECK(quotient_group(Sublattice::full(1)).is_trivial());
  FGAbelianGroup z = quotient_group(Sublattice(2, IntMatrix{{1, 0}}));
  CHECK(z.free_rank() == 1);
  CHECK(z.invariant_factors() == std::vector<Int>{0});
}

TEST_CASE("quotient order matches point counting for full rank sublattices of Z^2") {
  std::mt19937 rng(15);
  for (int t = 0; t < 80; ++t) {
    IntMatrix b = random_matrix(2, 2, 5, rng);
    Int det = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
    if (det == 0) continue;
    Int d = abs(det);
    // x in span iff x adj(B) = 0 mod det
    IntMatrix adj{{0, 0}, {0, 0}};
    adj(0, 0) = b(1, 1);
    adj(0, 1) = -b(0, 1);
    adj(1, 0) = -b(1, 0);
    adj(1, 1) = b(0, 0);
    long hits = 0;
    for (long x = 0; x < d.get_si(); ++x)
      for (long y = 0; y < d.get_si(); ++y) {
        IntVector v{Int(x), Int(y)};
        if (oracle::in_kernel_mod(adj.transpose(), v, d)) ++hits;
      }
    auto order = quotient_group(Sublattice(2, b)).order();
    REQUIRE(order);
    CHECK(*order * hits == d * d);
  }
}

TEST_CASE("intersection agrees with membership") {
  std::mt19937 rng(16);
  for (int t = 0; t < 40; ++t) {
    Sublattice a(2, random_matrix(2, 2, 4, rng)), b(2, random_matrix(1 + rng() % 2, 2, 4, rng));
    Sublattice c = intersect(a, b);
    oracle::for_each_in_box(2, 10, [&](const IntVector& x) { CHECK(c.contains(x) == (a.contains(x) && b.contains(x))); });
  }
}

TEST_CASE("finitely generated abelian group arithmetic") {
  FGAbelianGroup g({Int(2), Int(6)});
  CHECK(g.order() == Int(12));
  CHECK(g.reduce(int_vector({3, -1})) == int_vector({1, 5}));
  CHECK(g.power(2).order() == Int(144));
  CHECK(g.to_string() == "Z/2 + Z/6");
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS((IntMatrix::from_rows({int_vector({1, 2}), int_vector({3})})), ShapeError);
  CHECK_THROWS_AS((IntMatrix{{1}} * IntMatrix{{1, 2}, {3, 4}}), ShapeError);
}
