#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tdual/rootdata.hpp"

using namespace tdual;

namespace {

const std::vector<std::string> kPresets = {"SL2", "PGL2", "GL2", "SL3", "PGL3", "GL3", "SL4", "PGL4",
                                           "Sp4", "SO5",  "G2",  "T1",  "T2",   "SL2xT1", "SL2xPGL2"};

RootDatum cartan_sc(std::initializer_list<std::initializer_list<long>> a) { return oracle::simply_connected(IntMatrix(a)); }

}  // namespace

TEST_CASE("preset SL2") {
  RootDatum rd = standard("SL2");
  CHECK(rd.rank == 1);
  CHECK(rd.cartan() == IntMatrix{{2}});
  CHECK(rd.simple_roots == IntMatrix{{2}});
  CHECK(rd.simple_coroots == IntMatrix{{1}});
}

TEST_CASE("preset GL2 and PGL2") {
  RootDatum gl = standard("GL2");
  CHECK(gl.rank == 2);
  CHECK(gl.simple_roots == IntMatrix{{1, -1}});
  CHECK(gl.simple_coroots == IntMatrix{{1, -1}});
  RootDatum pgl = standard("PGL2");
  CHECK(pgl.rank == 1);
  CHECK(pgl.simple_coroots == IntMatrix{{2}});
  CHECK(pgl.simple_roots == IntMatrix{{1}});
}

TEST_CASE("unknown labels are usage errors") {
  CHECK_THROWS_AS(standard("XX"), UsageError);
  CHECK_THROWS_AS(standard("SL1"), UsageError);
  CHECK_THROWS_AS(standard(""), UsageError);
}

TEST_CASE("malformed data fail validation") {
  RootDatum rd;
  rd.rank = 1;
  rd.simple_roots = IntMatrix{{1}};
  rd.simple_coroots = IntMatrix{{1}};
  CHECK_THROWS_AS(validate(rd), RootDatumError);
  rd.simple_roots = IntMatrix{{2, 0}};
  CHECK_THROWS(validate(rd));
}

TEST_CASE("Weyl group orders") {
  CHECK(weyl_group(standard("SL2")).order() == 2);
  CHECK(weyl_group(standard("SL3")).order() == 6);
  CHECK(weyl_group(standard("G2")).order() == 12);
  CHECK(weyl_group(standard("Sp4")).order() == 8);
  CHECK(weyl_group(standard("SL4")).order() == 24);
  CHECK(weyl_group(standard("T2")).order() == 1);
  // B3, C3, D4 from their Cartan matrices
  CHECK(weyl_group(cartan_sc({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}})).order() == 48);
  CHECK(weyl_group(cartan_sc({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}})).order() == 48);
  CHECK(weyl_group(cartan_sc({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}})).order() == 192);
  CHECK(weyl_group(cartan_sc({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}})).order() == 1152);
}

TEST_CASE("Weyl group order agrees with matrix closure") {
  for (const auto& label : kPresets) {
    RootDatum rd = standard(label);
    CHECK_MESSAGE(weyl_group(rd).order() == oracle::weyl_order(rd), label);
  }
}

TEST_CASE("root systems agree with the reflection closure") {
  for (const auto& label : kPresets) {
    RootDatum rd = standard(label);
    RootSystem rs = root_system(rd);
    oracle::Roots o = oracle::roots(rd);
    CHECK(rs.size() == o.roots.size());
    CHECK(rs.two_rho == o.two_rho);
    CHECK(rs.two_rho_check == o.two_rho_check);
    for (std::size_t n = 0; n < o.roots.size(); ++n) {
      auto idx = rs.find_root(o.roots[n]);
      REQUIRE(idx);
      CHECK(rs.coroots[*idx] == o.coroots[n]);
    }
  }
}

TEST_CASE("two rho pairs to 2 with every simple coroot") {
  for (const auto& label : kPresets) {
    RootDatum rd = standard(label);
    IntVector two_rho = root_system(rd).two_rho;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) CHECK(dot(two_rho, rd.coroot(i)) == 2);
  }
}

TEST_CASE("parity of two rho is constant on coroot cosets") {
  std::mt19937 rng(21);
  for (const auto& label : kPresets) {
    RootDatum rd = standard(label);
    IntVector two_rho = root_system(rd).two_rho;
    for (int t = 0; t < 100; ++t) {
      IntVector l = oracle::random_vector(rd.rank, 9, rng);
      IntVector m = l;
      for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) m = add(m, scale(Int(static_cast<long>(rng() % 7) - 3), rd.coroot(i)));
      CHECK(oracle::imod(dot(two_rho, l), 2) == oracle::imod(dot(two_rho, m), 2));
    }
  }
}

TEST_CASE("dominance examples") {
  RootDatum sl2 = standard("SL2");
  CHECK(dominance_leq(sl2, int_vector({0}), int_vector({1})) == Dominance::less_equal);
  RootDatum sl3 = standard("SL3");
  CHECK(dominance_leq(sl3, int_vector({1, 0}), int_vector({0, 1})) == Dominance::incomparable);
  CHECK(dominance_leq(sl3, int_vector({2, -1}), int_vector({2, -1})) == Dominance::equal);
}

TEST_CASE("dominance is a partial order on samples") {
  std::mt19937 rng(22);
  for (const std::string label : {"SL3", "Sp4", "G2", "GL2"}) {
    RootDatum rd = standard(label);
    auto leq = [&](const IntVector& a, const IntVector& b) {
      Dominance d = dominance_leq(rd, a, b);
      return d == Dominance::less_equal || d == Dominance::equal;
    };
    for (int t = 0; t < 150; ++t) {
      IntVector a = oracle::random_vector(rd.rank, 3, rng);
      IntVector b = a, c = a;
      for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
        b = add(b, scale(Int(static_cast<long>(rng() % 3)), rd.coroot(i)));
        c = add(c, scale(Int(static_cast<long>(rng() % 3)), rd.coroot(i)));
      }
      CHECK(leq(a, a));
      if (leq(a, b) && leq(b, a)) CHECK(a == b);
      if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
      CHECK(leq(a, b));
    }
  }
}

TEST_CASE("fundamental groups") {
  CHECK(pi1(standard("SL2")).is_trivial());
  CHECK(pi1(standard("PGL2")) == FGAbelianGroup({Int(2)}));
  FGAbelianGroup z = pi1(standard("GL2"));
  CHECK(z.free_rank() == 1);
  CHECK(z.invariant_factors().size() == 1);
  CHECK(pi1(standard("PGL3")) == FGAbelianGroup({Int(3)}));
}

TEST_CASE("orbit and semi-infinite dimensions") {
  RootDatum sl2 = standard("SL2");
  CHECK(orbit_dim(sl2, int_vector({1})) == 2);
  CHECK(orbit_dim(sl2, int_vector({0})) == 0);
  CHECK(sib_dim(sl2, int_vector({1}), int_vector({0})) == 1);
  CHECK_THROWS_AS(orbit_dim(sl2, int_vector({-1})), DomainError);
}

TEST_CASE("dual Coxeter numbers and the pairing") {
  DualCoxeter a1 = dual_coxeter_and_iota(standard("SL2"));
  CHECK(a1.h_check == 2);
  // iota(coroot) = root
  CHECK(a1.iota == RatMatrix{{2}});
  CHECK(bilinear(a1.iota, int_vector({1}), int_vector({1})) == 2);
  CHECK(dual_coxeter_and_iota(standard("SL3")).h_check == 3);
  CHECK(dual_coxeter_and_iota(standard("Sp4")).h_check == 3);
  CHECK(dual_coxeter_and_iota(standard("G2")).h_check == 4);
  CHECK_THROWS_AS(dual_coxeter_and_iota(standard("SL2xSL2")), DomainError);
}

TEST_CASE("normalized Killing form gives short coroots length 2") {
  for (const std::string label : {"SL2", "PGL2", "SL3", "Sp4", "SO5", "G2"}) {
    RootDatum rd = standard(label);
    RatMatrix k = normalized_killing(rd);
    RootSystem rs = root_system(rd);
    Rat shortest = -1;
    for (const auto& c : rs.coroots) {
      Rat v = bilinear(k, c, c);
      if (shortest < 0 || v < shortest) shortest = v;
    }
    CHECK_MESSAGE(shortest == 2, label);
  }
}

TEST_CASE("Langlands duality is an involution and swaps pi1 with the center") {
  for (const auto& label : kPresets) {
    RootDatum rd = standard(label);
    CHECK(langlands_dual(langlands_dual(rd)) == rd);
    validate(langlands_dual(rd));
  }
  CHECK(is_adjoint(langlands_dual(standard("SL3"))));
  CHECK(is_simply_connected(langlands_dual(standard("PGL3"))));
}

TEST_CASE("type descriptions") {
  CHECK(describe(standard("SL2")) == "A1 (simply-connected)");
  CHECK(describe(standard("PGL2")) == "A1 (adjoint)");
  CHECK(describe(standard("G2")) == "G2 (simply-connected, adjoint)");
  CHECK(cartan_type(standard("GL2")) == "A1xT1");
  CHECK(cartan_type(standard("Sp4")) == "B2");
}
