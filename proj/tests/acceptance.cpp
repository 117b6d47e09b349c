// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tdual/characters.hpp"
#include "tdual/divisor_calc.hpp"
#include "tdual/grcomb.hpp"

using namespace tdual;

namespace {

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (failures == 0) first = what;
      ++failures;
    }
  }
};

int failed_criteria = 0;

void criterion(const std::string& id, const std::string& title, double limit_s, const std::function<void(Tally&)>& body) {
  Tally t;
  auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool slow = limit_s > 0 && secs > limit_s;
  bool ok = t.failures == 0 && !slow;
  if (!ok) ++failed_criteria;
  std::ostringstream line;
  line << (ok ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << t.checks << " checks, " << std::fixed;
  line.precision(2);
  line << secs << " s";
  if (limit_s > 0) line << ", limit " << limit_s << " s";
  line << ")";
  if (t.failures) line << " " << t.failures << " failed, first: " << t.first;
  if (slow) line << " over time limit";
  std::cout << line.str() << std::endl;
}

bool iso(const RootDatum& a, const RootDatum& b) { return isomorphic(a, b).status == IsoStatus::iso; }

// Every dual built in criteria 1-5, revisited by criterion 6.
std::deque<std::pair<std::string, TwistedDual>> produced;  // stable references

const TwistedDual& keep(const std::string& tag, TwistedDual td) {
  produced.emplace_back(tag, std::move(td));
  return produced.back().second;
}

RatMatrix one_by_one(const Rat& x) {
  RatMatrix m(1, 1);
  m(0, 0) = x;
  return m;
}

Sublattice line(const Int& g) {
  IntMatrix m(1, 1);
  m(0, 0) = g;
  return Sublattice(1, m);
}

void ac1(Tally& t) {
  const RootDatum pgl2 = standard("PGL2"), sl2 = standard("SL2");
  for (long r0 = 1; r0 <= 16; ++r0) {
    auto expected = rank1_expected_generators(r0);
    for (long p = 0; p < r0; ++p) {
      if (std::gcd(p, r0) != 1) continue;
      const std::string tag = "r0=" + std::to_string(r0) + " p=" + std::to_string(p);
      Rank1Row row = rank1_table(r0, p);
      t.expect(row.pgl2 == line(expected.first), tag + " PGL2 case split");
      t.expect(row.sl2 == line(expected.second), tag + " SL2 case split");
      for (long n = -4 * r0; n <= 4 * r0; ++n) {
        // kappa(m, n) = q0^{2mn}; SL2 coweight k sits at 2k with kappa = q0^{8kl}
        bool pgl = (2 * n * p) % r0 == 0;
        bool sl = n % 2 == 0 && (8 * (n / 2) * p) % r0 == 0;
        t.expect(row.pgl2.contains(int_vector({n})) == pgl, tag + " PGL2 brute force at " + std::to_string(n));
        t.expect(row.sl2.contains(int_vector({n})) == sl, tag + " SL2 brute force at " + std::to_string(n));
      }
      // the same forms through the general construction
      const TwistedDual& a = keep("rank1 PGL2 " + tag, twisted_dual(qform_from_gram(pgl2, one_by_one(Rat(2 * p, r0)))));
      t.expect(a.weight_sublattice == row.pgl2, tag + " PGL2 twisted dual lattice");
      const TwistedDual& b = keep("rank1 SL2 " + tag, twisted_dual(qform_from_gram(sl2, one_by_one(Rat(8 * p, r0)))));
      t.expect(b.weight_sublattice.rank() == 1 && line(2 * b.weight_sublattice.basis()(0, 0)) == row.sl2,
               tag + " SL2 twisted dual lattice");
    }
  }
}

const std::vector<std::string> kAc2 = {"SL2", "PGL2", "GL2", "SL3", "Sp4", "G2"};

void ac2(Tally& t) {
  for (const auto& label : kAc2) {
    RootDatum rd = standard(label);
    const TwistedDual& once = keep("trivial " + label, twisted_dual(trivial_qform(rd)));
    t.expect(iso(once.datum, langlands_dual(rd)), label + ": dual of trivial form vs Langlands dual");
    const TwistedDual& twice = keep("trivial twice " + label, twisted_dual(trivial_qform(once.datum)));
    t.expect(iso(twice.datum, rd), label + ": double application vs source");
  }
}

void ac3(Tally& t) {
  for (const std::string label : {"SL2", "PGL2", "SL3", "Sp4"}) {
    RootDatum rd = standard(label);
    for (long d = 1; d <= 2; ++d)
      for (long n = 1; n <= 12; ++n) {
        std::string tag = label + " d=" + std::to_string(d) + " N=" + std::to_string(n);
        const TwistedDual& a = keep("fl " + tag, fl_dual(rd, d, n));
        const TwistedDual& b = keep("fl form " + tag, twisted_dual(fl_qform(rd, d, n)));
        t.expect(iso(a.datum, b.datum), tag + " AGREE");
      }
  }
}

void ac4(Tally& t) {
  for (const std::string label : {"SL2", "SL3", "Sp4"}) {
    RootDatum rd = standard(label);
    std::vector<Int> f = standard_f(rd);
    for (int doubled = 0; doubled < 2; ++doubled) {
      std::vector<Int> g = f;
      if (doubled)
        for (auto& x : g) x *= 2;
      CartanDatum cd = cartan_datum(rd, g);
      for (long l = 1; l <= 12; ++l) {
        std::string tag = label + (doubled ? " 2f" : " f") + " l=" + std::to_string(l);
        const TwistedDual& a = keep("lusztig " + tag, lusztig_dual(cd, l));
        const TwistedDual& b = keep("lusztig form " + tag, twisted_dual(lusztig_qform(cd, l), KernelMode::coroot));
        t.expect(iso(a.datum, b.datum), tag + " AGREE");
      }
    }
  }
}

void ac5(Tally& t) {
  for (const std::string label : {"SL2", "PGL2", "SL3"}) {
    RootDatum rd = standard(label);
    for (long n = 1; n <= 8; ++n) {
      std::string tag = label + " N=" + std::to_string(n);
      QuantumPair qp = quantum_dual_pair(rd, Rat(1, n) * normalized_killing(rd));
      t.expect(qp.verified, tag + ": " + qp.report);
      keep("quantum left " + tag, qp.left);
      keep("quantum right " + tag, qp.right);
    }
  }
}

void ac6(Tally& t) {
  t.expect(!produced.empty(), "no duals were recorded");
  for (const auto& [tag, td] : produced) {
    try {
      validate(td.datum);
      t.expect(true, tag);
    } catch (const Error& e) {
      t.expect(false, tag + ": " + e.what());
      continue;
    }
    const RootDatum& src = td.source;
    const IntMatrix& basis = td.weight_sublattice.basis();
    for (std::size_t k = 0; k < td.kept.size(); ++k) {
      const std::size_t i = td.kept[k];
      const Int& r = *td.multipliers[i];
      IntVector root = scale(r, src.coroot(i));
      t.expect(td.weight_sublattice.contains(root), tag + ": r * coroot outside the lattice");
      t.expect(td.to_source(td.datum.root(k)) == root, tag + ": dual root is not r * coroot");
      for (std::size_t b = 0; b < basis.rows(); ++b) {
        Int v = dot(src.root(i), basis.row(b));
        t.expect(v % r == 0, tag + ": root / r not integral on the lattice");
        t.expect(td.datum.simple_coroots(k, b) * r == v, tag + ": dual coroot is not root / r");
      }
    }
    RootSystem rs = root_system(td.datum);
    std::set<IntVector> all(rs.roots.begin(), rs.roots.end());
    for (const auto& b : rs.roots) t.expect(all.count(scale(Int(2), b)) == 0, tag + ": not reduced");
  }
}

const std::vector<std::string> kRankTwo = {"SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "SO5", "G2", "T1", "T2", "SL2xT1", "SL2xSL2", "SL2xPGL2"};

void ac7(Tally& t) {
  std::mt19937 rng(20240607);
  const Exponent bump(Rat(1, 11));
  for (int f = 0; f < 200; ++f) {
    RootDatum rd = standard(kRankTwo[f % kRankTwo.size()]);
    RatMatrix g1 = f % 4 == 0 ? oracle::random_invariant_gram(rd, rng, 2, 3) : RatMatrix(rd.rank, rd.rank);
    QForm q = qform_from_gram(rd, oracle::random_invariant_gram(rd, rng), g1);
    const std::string tag = "form " + std::to_string(f) + " on " + rd.name;
    for (int s = 0; s < 5; ++s) {
      IntVector l = oracle::random_vector(rd.rank, 5, rng), m = oracle::random_vector(rd.rank, 5, rng),
                n = oracle::random_vector(rd.rank, 5, rng);
      t.expect(q.value(add(l, m)) == q.value(l) + q.value(m) + q.kappa(l, m), tag + ": quadratic law");
      t.expect(q.kappa(l, m) == q.kappa(m, l), tag + ": symmetry");
      t.expect(q.kappa(add(l, m), n) == q.kappa(l, n) + q.kappa(m, n), tag + ": bilinearity");
      for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
        t.expect(q.value(reflect_coweight(rd, i, l)) == q.value(l), tag + ": W-invariance of Q");
        t.expect(q.kappa(reflect_coweight(rd, i, l), reflect_coweight(rd, i, m)) == q.kappa(l, m), tag + ": W-invariance of kappa");
        t.expect(epsilon_defect(q, rd.coroot(i), l).is_zero(), tag + ": epsilon defect");
      }
      t.expect(verify_bilinearity(q, l, m, n), tag + ": ledger bilinearity");
      t.expect(verify_quadratic(q, l, m), tag + ": ledger quadratic");

      DivisorLedger three = ledger_for_components(q, {l, m, n});
      std::size_t i = 1 + rng() % 3, j = 1 + rng() % 3;
      if (i == j)
        three.set_tangent(i, three.tangent(i) + bump);
      else
        three.set_pair(i, j, three.pair(i, j) + bump);
      t.expect(!verify_bilinearity(three, q, l, m, n), tag + ": tampered three-point ledger accepted");
      DivisorLedger four = ledger_for_components(q, {l, m, l, m});
      i = 1 + rng() % 4;
      j = 1 + rng() % 4;
      if (i == j)
        four.set_tangent(i, four.tangent(i) + bump);
      else
        four.set_pair(i, j, four.pair(i, j) + bump);
      t.expect(!verify_quadratic(four, q, l, m), tag + ": tampered four-point ledger accepted");
    }
  }
}

void ac8(Tally& t) {
  for (const std::string label : {"SL2", "SL3", "Sp4", "G2"}) {
    RootDatum rd = standard(label);
    DetForm d = det_form(rd, adjoint_weights(rd));
    t.expect(d.is_sf, label + ": adjoint is_sf");
    t.expect(d.zeta_integral, label + ": zeta integral");
    oracle::for_each_in_box(rd.rank, 4, [&](const IntVector& x) { t.expect(d.r(x).get_den() == 1, label + ": R integral"); });
  }
  DetForm std2 = det_form(standard("GL2"), {int_vector({1, 0}), int_vector({0, 1})});
  t.expect(!std2.is_sf, "GL2 standard representation reported sf");
}

void ac9(Tally& t) {
  std::map<std::pair<std::string, IntVector>, bool> char_checked;
  for (const std::string label : {"SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "SO5", "G2"}) {
    RootDatum rd = standard(label);
    const IntVector two_rho = root_system(rd).two_rho;
    std::vector<std::pair<std::string, QForm>> forms = {{"trivial", trivial_qform(rd)},
                                                        {"level 1/2", fl_qform(rd, 1, 2)},
                                                        {"level 1/3", fl_qform(rd, 1, 3)}};
    for (const auto& [fname, q] : forms) {
      TwistedDual dual = twisted_dual(q);
      const std::string key = label + " " + fname;
      std::vector<IntVector> dom;
      oracle::for_each_in_box(rd.rank, 16, [&](const IntVector& x) {
        if (is_dominant_coweight(rd, x) && dual.weight_sublattice.contains(x) && dot(two_rho, x) <= 16) dom.push_back(x);
      });
      for (const auto& l : dom)
        for (const auto& m : dom) {
          if (dot(two_rho, add(l, m)) > 16) continue;
          const std::string tag = key + " " + to_string(l) + " " + to_string(m);
          SatakeReport r = satake_prediction(q, dual, l, m);
          t.expect(r.top_multiplicity == 1, tag + ": multiplicity of the top weight");
          t.expect(r.all_below, tag + ": constituent above the top weight");
          t.expect(r.fibers_ok, tag + ": fiber dimension");
          for (const IntVector& w : {*dual.to_dual(l), *dual.to_dual(m)}) {
            auto k = std::make_pair(key, w);
            if (char_checked.count(k)) continue;
            char_checked[k] = true;
            t.expect(irreducible_character(dual.datum, w).multiplicities == oracle::weyl_character(dual.datum, w),
                     key + " " + to_string(w) + ": Freudenthal vs Weyl formula");
          }
          for (const auto& c : r.constituents) {
            auto k = std::make_pair(key, c.weight);
            if (char_checked.count(k)) continue;
            char_checked[k] = true;
            t.expect(irreducible_character(dual.datum, c.weight).multiplicities == oracle::weyl_character(dual.datum, c.weight),
                     key + " " + to_string(c.weight) + ": Freudenthal vs Weyl formula");
          }
        }
    }
  }
}

void ac10(Tally& t) {
  std::mt19937 rng(7);
  for (const std::string label : {"SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "SO5", "G2", "SL2xT1", "SL2xPGL2"}) {
    RootDatum rd = standard(label);
    const IntVector two_rho = root_system(rd).two_rho;
    QForm triv = trivial_qform(rd);
    for (int s = 0; s < 500; ++s) {
      IntVector l = oracle::random_vector(rd.rank, 8, rng), m = oracle::random_vector(rd.rank, 8, rng);
      IntVector l2 = l, m2 = m;
      for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
        l2 = add(l2, scale(Int(static_cast<long>(rng() % 9) - 4), rd.coroot(i)));
        m2 = add(m2, scale(Int(static_cast<long>(rng() % 9) - 4), rd.coroot(i)));
      }
      t.expect(oracle::imod(dot(two_rho, l), 2) == oracle::imod(dot(two_rho, l2), 2), label + ": parity on a coroot coset");
      t.expect(braiding_signs(triv, l, m).geometric_sign == braiding_signs(triv, l2, m2).geometric_sign,
               label + ": sign differs within pi1 classes");
    }
    QForm h = half_forms_qform(rd);
    t.expect(kernel(h, KernelMode::full) == Sublattice::full(rd.rank), label + ": half-forms kernel");
    for (int s = 0; s < 50; ++s) {
      IntVector l = oracle::random_vector(rd.rank, 8, rng), m = oracle::random_vector(rd.rank, 8, rng);
      t.expect(h.kappa(l, m).is_zero(), label + ": half-forms kappa nontrivial");
    }
    TwistedDual td = twisted_dual(h);
    for (const auto& r : td.multipliers) t.expect(r == Int(1), label + ": half-forms multiplier");
    t.expect(iso(td.datum, langlands_dual(rd)), label + ": half-forms dual vs Langlands dual");
  }
}

void ac11(Tally& t) {
  std::mt19937 rng(11);
  for (int s = 0; s < 30; ++s) {
    FGAbelianGroup a({Int(2 + static_cast<long>(rng() % 11))});
    std::size_t rank = 1 + rng() % 2;
    Homomorphism h{a, {}};
    for (std::size_t j = 0; j < rank; ++j) h.images.push_back(a.reduce(oracle::random_vector(1, 12, rng)));
    for (std::size_t n = 2; n <= 3; ++n) {
      ComponentMapping m = factorizable_function(h, n);
      t.expect(is_factorizable(m, rank == 1 ? 4 : 2), "homomorphism not factorizable");
      t.expect(reconstruct_homomorphism(m).images == h.images, "reconstruction of a homomorphism");
    }
  }

  // All n = 2 mappings on Z with |l|, |u| <= 6 into Z/k satisfying the
  // factorization constraints form the kernel mod k of a linear system; each
  // generator must reconstruct to a homomorphism.
  const long b = 6, side = 2 * b + 1;
  auto var = [&](long l, long u) { return static_cast<std::size_t>((l + b) * side + (u + b)); };
  const std::size_t nvars = static_cast<std::size_t>(side * side);
  IntMatrix c(0, nvars);
  for (long l = -b; l <= b; ++l)
    for (long u = -b; u <= b; ++u) {
      IntVector r(nvars, 0);
      r[var(l, u)] += 1;
      r[var(l, 0)] -= 1;
      r[var(u, 0)] -= 1;
      c.append_row(r);
      if (l < b && u > -b) {
        IntVector e(nvars, 0);
        e[var(l, u)] += 1;
        e[var(l + 1, u - 1)] -= 1;
        c.append_row(e);
      }
    }
  for (long k = 1; k <= 12; ++k) {
    FGAbelianGroup zk = k == 1 ? FGAbelianGroup() : FGAbelianGroup({Int(k)});
    Sublattice sols = kernel_mod(c, Int(k));
    for (std::size_t g = 0; g < sols.rank(); ++g) {
      IntVector x = sols.basis().row(g);
      if (k == 1) continue;
      ComponentMapping m;
      m.target = zk;
      m.n = 2;
      m.rank = 1;
      m.value = [&, x](const ComponentIndex& comp) { return zk.reduce(IntVector{x[var(comp[0][0].get_si(), comp[1][0].get_si())]}); };
      t.expect(is_factorizable(m, b / 2), "Z/" + std::to_string(k) + ": constraint solution not factorizable");
      ComponentMapping hm = factorizable_function(reconstruct_homomorphism(m), 2);
      bool same = true;
      for (long l = -b; l <= b; ++l)
        for (long u = -b; u <= b; ++u)
          if (zk.reduce(IntVector{x[var(l, u)]}) != hm.value({int_vector({l}), int_vector({u})})) same = false;
      t.expect(same, "Z/" + std::to_string(k) + ": factorizable mapping is not a homomorphism");
    }
  }

  ComponentIndex a{int_vector({0}), int_vector({4}), int_vector({-1})}, bb{int_vector({2}), int_vector({2}), int_vector({-1})};
  auto p = incident(a, bb);
  t.expect(p && p->to_string() == "{1,2}|{3}", "incidence of (0,4,-1) and (2,2,-1)");
  ComponentIndex one{int_vector({1}), int_vector({1}), int_vector({1})};
  auto q = incident(one, a);
  t.expect(q && q->to_string() == "{1,2,3}", "incidence of (1,1,1) and (0,4,-1)");
}

}  // namespace

int main() {
  criterion("AC1", "rank one case analysis", 1.0, ac1);
  criterion("AC2", "trivial form duality", 5.0, ac2);
  criterion("AC3", "level construction agreement", 30.0, ac3);
  criterion("AC4", "Lusztig agreement", 30.0, ac4);
  criterion("AC5", "quantum Langlands pairs", 30.0, ac5);
  criterion("AC6", "validity of all produced duals", 0, ac6);
  criterion("AC7", "form laws and divisor ledger", 0, ac7);
  criterion("AC8", "determinant forms", 0, ac8);
  criterion("AC9", "Satake predictions", 60.0, ac9);
  criterion("AC10", "sign well-definedness and half-forms", 0, ac10);
  criterion("AC11", "factorizable functions and incidence", 0, ac11);
  std::cout << (failed_criteria == 0 ? "all criteria passed" : std::to_string(failed_criteria) + " criteria failed") << std::endl;
  return failed_criteria == 0 ? 0 : 1;
}
