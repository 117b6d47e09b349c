#include "tdual/dualgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tdual {

IntVector TwistedDual::to_source(const IntVector& coords) const {
  const IntMatrix& b = weight_sublattice.basis();
  if (coords.size() != b.rows()) throw ShapeError("to_source: coordinate length mismatch");
  IntVector out(source.rank, 0);
  for (std::size_t j = 0; j < b.rows(); ++j)
    for (std::size_t c = 0; c < source.rank; ++c) out[c] += coords[j] * b(j, c);
  return out;
}

std::optional<IntVector> TwistedDual::to_dual(const IntVector& coweight) const {
  return weight_sublattice.coordinates(coweight);
}

TwistedDual assemble_dual(const RootDatum& rd, const Sublattice& lattice,
                          const std::vector<std::optional<Int>>& multipliers, const std::string& name) {
  if (multipliers.size() != rd.semisimple_rank()) throw ShapeError("one multiplier per simple coroot is required");
  TwistedDual td;
  td.source = rd;
  td.weight_sublattice = lattice;
  td.multipliers = multipliers;
  const IntMatrix& basis = lattice.basis();
  const std::size_t m = lattice.rank();
  td.datum.name = name;
  td.datum.rank = m;
  td.datum.simple_roots = IntMatrix(0, m);
  td.datum.simple_coroots = IntMatrix(0, m);
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
    if (!multipliers[i]) {
      td.dropped.push_back(i);
      continue;
    }
    const Int& r = *multipliers[i];
    if (r <= 0) throw DomainError("multipliers must be positive");
    IntVector root = scale(r, rd.coroot(i));
    auto coords = lattice.coordinates(root);
    if (!coords)
      throw Error("contract violation: " + r.get_str() + " * coroot " + std::to_string(i + 1) + " lies outside the weight lattice");
    IntVector coroot(m);
    for (std::size_t j = 0; j < m; ++j) {
      Int pairing = dot(rd.root(i), basis.row(j));
      if (pairing % r != 0)
        throw Error("contract violation: root " + std::to_string(i + 1) + " / " + r.get_str() +
                    " is not integral on the weight lattice");
      coroot[j] = pairing / r;
    }
    td.kept.push_back(i);
    td.datum.simple_roots.append_row(*coords);
    td.datum.simple_coroots.append_row(coroot);
  }
  validate(td.datum);
  return td;
}

TwistedDual twisted_dual(const QForm& q, KernelMode mode) {
  const RootDatum& rd = q.datum();
  Sublattice lattice = kernel(q, mode);
  std::vector<std::optional<Int>> mult;
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) mult.push_back(q.value(rd.coroot(i)).order());
  std::string name = rd.name.empty() ? "twisted dual" : "twisted dual of " + rd.name;
  TwistedDual td = assemble_dual(rd, lattice, mult, name);

  // The generated roots must be exactly the r-scaled coroots.
  std::set<IntVector> expected, generated;
  RootSystem src = root_system(rd);
  std::set<std::size_t> kept(td.kept.begin(), td.kept.end());
  for (std::size_t n = 0; n < src.size(); ++n) {
    bool supported = true;
    for (std::size_t s = 0; s < src.simple_coords[n].size(); ++s)
      if (src.simple_coords[n][s] != 0 && !kept.count(s)) supported = false;
    if (!supported) continue;
    auto ord = q.value(src.coroots[n]).order();
    if (!ord) throw Error("contract violation: coroot in a kept component has infinite order");
    expected.insert(scale(*ord, src.coroots[n]));
  }
  for (const auto& r : root_system(td.datum).roots) generated.insert(td.to_source(r));
  if (expected != generated) throw Error("contract violation: generated roots differ from the r-scaled coroots");
  return td;
}

Rank1Row rank1_table(const Int& r0, const Int& p) {
  if (r0 < 0) throw DomainError("r0 must be nonnegative (0 = infinite)");
  RatMatrix g0(1, 1), g1(1, 1);
  if (r0 == 0) {
    if (p == 0) throw DomainError("infinite order needs p != 0");
    g1(0, 0) = Rat(2 * p);
  } else {
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), r0.get_mpz_t());
    if (g != 1) throw DomainError("p must be a unit modulo r0");
    g0(0, 0) = Rat(2 * p, r0);
    g0(0, 0).canonicalize();
  }
  Rank1Row row{r0, p, Sublattice(1), Sublattice(1), ""};
  row.pgl2 = kernel(qform_from_gram(standard("PGL2"), g0, g1), KernelMode::full);
  RatMatrix four(1, 1);
  four(0, 0) = 4;
  Sublattice sl = kernel(qform_from_gram(standard("SL2"), four * g0, four * g1), KernelMode::full);
  IntMatrix doubled(sl.rank(), 1);
  for (std::size_t i = 0; i < sl.rank(); ++i) doubled(i, 0) = 2 * sl.basis()(i, 0);
  row.sl2 = Sublattice(1, doubled);
  if (r0 == 0) {
    row.case_label = "infinite";
  } else {
    unsigned long v = mpz_scan1(r0.get_mpz_t(), 0);
    row.case_label = v == 0 ? "odd" : v == 1 ? "ord2=1" : v == 2 ? "ord2=2" : "ord2>=3";
  }
  return row;
}

std::pair<Int, Int> rank1_expected_generators(const Int& r0) {
  if (r0 == 0) return {0, 0};
  unsigned long v = mpz_scan1(r0.get_mpz_t(), 0);
  if (v == 0) return {r0, 2 * r0};
  if (v == 1) return {r0 / 2, r0};
  if (v == 2) return {r0 / 2, r0 / 2};
  return {r0 / 2, r0 / 4};
}

namespace {

void require_irreducible(const RootDatum& rd, const char* what) {
  if (components(rd).size() != 1) throw DomainError(std::string(what) + " requires an irreducible root system");
}

void require_positive(const Int& x, const char* what) {
  if (x <= 0) throw DomainError(std::string(what) + " must be a positive integer");
}

}  // namespace

TwistedDual fl_dual(const RootDatum& rd, const Int& d, const Int& n) {
  require_irreducible(rd, "fl_dual");
  require_positive(d, "d");
  require_positive(n, "N");
  Int h = dual_coxeter_and_iota(rd).h_check;
  IntMatrix k = killing_matrix(rd);
  IntMatrix dk = d * k;
  Sublattice lattice = kernel_mod(dk, 2 * h * n);
  std::vector<std::optional<Int>> mult;
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
    IntVector c = rd.coroot(i);
    Int kcc = 0;
    for (std::size_t a = 0; a < rd.rank; ++a)
      for (std::size_t b = 0; b < rd.rank; ++b) kcc += k(a, b) * c[a] * c[b];
    Rat x(d * kcc, 4 * h * n);
    x.canonicalize();
    mult.push_back(x.get_den());
  }
  std::string name = "FL dual (d=" + d.get_str() + ", N=" + n.get_str() + ")";
  return assemble_dual(rd, lattice, mult, name);
}

QForm fl_qform(const RootDatum& rd, const Int& d, const Int& n) {
  require_irreducible(rd, "fl_qform");
  require_positive(d, "d");
  require_positive(n, "N");
  Int h = dual_coxeter_and_iota(rd).h_check;
  Rat s(d, 2 * h * n);
  s.canonicalize();
  return qform_from_gram(rd, s * to_rational(killing_matrix(rd)));
}

TwistedDual lusztig_dual(const CartanDatum& cd, const Int& l) {
  require_positive(l, "l");
  const RootDatum& rd = cd.rd;
  IntMatrix rows(rd.semisimple_rank(), rd.rank);
  std::vector<std::optional<Int>> mult;
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
    Int g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), cd.f[i].get_mpz_t());
    Int li = l / g;
    mult.push_back(li);
    for (std::size_t j = 0; j < rd.rank; ++j) rows(i, j) = rd.simple_roots(i, j) * g;
  }
  Sublattice lattice = rd.semisimple_rank() == 0 ? Sublattice::full(rd.rank) : kernel_mod(rows, l);
  return assemble_dual(rd, lattice, mult, "Lusztig dual (l=" + l.get_str() + ")");
}

QForm lusztig_qform(const CartanDatum& cd, const Int& l) {
  require_positive(l, "l");
  return qform_from_gram(cd.rd, Rat(1, l) * cartan_datum_gram(cd));
}

std::string to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::iso: return "iso";
    case IsoStatus::none: return "none";
    case IsoStatus::undecided: return "undecided";
  }
  return "none";
}

namespace {

// Columns: simple roots, then a basis of {x in X^* : <x, c> = 0 for all coroots}.
RatMatrix adapted_basis(const RootDatum& rd, const Sublattice& center) {
  const std::size_t n = rd.rank, k = rd.semisimple_rank();
  RatMatrix p(n, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < n; ++r) p(r, i) = Rat(rd.simple_roots(i, r));
  for (std::size_t z = 0; z < center.rank(); ++z)
    for (std::size_t r = 0; r < n; ++r) p(r, k + z) = Rat(center.basis()(z, r));
  return p;
}

std::vector<IntMatrix> unimodular_candidates(std::size_t m, long bound) {
  std::vector<IntMatrix> out;
  if (m == 0) {
    out.emplace_back(0, 0);
    return out;
  }
  if (m == 1) {
    out.push_back(IntMatrix{{1}});
    out.push_back(IntMatrix{{-1}});
    return out;
  }
  out.push_back(IntMatrix::identity(m));
  std::vector<long> entries(m * m, -bound);
  for (;;) {
    IntMatrix g(m, m);
    for (std::size_t i = 0; i < m * m; ++i) g(i / m, i % m) = entries[i];
    Int det = determinant(g);
    if ((det == 1 || det == -1) && g != out.front()) out.push_back(g);
    std::size_t i = 0;
    while (i < entries.size() && ++entries[i] > bound) entries[i++] = -bound;
    if (i == entries.size()) break;
  }
  return out;
}

}  // namespace

IsoResult isomorphic(const RootDatum& d1, const RootDatum& d2, long entry_bound) {
  IsoResult res;
  if (d1.rank != d2.rank) {
    res.reason = "rank " + std::to_string(d1.rank) + " vs " + std::to_string(d2.rank);
    return res;
  }
  if (d1.semisimple_rank() != d2.semisimple_rank()) {
    res.reason = "semisimple rank " + std::to_string(d1.semisimple_rank()) + " vs " + std::to_string(d2.semisimple_rank());
    return res;
  }
  FGAbelianGroup w1 = quotient_group(Sublattice(d1.rank, d1.simple_roots));
  FGAbelianGroup w2 = quotient_group(Sublattice(d2.rank, d2.simple_roots));
  if (!(w1 == w2)) {
    res.reason = "X^*/root lattice " + w1.to_string() + " vs " + w2.to_string();
    return res;
  }
  FGAbelianGroup p1 = pi1(d1), p2 = pi1(d2);
  if (!(p1 == p2)) {
    res.reason = "pi1 " + p1.to_string() + " vs " + p2.to_string();
    return res;
  }
  const std::size_t n = d1.rank, k = d1.semisimple_rank();
  IntMatrix a1 = d1.cartan(), a2 = d2.cartan();
  Sublattice z1 = k == 0 ? Sublattice::full(n) : kernel_mod(d1.simple_coroots, std::nullopt);
  Sublattice z2 = k == 0 ? Sublattice::full(n) : kernel_mod(d2.simple_coroots, std::nullopt);
  auto p1inv = inverse(adapted_basis(d1, z1));
  if (!p1inv) throw Error("isomorphic: roots and central directions do not span");
  RatMatrix q2 = adapted_basis(d2, z2);
  const std::size_t m = n - k;
  auto candidates = unimodular_candidates(m, entry_bound);

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  bool any_perm = false;
  do {
    bool match = true;
    for (std::size_t i = 0; i < k && match; ++i)
      for (std::size_t j = 0; j < k && match; ++j)
        if (a1(i, j) != a2(perm[i], perm[j])) match = false;
    if (!match) continue;
    any_perm = true;
    // Columns of q2 reordered so that column i is root perm[i].
    RatMatrix target = q2;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < n; ++r) target(r, i) = q2(r, perm[i]);
    for (const auto& g : candidates) {
      RatMatrix block = RatMatrix::identity(n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) block(k + i, k + j) = Rat(g(i, j));
      RatMatrix a = target * block * *p1inv;
      bool integral = true;
      for (const auto& v : a.data())
        if (v.get_den() != 1) integral = false;
      if (!integral) continue;
      IntMatrix ai(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) ai(r, c) = a(r, c).get_num();
      Int det = determinant(ai);
      if (det != 1 && det != -1) continue;
      bool ok = true;
      IntMatrix at = ai.transpose();
      for (std::size_t i = 0; i < k && ok; ++i) {
        if (ai.apply(d1.root(i)) != d2.root(perm[i])) ok = false;
        if (at.apply(d2.coroot(perm[i])) != d1.coroot(i)) ok = false;
      }
      if (!ok) continue;
      res.status = IsoStatus::iso;
      res.map = ai;
      res.permutation = perm;
      res.reason = "witness found";
      return res;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!any_perm) {
    res.reason = "Cartan matrices differ under every relabeling";
    return res;
  }
  if (m >= 2) {
    res.status = IsoStatus::undecided;
    res.reason = "no unimodular map with central entries bounded by " + std::to_string(entry_bound);
    return res;
  }
  res.reason = "no unimodular map carries roots to roots and coroots to coroots";
  return res;
}

QuantumPair quantum_dual_pair(const RootDatum& rd, const RatMatrix& b) {
  if (b.rows() != rd.rank || b.cols() != rd.rank) throw ShapeError("b must be rank x rank");
  auto binv = inverse(b);
  if (!binv) throw DomainError("quantum_dual_pair: b is degenerate");
  QuantumPair out;
  out.left = twisted_dual(qform_from_gram(rd, b));
  out.right = twisted_dual(qform_from_gram(langlands_dual(rd), *binv));

  const Sublattice& l = out.left.weight_sublattice;
  const Sublattice& r = out.right.weight_sublattice;
  out.verified = false;
  if (l.rank() != r.rank()) {
    out.report = "weight lattices have different ranks";
    return out;
  }
  const std::size_t m = l.rank();
  out.iso = IntMatrix(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    RatVector image = b.apply(to_rational(l.basis().row(j)));
    IntVector w(image.size());
    for (std::size_t c = 0; c < image.size(); ++c) {
      if (image[c].get_den() != 1) {
        out.report = "b does not map the left lattice integrally";
        return out;
      }
      w[c] = image[c].get_num();
    }
    auto coords = r.coordinates(w);
    if (!coords) {
      out.report = "b(left lattice) is not inside the right lattice";
      return out;
    }
    for (std::size_t i = 0; i < m; ++i) out.iso(i, j) = (*coords)[i];
  }
  Int det = determinant(out.iso);
  if (det != 1 && det != -1) {
    out.report = "b restricted to the left lattice is not unimodular onto the right lattice";
    return out;
  }
  if (out.left.kept != out.right.kept) {
    out.report = "left and right keep different simple roots";
    return out;
  }
  const RootDatum& dl = out.left.datum;
  const RootDatum& dr = out.right.datum;
  for (std::size_t i = 0; i < dl.semisimple_rank(); ++i) {
    if (out.iso.apply(dl.root(i)) != dr.root(i)) {
      out.report = "simple root " + std::to_string(i + 1) + " is not carried to its partner";
      return out;
    }
    if (out.iso.transpose().apply(dr.coroot(i)) != dl.coroot(i)) {
      out.report = "simple coroot " + std::to_string(i + 1) + " is not carried to its partner";
      return out;
    }
  }
  out.verified = true;
  out.cross_check = isomorphic(dl, dr);
  out.report = out.cross_check.status == IsoStatus::iso ? "verified" : "verified map, but search disagrees: " + out.cross_check.reason;
  if (out.cross_check.status != IsoStatus::iso) out.verified = false;
  return out;
}

}  // namespace tdual
