#include "tdual/qform.hpp"

#include <algorithm>
#include <map>
#include <regex>

namespace tdual {

namespace {

Rat canonical(Rat x) {
  x.canonicalize();
  return x;
}

Rat frac_part(const Rat& y) {
  Rat x = canonical(y);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rat(fl);
}

bool is_integral(const Rat& x) { return x.get_den() == 1; }

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw UsageError("empty rational");
  std::string t = s;
  if (t[0] == '+') t = t.substr(1);
  Rat r;
  if (r.set_str(t, 10) != 0) throw UsageError("malformed rational: " + s);
  if (r.get_den() == 0) throw UsageError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

// Callers may hand over non-canonical mpq values (e.g. Rat(2, 4)).
RatMatrix zero_if_empty(const RatMatrix& m, std::size_t n) {
  if (m.empty() && n > 0) return RatMatrix(n, n);
  RatMatrix out = m;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j).canonicalize();
  return out;
}

}  // namespace

Exponent::Exponent(const Rat& rational, const Rat& transcendental)
    : rational_(frac_part(rational)), transcendental_(canonical(transcendental)) {}

std::optional<Int> Exponent::order() const {
  if (transcendental_ != 0) return std::nullopt;
  return rational_.get_den();
}

std::string Exponent::to_string() const {
  std::string t;
  if (transcendental_ != 0) t = transcendental_ == 1 ? "t" : transcendental_.get_str() + "*t";
  if (rational_ == 0 && !t.empty()) return t;
  std::string out = rational_.get_str();
  if (t.empty()) return out;
  return out + (transcendental_ > 0 ? "+" : "") + t;
}

Exponent Exponent::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  static const std::regex full(R"(^([+-]?\d+(?:/\d+)?)?(?:([+-]?)(\d+(?:/\d+)?)?\*?t)?$)");
  std::smatch m;
  if (s.empty() || !std::regex_match(s, m, full)) throw UsageError("malformed exponent: " + text);
  Rat a = m[1].matched ? parse_rat(m[1]) : Rat(0);
  Rat b = 0;
  if (s.back() == 't') {
    b = m[3].matched ? parse_rat(m[3]) : Rat(1);
    if (m[2] == "-") b = -b;
  }
  return Exponent(a, b);
}

QForm::QForm(RootDatum rd, RatMatrix g0, RatMatrix g1)
    : rd_(std::move(rd)), g0_(zero_if_empty(g0, rd_.rank)), g1_(zero_if_empty(g1, rd_.rank)) {}

Exponent QForm::value(const IntVector& lambda) const {
  Rat half(1, 2);
  return Exponent(half * bilinear(g0_, lambda, lambda), half * bilinear(g1_, lambda, lambda));
}

Exponent QForm::kappa(const IntVector& lambda, const IntVector& mu) const {
  return Exponent(bilinear(g0_, lambda, mu), bilinear(g1_, lambda, mu));
}

QForm qform_from_gram(const RootDatum& rd, const RatMatrix& g0_in, const RatMatrix& g1_in) {
  RatMatrix g0 = zero_if_empty(g0_in, rd.rank);
  RatMatrix g1 = zero_if_empty(g1_in, rd.rank);
  for (const RatMatrix* g : {&g0, &g1}) {
    if (g->rows() != rd.rank || g->cols() != rd.rank) throw ShapeError("Gram matrix must be rank x rank");
    if (!g->is_symmetric()) throw ShapeError("Gram matrix is not symmetric");
  }
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
    RatMatrix s = to_rational(simple_reflection_coweights(rd, i));
    RatMatrix st = s.transpose();
    if (st * g0 * s != g0 || st * g1 * s != g1)
      throw InvarianceError("Gram matrix is not invariant under simple reflection s_" + std::to_string(i + 1), i);
  }
  return QForm(rd, g0, g1);
}

QForm trivial_qform(const RootDatum& rd) { return QForm(rd, RatMatrix(rd.rank, rd.rank), RatMatrix(rd.rank, rd.rank)); }

std::string to_string(KernelMode m) { return m == KernelMode::full ? "full" : "coroot"; }

namespace {

// {x : rows(g0) x integral and rows(g1) x = 0}.
Sublattice integral_kernel(const RatMatrix& g0, const RatMatrix& g1, std::size_t n) {
  Int d0 = denominator_lcm(g0);
  IntMatrix m0(g0.rows(), n);
  for (std::size_t i = 0; i < g0.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) m0(i, j) = Rat(g0(i, j) * d0).get_num();
  Sublattice k0 = kernel_mod(m0, d0);
  Int d1 = denominator_lcm(g1);
  IntMatrix m1(g1.rows(), n);
  for (std::size_t i = 0; i < g1.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) m1(i, j) = Rat(g1(i, j) * d1).get_num();
  return intersect(k0, kernel_mod(m1, std::nullopt));
}

}  // namespace

Sublattice kernel(const QForm& q, KernelMode mode) {
  const RootDatum& rd = q.datum();
  if (mode == KernelMode::full) return integral_kernel(q.gram_rational(), q.gram_transcendental(), rd.rank);
  RatMatrix c = to_rational(rd.simple_coroots);
  if (rd.semisimple_rank() == 0) return Sublattice::full(rd.rank);
  return integral_kernel(c * q.gram_rational(), c * q.gram_transcendental(), rd.rank);
}

Rat DetForm::r(const IntVector& x) const {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += Rat(k(i, j) * x[i] * x[j]);
  return s / 2;
}

DetForm det_form(const RootDatum& rd, const std::vector<IntVector>& weights) {
  DetForm out;
  out.k = IntMatrix(rd.rank, rd.rank);
  IntVector sum(rd.rank, 0);
  std::map<IntVector, long> counts;
  for (const auto& w : weights) {
    if (w.size() != rd.rank) throw ShapeError("weight has wrong length");
    for (std::size_t i = 0; i < rd.rank; ++i)
      for (std::size_t j = 0; j < rd.rank; ++j) out.k(i, j) += w[i] * w[j];
    sum = add(sum, w);
    ++counts[w];
  }
  for (const auto& v : out.k.data())
    if (v % 2 != 0) out.is_sf = false;
  out.zeta.resize(rd.rank);
  for (std::size_t i = 0; i < rd.rank; ++i) {
    out.zeta[i] = Rat(sum[i], 2);
    out.zeta[i].canonicalize();
    if (!is_integral(out.zeta[i])) out.zeta_integral = false;
  }
  for (const auto& [w, c] : counts)
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
      auto it = counts.find(reflect_weight(rd, i, w));
      if (it == counts.end() || it->second != c) out.weyl_closed = false;
    }
  return out;
}

std::vector<IntVector> adjoint_weights(const RootDatum& rd) {
  std::vector<IntVector> out = root_system(rd).roots;
  for (std::size_t i = 0; i < rd.rank; ++i) out.emplace_back(rd.rank, 0);
  return out;
}

QForm killing_qform(const RootDatum& rd, std::size_t component, const Exponent& a) {
  RatMatrix k = to_rational(killing_matrix(rd, component));
  return qform_from_gram(rd, a.rational() * k, a.transcendental() * k);
}

IntegerDecomposition decompose_integer_form(const QForm& q) {
  const RootDatum& rd = q.datum();
  auto comps = components(rd);
  IntegerDecomposition out;

  struct Piece {
    RatMatrix k;
    Int m;
    Exponent target;
  };
  std::vector<Piece> pieces;
  Int combos = 1;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    IntMatrix kc = killing_matrix(rd, c);
    Piece p{to_rational(kc), 0, Exponent()};
    for (std::size_t i : comps[c]) {
      IntVector v = rd.coroot(i);
      Int qi = 0;
      for (std::size_t a = 0; a < rd.rank; ++a)
        for (std::size_t b = 0; b < rd.rank; ++b) qi += kc(a, b) * v[a] * v[b];
      qi /= 2;
      if (p.m == 0 || qi < p.m) {
        p.m = qi;
        p.target = q.value(v);
      }
    }
    combos *= p.m;
    pieces.push_back(p);
  }
  if (combos > 1000000) {
    out.report = "coefficient search space too large";
    return out;
  }

  Sublattice sat = saturation(coroot_lattice(rd));
  std::vector<Int> choice(pieces.size(), 0);
  for (;;) {
    std::vector<Exponent> coeffs;
    RatMatrix r0 = q.gram_rational(), r1 = q.gram_transcendental();
    for (std::size_t c = 0; c < pieces.size(); ++c) {
      const Piece& p = pieces[c];
      Exponent a((p.target.rational() + Rat(choice[c])) / Rat(p.m), p.target.transcendental() / Rat(p.m));
      coeffs.push_back(a);
      r0 = r0 - a.rational() * p.k;
      r1 = r1 - a.transcendental() * p.k;
    }
    bool ok = true;
    for (std::size_t b = 0; b < sat.rank() && ok; ++b) {
      IntVector v = sat.basis().row(b);
      RatVector g0v = r0.apply(to_rational(v)), g1v = r1.apply(to_rational(v));
      for (std::size_t j = 0; j < rd.rank && ok; ++j)
        if (!is_integral(g0v[j]) || g1v[j] != 0) ok = false;
      if (ok && !is_integral(Rat(1, 2) * bilinear(r0, v, v))) ok = false;
    }
    if (ok) {
      out.success = true;
      out.coefficients = coeffs;
      out.residual = qform_from_gram(rd, r0, r1);
      out.report = "decomposed";
      return out;
    }
    std::size_t c = 0;
    while (c < choice.size()) {
      if (++choice[c] < pieces[c].m) break;
      choice[c] = 0;
      ++c;
    }
    if (c == choice.size()) break;
  }
  out.report = "no product of Killing forms leaves a residual trivial on the saturated coroot lattice";
  return out;
}

Exponent epsilon_defect(const QForm& q, const IntVector& coroot, const IntVector& lambda) {
  RootSystem rs = root_system(q.datum());
  auto idx = rs.find_coroot(coroot);
  if (!idx) throw DomainError("epsilon_defect: " + to_string(coroot) + " is not a coroot");
  Int pairing = dot(rs.roots[*idx], lambda);
  return q.kappa(coroot, lambda) - pairing * q.value(coroot);
}

QForm half_forms_qform(const RootDatum& rd) {
  RatMatrix g = Rat(1, 2) * to_rational(killing_matrix(rd));
  QForm q = qform_from_gram(rd, g);
  for (std::size_t i = 0; i < rd.rank; ++i)
    for (std::size_t j = 0; j < rd.rank; ++j)
      if (!is_integral(g(i, j))) throw Error("half_forms_qform: bilinear form is not trivial");
  return q;
}

BraidingSigns braiding_signs(const QForm& q, const IntVector& lambda, const IntVector& mu) {
  IntVector two_rho = root_system(q.datum()).two_rho;
  Int e = dot(two_rho, lambda) * dot(two_rho, mu);
  BraidingSigns out;
  out.geometric_sign = e % 2 == 0 ? 1 : -1;
  out.twisted_factor = q.value(lambda) + q.value(mu);
  return out;
}

SfGerbeClass trivial_gerbe_class(const RootDatum& rd, const FGAbelianGroup& target) {
  SfGerbeClass c{trivial_qform(rd), target, {}};
  c.mult_part.assign(pi1(rd).invariant_factors().size(), target.zero());
  return c;
}

SfGerbeClass tensor(const SfGerbeClass& a, const SfGerbeClass& b) {
  if (!(a.form.datum() == b.form.datum())) throw CompositionError("gerbe classes over different root data");
  if (!(a.target == b.target)) throw CompositionError("gerbe classes with different target groups");
  if (a.mult_part.size() != b.mult_part.size()) throw CompositionError("multiplicative parts have different shapes");
  SfGerbeClass out;
  out.form = QForm(a.form.datum(), a.form.gram_rational() + b.form.gram_rational(),
                   a.form.gram_transcendental() + b.form.gram_transcendental());
  out.target = a.target;
  for (std::size_t i = 0; i < a.mult_part.size(); ++i) out.mult_part.push_back(a.target.add(a.mult_part[i], b.mult_part[i]));
  return out;
}

ValidationReport validate(const SfGerbeClass& c) {
  auto dec = decompose_integer_form(c.form);
  if (!dec.success) return {false, "form is not Z-liftable: " + dec.report};
  const auto& factors = pi1(c.form.datum()).invariant_factors();
  if (c.mult_part.size() != factors.size()) return {false, "multiplicative part needs one image per invariant factor of pi1"};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (c.mult_part[i].size() != c.target.invariant_factors().size()) return {false, "image has wrong length"};
    if (factors[i] == 0) continue;
    IntVector multiple = c.mult_part[i];
    for (auto& x : multiple) x *= factors[i];
    if (c.target.reduce(multiple) != c.target.zero())
      return {false, "image of generator " + std::to_string(i + 1) + " is not killed by " + factors[i].get_str()};
  }
  return {};
}

CartanDatum cartan_datum(const RootDatum& rd, const std::vector<Int>& f) {
  const std::size_t k = rd.semisimple_rank();
  if (f.size() != k) throw ShapeError("Cartan datum needs one value per simple root");
  IntMatrix a = rd.cartan();
  CartanDatum cd{rd, f, IntMatrix(k, k)};
  for (std::size_t i = 0; i < k; ++i) {
    if (f[i] <= 0) throw DomainError("Cartan datum values must be positive");
    for (std::size_t j = 0; j < k; ++j) cd.dot(i, j) = f[i] * a(j, i);
  }
  if (!cd.dot.is_symmetric()) throw DomainError("f is not W-invariant: i.j is not symmetric");
  return cd;
}

std::vector<Int> standard_f(const RootDatum& rd) {
  RatMatrix g = normalized_killing(rd);
  std::vector<Int> f;
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
    Rat v = Rat(1, 2) * bilinear(g, rd.coroot(i), rd.coroot(i));
    if (!is_integral(v)) throw Error("standard_f: non-integral coroot length");
    f.push_back(v.get_num());
  }
  return f;
}

RatMatrix cartan_datum_gram(const CartanDatum& cd) {
  const RootDatum& rd = cd.rd;
  const std::size_t k = rd.semisimple_rank();
  if (k == 0) return RatMatrix(rd.rank, rd.rank);
  RatMatrix a = to_rational(rd.simple_roots);
  RatMatrix b = a * to_rational(rd.simple_coroots).transpose();
  auto binv = inverse(b.transpose());
  if (!binv) throw Error("Cartan matrix is singular");
  RatMatrix f(k, k);
  for (std::size_t i = 0; i < k; ++i) f(i, i) = Rat(cd.f[i]);
  return a.transpose() * *binv * f * a;
}

}  // namespace tdual
