#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tdual/rootdata.hpp"

namespace tdual {

// An element a + b*t of Q/Z (+) Q t, standing for exp(2 pi i (a + b tau)) with
// tau a formal irrational. The rational part is kept in [0, 1).
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(const Rat& rational, const Rat& transcendental = 0);

  const Rat& rational() const { return rational_; }
  const Rat& transcendental() const { return transcendental_; }

  bool is_zero() const { return rational_ == 0 && transcendental_ == 0; }
  // Multiplicative order; nullopt when infinite.
  std::optional<Int> order() const;

  Exponent operator+(const Exponent& o) const { return Exponent(rational_ + o.rational_, transcendental_ + o.transcendental_); }
  Exponent operator-(const Exponent& o) const { return Exponent(rational_ - o.rational_, transcendental_ - o.transcendental_); }
  Exponent operator-() const { return Exponent(-rational_, -transcendental_); }
  Exponent& operator+=(const Exponent& o) { return *this = *this + o; }
  friend Exponent operator*(const Int& k, const Exponent& e) {
    return Exponent(Rat(k) * e.rational_, Rat(k) * e.transcendental_);
  }
  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.rational_ == b.rational_ && a.transcendental_ == b.transcendental_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

  // "a/b", "c/d*t" or "a/b+c/d*t".
  std::string to_string() const;
  static Exponent parse(const std::string& text);

 private:
  Rat rational_ = 0;
  Rat transcendental_ = 0;
};

// Q(x) has exponent 1/2 x^T (G0 + t G1) x and kappa(x, y) = x^T (G0 + t G1) y.
class QForm {
 public:
  QForm() = default;
  QForm(RootDatum rd, RatMatrix g0, RatMatrix g1);

  const RootDatum& datum() const { return rd_; }
  const RatMatrix& gram_rational() const { return g0_; }
  const RatMatrix& gram_transcendental() const { return g1_; }

  Exponent value(const IntVector& lambda) const;
  Exponent kappa(const IntVector& lambda, const IntVector& mu) const;

 private:
  RootDatum rd_;
  RatMatrix g0_;
  RatMatrix g1_;
};

// Validates symmetry (ShapeError) and W-invariance (InvarianceError naming the
// simple reflection that fails). An empty g1 means zero.
QForm qform_from_gram(const RootDatum& rd, const RatMatrix& g0, const RatMatrix& g1 = RatMatrix());
QForm trivial_qform(const RootDatum& rd);

enum class KernelMode { full, coroot };
std::string to_string(KernelMode m);

// full: {x : kappa(x, y) = 1 for all y}; coroot: {x : kappa(c, x) = 1 for all coroots c}.
Sublattice kernel(const QForm& q, KernelMode mode);

struct DetForm {
  IntMatrix k;            // K(x, y) = sum <w, x><w, y>
  bool is_sf = true;      // every entry of K even
  RatVector zeta;         // half the sum of the weights
  bool zeta_integral = true;
  bool weyl_closed = true;
  Rat r(const IntVector& x) const;  // 1/2 sum <w, x>^2
};
DetForm det_form(const RootDatum& rd, const std::vector<IntVector>& weights);

// Weights of the adjoint representation: all roots plus rank-many zeros.
std::vector<IntVector> adjoint_weights(const RootDatum& rd);

// Q(x) = a^{Q_i(x)} with Q_i(x) = 1/2 sum over roots of component i of <b, x>^2.
QForm killing_qform(const RootDatum& rd, std::size_t component, const Exponent& a);

struct IntegerDecomposition {
  bool success = false;
  std::vector<Exponent> coefficients;  // one per Dynkin component
  std::optional<QForm> residual;
  std::string report;
};
IntegerDecomposition decompose_integer_form(const QForm& q);

// kappa(c, x) - <a, x> Q(c) for a coroot c with root a.
Exponent epsilon_defect(const QForm& q, const IntVector& coroot, const IntVector& lambda);

// Q(x) = (-1)^{<2 rho, x>} with trivial bilinear form.
QForm half_forms_qform(const RootDatum& rd);

struct BraidingSigns {
  int geometric_sign = 1;
  Exponent twisted_factor;
};
BraidingSigns braiding_signs(const QForm& q, const IntVector& lambda, const IntVector& mu);

// Homomorphism pi1(G) -> M given by the images of the generators of the
// invariant factors of pi1 (in coordinates of M).
struct SfGerbeClass {
  QForm form;
  FGAbelianGroup target;
  std::vector<IntVector> mult_part;
};

struct ValidationReport {
  bool ok = true;
  std::string reason;
};

SfGerbeClass trivial_gerbe_class(const RootDatum& rd, const FGAbelianGroup& target);
SfGerbeClass tensor(const SfGerbeClass& a, const SfGerbeClass& b);
ValidationReport validate(const SfGerbeClass& c);

// Lusztig's Cartan datum attached to a root datum: dot(i, j) = f(i) <a_i, c_j>
// with f a W-invariant integral quadratic form on the coroot lattice.
struct CartanDatum {
  RootDatum rd;
  std::vector<Int> f;  // f(i) = (i.i)/2
  IntMatrix dot;
};
CartanDatum cartan_datum(const RootDatum& rd, const std::vector<Int>& f);
// Smallest f: short coroots get 1.
std::vector<Int> standard_f(const RootDatum& rd);
// Gram on X_* with x^T G c_i = f(i) <a_i, x>; rational in general.
RatMatrix cartan_datum_gram(const CartanDatum& cd);

}  // namespace tdual
