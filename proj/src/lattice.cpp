#include "tdual/lattice.hpp"

#include <algorithm>

namespace tdual {

namespace {

void row_axpy(IntMatrix& a, std::size_t dst, const Int& q, std::size_t src) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a(src, j) != 0) a(dst, j) -= q * a(src, j);
}

void col_axpy(IntMatrix& a, std::size_t dst, const Int& q, std::size_t src) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a(i, src) != 0) a(i, dst) -= q * a(i, src);
}

void negate_row(IntMatrix& a, std::size_t i) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (a(i, j) != 0 && (pi == r || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == r) break;
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        row_axpy(a, i, q, t);
        row_axpy(u, i, q, t);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        col_axpy(a, j, q, t);
        col_axpy(v, j, q, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      row_axpy(a, t, Int(-1), bad);
      row_axpy(u, t, Int(-1), bad);
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(u, t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  std::size_t pr = 0;
  for (std::size_t j = 0; j < c && pr < r; ++j) {
    for (std::size_t i = pr + 1; i < r; ++i) {
      if (a(i, j) == 0) continue;
      if (a(pr, j) == 0) {
        a.swap_rows(pr, i);
        continue;
      }
      Int x = a(pr, j), y = a(i, j), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      Int yg = y / g, xg = x / g;
      for (std::size_t k = 0; k < c; ++k) {
        Int top = s * a(pr, k) + t * a(i, k);
        Int bottom = yg * a(pr, k) - xg * a(i, k);
        a(pr, k) = top;
        a(i, k) = bottom;
      }
    }
    if (a(pr, j) == 0) continue;
    if (a(pr, j) < 0) negate_row(a, pr);
    for (std::size_t k = 0; k < pr; ++k) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a(k, j).get_mpz_t(), a(pr, j).get_mpz_t());
      if (q != 0) row_axpy(a, k, q, pr);
    }
    ++pr;
  }
  IntMatrix out(pr, c);
  for (std::size_t i = 0; i < pr; ++i)
    for (std::size_t j = 0; j < c; ++j) out(i, j) = a(i, j);
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t j = 0; j < a.cols() && pr < a.rows(); ++j) {
    std::size_t p = pr;
    while (p < a.rows() && a(p, j) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(pr, p);
    Rat inv = 1 / a(pr, j);
    for (std::size_t k = 0; k < a.cols(); ++k) a(pr, k) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pr || a(i, j) == 0) continue;
      Rat f = a(i, j);
      for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= f * a(pr, k);
    }
    pivots.push_back(j);
    ++pr;
  }
  return pivots;
}

}  // namespace

Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  RatMatrix a = m;
  Rat det = 1;
  const std::size_t n = a.rows();
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = j;
    while (p < n && a(p, j) == 0) ++p;
    if (p == n) return 0;
    if (p != j) {
      a.swap_rows(p, j);
      det = -det;
    }
    det *= a(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      if (a(i, j) == 0) continue;
      Rat f = a(i, j) / a(j, j);
      for (std::size_t k = j; k < n; ++k) a(i, k) -= f * a(j, k);
    }
  }
  return det;
}

Int determinant(const IntMatrix& m) {
  Rat d = determinant(to_rational(m));
  return d.get_num();
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] >= n)) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a).size();
}

std::optional<RatVector> solve_in_row_span(const RatMatrix& basis, const RatVector& target) {
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  if (target.size() != n) throw ShapeError("solve_in_row_span: length mismatch");
  // Columns of aug are the basis rows; last column is the target.
  RatMatrix aug(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis(j, i);
    aug(i, k) = target[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  if (piv.size() != k) throw ShapeError("solve_in_row_span: basis rows are dependent");
  RatVector c(k);
  for (std::size_t i = 0; i < piv.size(); ++i) c[piv[i]] = aug(i, k);
  return c;
}

Sublattice::Sublattice(std::size_t ambient_rank) : ambient_rank_(ambient_rank), basis_(0, ambient_rank) {}

Sublattice::Sublattice(std::size_t ambient_rank, const IntMatrix& generators)
    : ambient_rank_(ambient_rank) {
  if (generators.rows() == 0) {
    basis_ = IntMatrix(0, ambient_rank);
    return;
  }
  if (generators.cols() != ambient_rank) throw ShapeError("sublattice generators have wrong width");
  basis_ = hermite_normal_form(generators);
}

Sublattice Sublattice::full(std::size_t ambient_rank) {
  return Sublattice(ambient_rank, IntMatrix::identity(ambient_rank));
}

std::optional<IntVector> Sublattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_rank_) throw ShapeError("sublattice membership: length mismatch");
  IntVector rem = v;
  IntVector coords(basis_.rows());
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    while (basis_(i, col) == 0) {
      if (rem[col] != 0) return std::nullopt;
      ++col;
    }
    if (rem[col] % basis_(i, col) != 0) return std::nullopt;
    Int q = rem[col] / basis_(i, col);
    coords[i] = q;
    if (q != 0)
      for (std::size_t j = col; j < ambient_rank_; ++j) rem[j] -= q * basis_(i, j);
    ++col;
  }
  if (!is_zero(rem)) return std::nullopt;
  return coords;
}

bool Sublattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool Sublattice::contains(const Sublattice& other) const {
  if (other.ambient_rank_ != ambient_rank_) return false;
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::string Sublattice::to_string() const {
  if (basis_.rows() == 0) return "0";
  std::string s = "span{";
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    if (i) s += ", ";
    s += tdual::to_string(basis_.row(i));
  }
  return s + "}";
}

FGAbelianGroup::FGAbelianGroup(const std::vector<Int>& cyclic_orders) {
  const std::size_t n = cyclic_orders.size();
  IntMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = abs(cyclic_orders[i]);
  auto snf = smith_normal_form(d);
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Int& x = snf.d(i, i);
    if (x == 0)
      ++zeros;
    else if (x != 1)
      factors_.push_back(x);
  }
  factors_.insert(factors_.end(), zeros, Int(0));
}

std::size_t FGAbelianGroup::free_rank() const {
  return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), Int(0)));
}

std::optional<Int> FGAbelianGroup::order() const {
  Int o = 1;
  for (const auto& f : factors_) {
    if (f == 0) return std::nullopt;
    o *= f;
  }
  return o;
}

IntVector FGAbelianGroup::reduce(const IntVector& element) const {
  if (element.size() != factors_.size()) throw ShapeError("group element has wrong length");
  IntVector out = element;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (factors_[i] != 0) mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), factors_[i].get_mpz_t());
  return out;
}

IntVector FGAbelianGroup::add(const IntVector& a, const IntVector& b) const {
  return reduce(tdual::add(a, b));
}

FGAbelianGroup FGAbelianGroup::power(std::size_t k) const {
  std::vector<Int> orders;
  for (std::size_t i = 0; i < k; ++i) orders.insert(orders.end(), factors_.begin(), factors_.end());
  return FGAbelianGroup(orders);
}

std::string FGAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " + ";
    s += factors_[i] == 0 ? std::string("Z") : "Z/" + factors_[i].get_str();
  }
  return s;
}

Sublattice kernel_mod(const IntMatrix& m, const std::optional<Int>& modulus) {
  if (modulus && *modulus <= 0) throw DomainError("kernel_mod: modulus must be positive");
  const std::size_t c = m.cols();
  auto snf = smith_normal_form(m);
  IntMatrix gens(0, c);
  for (std::size_t j = 0; j < c; ++j) {
    Int d = j < m.rows() ? snf.d(j, j) : Int(0);
    Int s;
    if (modulus) {
      Int g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), modulus->get_mpz_t());
      s = *modulus / g;
    } else if (d == 0) {
      s = 1;
    } else {
      continue;
    }
    IntVector col = snf.v.col(j);
    for (auto& x : col) x *= s;
    gens.append_row(col);
  }
  return Sublattice(c, gens);
}

Sublattice saturation(const Sublattice& s) {
  Sublattice annihilator = kernel_mod(s.basis(), std::nullopt);
  if (annihilator.rank() == 0) return Sublattice::full(s.ambient_rank());
  return kernel_mod(annihilator.basis(), std::nullopt);
}

FGAbelianGroup quotient_group(const Sublattice& s) {
  const std::size_t n = s.ambient_rank();
  const std::size_t k = s.rank();
  std::vector<Int> orders(n, Int(0));
  if (k > 0) {
    auto snf = smith_normal_form(s.basis());
    for (std::size_t i = 0; i < k; ++i) orders[i] = snf.d(i, i);
  }
  return FGAbelianGroup(orders);
}

Sublattice intersect(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw ShapeError("intersect: ambient ranks differ");
  const std::size_t n = a.ambient_rank();
  const std::size_t ka = a.rank(), kb = b.rank();
  if (ka == 0 || kb == 0) return Sublattice(n);
  // (y, z) with y A = z B.
  IntMatrix stacked(n, ka + kb);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ka; ++j) stacked(i, j) = a.basis()(j, i);
    for (std::size_t j = 0; j < kb; ++j) stacked(i, ka + j) = -b.basis()(j, i);
  }
  Sublattice rel = kernel_mod(stacked, std::nullopt);
  IntMatrix gens(rel.rank(), n);
  for (std::size_t r = 0; r < rel.rank(); ++r)
    for (std::size_t j = 0; j < ka; ++j) {
      const Int& y = rel.basis()(r, j);
      if (y == 0) continue;
      for (std::size_t col = 0; col < n; ++col) gens(r, col) += y * a.basis()(j, col);
    }
  return Sublattice(n, gens);
}

Int index_in(const Sublattice& a, const Sublattice& b) {
  if (a.rank() != b.rank()) throw DomainError("index_in: ranks differ, index is infinite");
  IntMatrix coords(a.rank(), b.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    auto c = b.coordinates(a.basis().row(i));
    if (!c) throw DomainError("index_in: lattice is not contained in the other");
    coords.set_row(i, *c);
  }
  return abs(determinant(coords));
}

Int denominator_lcm(const RatMatrix& m) {
  Int l = 1;
  for (const auto& x : m.data()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

}  // namespace tdual
