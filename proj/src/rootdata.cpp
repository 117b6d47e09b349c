#include "tdual/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <regex>

namespace tdual {

IntMatrix RootDatum::cartan() const {
  const std::size_t k = semisimple_rank();
  IntMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = dot(simple_roots.row(j), simple_coroots.row(i));
  return a;
}

IntVector reflect_coweight(const RootDatum& rd, std::size_t i, const IntVector& lambda) {
  Int p = dot(rd.root(i), lambda);
  IntVector out = lambda;
  if (p != 0)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= p * rd.simple_coroots(i, j);
  return out;
}

IntVector reflect_weight(const RootDatum& rd, std::size_t i, const IntVector& x) {
  Int p = dot(x, rd.coroot(i));
  IntVector out = x;
  if (p != 0)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= p * rd.simple_roots(i, j);
  return out;
}

IntMatrix simple_reflection_coweights(const RootDatum& rd, std::size_t i) {
  IntMatrix s = IntMatrix::identity(rd.rank);
  for (std::size_t r = 0; r < rd.rank; ++r)
    for (std::size_t c = 0; c < rd.rank; ++c) s(r, c) -= rd.simple_coroots(i, r) * rd.simple_roots(i, c);
  return s;
}

std::optional<std::size_t> RootSystem::find_root(const IntVector& r) const {
  auto it = std::find(roots.begin(), roots.end(), r);
  if (it == roots.end()) return std::nullopt;
  return static_cast<std::size_t>(it - roots.begin());
}

std::optional<std::size_t> RootSystem::find_coroot(const IntVector& c) const {
  auto it = std::find(coroots.begin(), coroots.end(), c);
  if (it == coroots.end()) return std::nullopt;
  return static_cast<std::size_t>(it - coroots.begin());
}

RootSystem root_system(const RootDatum& rd, std::size_t bound) {
  RootSystem rs;
  const std::size_t k = rd.semisimple_rank();
  std::map<IntVector, std::size_t> seen;
  std::deque<std::size_t> queue;
  auto visit = [&](const IntVector& r, const IntVector& c) {
    auto it = seen.find(r);
    if (it != seen.end()) {
      if (rs.coroots[it->second] != c)
        throw RootDatumError("root " + to_string(r) + " arises with two different coroots");
      return;
    }
    if (rs.roots.size() >= bound) throw RootDatumError("root system exceeds bound; Weyl group is not finite");
    seen.emplace(r, rs.roots.size());
    queue.push_back(rs.roots.size());
    rs.roots.push_back(r);
    rs.coroots.push_back(c);
  };
  for (std::size_t i = 0; i < k; ++i) visit(rd.root(i), rd.coroot(i));
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      IntVector r = reflect_weight(rd, i, rs.roots[idx]);
      IntVector c = reflect_coweight(rd, i, rs.coroots[idx]);
      visit(r, c);
    }
  }

  RatMatrix base = to_rational(rd.simple_roots);
  rs.two_rho.assign(rd.rank, 0);
  rs.two_rho_check.assign(rd.rank, 0);
  for (std::size_t n = 0; n < rs.roots.size(); ++n) {
    auto c = solve_in_row_span(base, to_rational(rs.roots[n]));
    if (!c) throw RootDatumError("root outside the span of the simple roots");
    int sign = 0;
    for (const auto& x : *c) {
      if (x.get_den() != 1) throw RootDatumError("simple roots do not form a base (non-integral coefficient)");
      int s = sgn(x);
      if (s == 0) continue;
      if (sign == 0) sign = s;
      if (s != sign) throw RootDatumError("simple roots do not form a base (mixed signs)");
    }
    rs.simple_coords.push_back(*c);
    rs.positive.push_back(sign > 0);
    if (sign > 0) {
      rs.two_rho = add(rs.two_rho, rs.roots[n]);
      rs.two_rho_check = add(rs.two_rho_check, rs.coroots[n]);
    }
  }
  return rs;
}

void validate(const RootDatum& rd, std::size_t bound) {
  const std::size_t k = rd.semisimple_rank();
  if (rd.simple_roots.cols() != rd.rank && k > 0) throw RootDatumError("simple roots have wrong width");
  if (rd.simple_coroots.rows() != k) throw RootDatumError("number of simple roots and coroots differ");
  if (rd.simple_coroots.cols() != rd.rank && k > 0) throw RootDatumError("simple coroots have wrong width");
  if (k > rd.rank) throw RootDatumError("more simple roots than the rank");
  IntMatrix a = rd.cartan();
  for (std::size_t i = 0; i < k; ++i) {
    if (a(i, i) != 2) throw RootDatumError("<alpha_" + std::to_string(i) + ", coroot_" + std::to_string(i) + "> != 2");
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) throw RootDatumError("positive off-diagonal Cartan entry");
      if ((a(i, j) == 0) != (a(j, i) == 0)) throw RootDatumError("Cartan matrix zero pattern is not symmetric");
    }
  }
  if (k > 0 && (rank(rd.simple_roots) != k || rank(rd.simple_coroots) != k))
    throw RootDatumError("simple roots or coroots are linearly dependent");
  RootSystem rs = root_system(rd, bound);
  for (std::size_t n = 0; n < rs.size(); ++n) {
    for (std::size_t i = 0; i < k; ++i) {
      auto m = rs.find_root(reflect_weight(rd, i, rs.roots[n]));
      if (!m) throw RootDatumError("simple reflection does not permute the roots");
      if (rs.coroots[*m] != reflect_coweight(rd, i, rs.coroots[n]))
        throw RootDatumError("simple reflection does not permute the coroots compatibly");
    }
    if (dot(rs.roots[n], rs.coroots[n]) != 2) throw RootDatumError("root/coroot pairing is not 2");
    IntVector twice = scale(Int(2), rs.roots[n]);
    if (rs.find_root(twice)) throw RootDatumError("root system is not reduced: " + to_string(twice));
  }
}

WeylGroup weyl_group(const RootDatum& rd, std::size_t bound) {
  WeylGroup w;
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) w.generators.push_back(simple_reflection_coweights(rd, i));
  std::map<std::vector<Int>, std::size_t> seen;
  IntMatrix id = IntMatrix::identity(rd.rank);
  seen.emplace(id.data(), 0);
  w.elements.push_back(id);
  w.lengths.push_back(0);
  for (std::size_t head = 0; head < w.elements.size(); ++head) {
    for (const auto& g : w.generators) {
      IntMatrix next = g * w.elements[head];
      if (seen.count(next.data())) continue;
      if (w.elements.size() >= bound) throw RootDatumError("Weyl group closure exceeds bound; datum is not of finite type");
      seen.emplace(next.data(), w.elements.size());
      w.elements.push_back(std::move(next));
      w.lengths.push_back(w.lengths[head] + 1);
    }
  }
  return w;
}

namespace {

RootDatum block_sum(const RootDatum& a, const RootDatum& b) {
  RootDatum out;
  out.rank = a.rank + b.rank;
  const std::size_t ka = a.semisimple_rank(), kb = b.semisimple_rank();
  out.simple_roots = IntMatrix(ka + kb, out.rank);
  out.simple_coroots = IntMatrix(ka + kb, out.rank);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < a.rank; ++j) {
      out.simple_roots(i, j) = a.simple_roots(i, j);
      out.simple_coroots(i, j) = a.simple_coroots(i, j);
    }
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < b.rank; ++j) {
      out.simple_roots(ka + i, a.rank + j) = b.simple_roots(i, j);
      out.simple_coroots(ka + i, a.rank + j) = b.simple_coroots(i, j);
    }
  return out;
}

IntMatrix cartan_a(std::size_t n) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = 2;
    if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = -1;
  }
  return a;
}

// Simply connected form: coroots are the standard basis.
RootDatum simply_connected(const IntMatrix& cartan) {
  RootDatum rd;
  rd.rank = cartan.rows();
  rd.simple_coroots = IntMatrix::identity(rd.rank);
  rd.simple_roots = cartan.transpose();
  return rd;
}

// Adjoint form: roots are the standard basis.
RootDatum adjoint(const IntMatrix& cartan) {
  RootDatum rd;
  rd.rank = cartan.rows();
  rd.simple_roots = IntMatrix::identity(rd.rank);
  rd.simple_coroots = cartan;
  return rd;
}

RootDatum single_factor(const std::string& label) {
  static const std::regex family(R"(^(SL|PGL|GL|T|torus)\(?(\d+)\)?$)");
  std::smatch m;
  if (std::regex_match(label, m, family)) {
    const std::string kind = m[1];
    const long n = std::stol(m[2]);
    if (kind == "T" || kind == "torus") {
      RootDatum rd;
      rd.rank = static_cast<std::size_t>(n);
      rd.simple_roots = IntMatrix(0, rd.rank);
      rd.simple_coroots = IntMatrix(0, rd.rank);
      return rd;
    }
    if (n < 1 || (n < 2 && kind != "GL")) throw UsageError("unknown group label: " + label);
    const auto un = static_cast<std::size_t>(n);
    if (kind == "SL") return simply_connected(cartan_a(un - 1));
    if (kind == "PGL") return adjoint(cartan_a(un - 1));
    RootDatum rd;
    rd.rank = un;
    rd.simple_roots = IntMatrix(un - 1, un);
    for (std::size_t i = 0; i + 1 < un; ++i) {
      rd.simple_roots(i, i) = 1;
      rd.simple_roots(i, i + 1) = -1;
    }
    rd.simple_coroots = rd.simple_roots;
    return rd;
  }
  if (label == "Sp4" || label == "Sp(4)") {
    RootDatum rd;
    rd.rank = 2;
    rd.simple_roots = IntMatrix{{1, -1}, {0, 2}};
    rd.simple_coroots = IntMatrix{{1, -1}, {0, 1}};
    return rd;
  }
  if (label == "PSp4" || label == "SO5") {
    IntMatrix cartan{{2, -2}, {-1, 2}};
    return adjoint(cartan);
  }
  if (label == "G2") {
    IntMatrix cartan{{2, -3}, {-1, 2}};
    return simply_connected(cartan);
  }
  throw UsageError("unknown group label: " + label);
}

}  // namespace

RootDatum standard(const std::string& label) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : label) {
    if (ch == 'x' || ch == '*' || ch == ' ') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  if (parts.empty()) throw UsageError("empty group label");
  RootDatum rd = single_factor(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) rd = block_sum(rd, single_factor(parts[i]));
  rd.name = label;
  validate(rd);
  return rd;
}

RootDatum langlands_dual(const RootDatum& rd) {
  RootDatum out;
  out.name = rd.name.empty() ? std::string() : "L(" + rd.name + ")";
  out.rank = rd.rank;
  out.simple_roots = rd.simple_coroots;
  out.simple_coroots = rd.simple_roots;
  return out;
}

std::vector<std::vector<std::size_t>> components(const RootDatum& rd) {
  const std::size_t k = rd.semisimple_rank();
  IntMatrix a = rd.cartan();
  std::vector<int> comp(k, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t h = 0; h < members.size(); ++h)
      for (std::size_t j = 0; j < k; ++j)
        if (comp[j] < 0 && a(members[h], j) != 0) {
          comp[j] = comp[s];
          members.push_back(j);
        }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

namespace {

std::string component_type(const IntMatrix& a, const std::vector<std::size_t>& nodes) {
  const std::size_t n = nodes.size();
  if (n == 1) return "A1";
  std::vector<std::size_t> degree(n, 0);
  std::size_t max_bond = 1;
  std::size_t bond_i = 0, bond_j = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const Int& axy = a(nodes[x], nodes[y]);
      if (axy == 0) continue;
      ++degree[x];
      std::size_t bond = std::max(Int(abs(axy)).get_ui(), Int(abs(a(nodes[y], nodes[x]))).get_ui());
      if (bond > max_bond) {
        max_bond = bond;
        bond_i = x;
        bond_j = y;
      }
    }
  const std::string num = std::to_string(n);
  if (max_bond == 3) return "G2";
  if (max_bond == 2) {
    if (n == 2) return "B2";
    // a(short, long) = -2 in the <alpha_j, coroot_i> convention used here.
    std::size_t short_node = a(nodes[bond_i], nodes[bond_j]) == -1 ? bond_j : bond_i;
    if (a(nodes[bond_i], nodes[bond_j]) == -2) short_node = bond_i;
    if (degree[bond_i] == 2 && degree[bond_j] == 2) return "F4";
    std::size_t end = degree[bond_i] == 1 ? bond_i : bond_j;
    return (end == short_node ? "B" : "C") + num;
  }
  auto branch = std::find(degree.begin(), degree.end(), 3);
  if (branch == degree.end()) return "A" + num;
  // Arm lengths from the branch node.
  const std::size_t b = static_cast<std::size_t>(branch - degree.begin());
  std::vector<std::size_t> arms;
  for (std::size_t y = 0; y < n; ++y) {
    if (y == b || a(nodes[b], nodes[y]) == 0) continue;
    std::size_t len = 1, prev = b, cur = y;
    for (;;) {
      std::size_t next = n;
      for (std::size_t z = 0; z < n; ++z)
        if (z != cur && z != prev && a(nodes[cur], nodes[z]) != 0) next = z;
      if (next == n) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + num;
  return "E" + num;
}

}  // namespace

std::string cartan_type(const RootDatum& rd) {
  IntMatrix a = rd.cartan();
  std::string out;
  for (const auto& comp : components(rd)) {
    if (!out.empty()) out += "x";
    out += component_type(a, comp);
  }
  if (rd.rank > rd.semisimple_rank()) {
    if (!out.empty()) out += "x";
    out += "T" + std::to_string(rd.rank - rd.semisimple_rank());
  }
  return out.empty() ? "T0" : out;
}

Sublattice coroot_lattice(const RootDatum& rd) { return Sublattice(rd.rank, rd.simple_coroots); }

FGAbelianGroup pi1(const RootDatum& rd) { return quotient_group(coroot_lattice(rd)); }

bool is_simply_connected(const RootDatum& rd) { return pi1(rd).is_trivial(); }

bool is_adjoint(const RootDatum& rd) { return quotient_group(Sublattice(rd.rank, rd.simple_roots)).is_trivial(); }

std::string describe(const RootDatum& rd) {
  std::string tags;
  if (is_simply_connected(rd)) tags = "simply-connected";
  if (is_adjoint(rd)) tags += tags.empty() ? "adjoint" : ", adjoint";
  std::string out = cartan_type(rd);
  if (!tags.empty()) out += " (" + tags + ")";
  return out;
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::less_equal: return "less-equal";
    case Dominance::greater_equal: return "greater-equal";
    case Dominance::equal: return "equal";
    case Dominance::incomparable: return "incomparable";
  }
  return "incomparable";
}

Dominance dominance_leq(const RootDatum& rd, const IntVector& lambda, const IntVector& mu) {
  IntVector diff = sub(mu, lambda);
  if (is_zero(diff)) return Dominance::equal;
  if (rd.semisimple_rank() == 0) return Dominance::incomparable;
  auto c = solve_in_row_span(to_rational(rd.simple_coroots), to_rational(diff));
  if (!c) return Dominance::incomparable;
  bool nonneg = true, nonpos = true;
  for (const auto& x : *c) {
    if (x.get_den() != 1) return Dominance::incomparable;
    if (x < 0) nonneg = false;
    if (x > 0) nonpos = false;
  }
  if (nonneg) return Dominance::less_equal;
  if (nonpos) return Dominance::greater_equal;
  return Dominance::incomparable;
}

bool is_dominant_coweight(const RootDatum& rd, const IntVector& lambda) {
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
    if (dot(rd.root(i), lambda) < 0) return false;
  return true;
}

IntVector dominant_coweight(const RootDatum& rd, const IntVector& lambda) {
  IntVector cur = lambda;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
      if (dot(rd.root(i), cur) < 0) {
        cur = reflect_coweight(rd, i, cur);
        moved = true;
      }
  }
  return cur;
}

IntVector antidominant_coweight(const RootDatum& rd, const IntVector& lambda) {
  IntVector cur = lambda;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
      if (dot(rd.root(i), cur) > 0) {
        cur = reflect_coweight(rd, i, cur);
        moved = true;
      }
  }
  return cur;
}

Int orbit_dim(const RootDatum& rd, const IntVector& lambda) {
  if (!is_dominant_coweight(rd, lambda)) throw DomainError("orbit_dim: coweight is not dominant");
  return dot(root_system(rd).two_rho, lambda);
}

Int sib_dim(const RootDatum& rd, const IntVector& lambda, const IntVector& mu) {
  if (!is_dominant_coweight(rd, lambda)) throw DomainError("sib_dim: lambda is not dominant");
  IntVector low = antidominant_coweight(rd, lambda);
  Dominance upper = dominance_leq(rd, mu, lambda);
  Dominance lower = dominance_leq(rd, low, mu);
  auto within = [](Dominance d) { return d == Dominance::less_equal || d == Dominance::equal; };
  if (!within(upper) || !within(lower)) throw RangeError("sib_dim: mu is outside [w0(lambda), lambda]");
  Int twice = dot(root_system(rd).two_rho, add(lambda, mu));
  if (twice % 2 != 0) throw RangeError("sib_dim: <2rho, lambda + mu> is odd");
  return twice / 2;
}

IntMatrix killing_matrix(const RootDatum& rd) {
  RootSystem rs = root_system(rd);
  IntMatrix k(rd.rank, rd.rank);
  for (const auto& b : rs.roots)
    for (std::size_t i = 0; i < rd.rank; ++i)
      for (std::size_t j = 0; j < rd.rank; ++j) k(i, j) += b[i] * b[j];
  return k;
}

IntMatrix killing_matrix(const RootDatum& rd, std::size_t component) {
  auto comps = components(rd);
  if (component >= comps.size()) throw RangeError("component index out of range");
  const auto& members = comps[component];
  RootSystem rs = root_system(rd);
  IntMatrix k(rd.rank, rd.rank);
  for (std::size_t n = 0; n < rs.size(); ++n) {
    bool inside = true;
    for (std::size_t s = 0; s < rs.simple_coords[n].size(); ++s)
      if (rs.simple_coords[n][s] != 0 && !std::binary_search(members.begin(), members.end(), s)) inside = false;
    if (!inside) continue;
    const auto& b = rs.roots[n];
    for (std::size_t i = 0; i < rd.rank; ++i)
      for (std::size_t j = 0; j < rd.rank; ++j) k(i, j) += b[i] * b[j];
  }
  return k;
}

DualCoxeter dual_coxeter_and_iota(const RootDatum& rd) {
  if (components(rd).size() != 1) throw DomainError("dual Coxeter number requires an irreducible root system");
  RootSystem rs = root_system(rd);
  std::size_t highest = 0;
  Rat best = -1;
  for (std::size_t n = 0; n < rs.size(); ++n) {
    if (!rs.positive[n]) continue;
    Rat h = 0;
    for (const auto& x : rs.simple_coords[n]) h += x;
    if (h > best) {
      best = h;
      highest = n;
    }
  }
  Int pairing = dot(rs.two_rho, rs.coroots[highest]);
  DualCoxeter out;
  out.h_check = 1 + pairing / 2;
  IntMatrix k = killing_matrix(rd);
  out.iota = Rat(1, 1) / Rat(2 * out.h_check) * to_rational(k);
  // 1/2 sum <alpha, lambda>^2 = h_check <iota(lambda), lambda> on basis vectors.
  for (std::size_t i = 0; i < rd.rank; ++i) {
    IntVector e(rd.rank, 0);
    e[i] = 1;
    Rat lhs = 0;
    for (const auto& b : rs.roots) lhs += Rat(dot(b, e) * dot(b, e));
    lhs /= 2;
    Rat rhs = Rat(out.h_check) * bilinear(out.iota, e, e);
    if (lhs != rhs) throw Error("dual_coxeter_and_iota: normalization identity failed");
  }
  return out;
}

}  // namespace tdual

namespace tdual {

Int dual_coxeter_number(const RootDatum& rd, std::size_t component) {
  auto comps = components(rd);
  if (component >= comps.size()) throw RangeError("component index out of range");
  const auto& members = comps[component];
  RootSystem rs = root_system(rd);
  IntVector two_rho(rd.rank, 0);
  std::size_t highest = rs.size();
  Rat best = -1;
  for (std::size_t n = 0; n < rs.size(); ++n) {
    if (!rs.positive[n]) continue;
    bool inside = true;
    Rat h = 0;
    for (std::size_t s = 0; s < rs.simple_coords[n].size(); ++s) {
      if (rs.simple_coords[n][s] == 0) continue;
      if (!std::binary_search(members.begin(), members.end(), s)) inside = false;
      h += rs.simple_coords[n][s];
    }
    if (!inside) continue;
    two_rho = add(two_rho, rs.roots[n]);
    if (h > best) {
      best = h;
      highest = n;
    }
  }
  return 1 + dot(two_rho, rs.coroots[highest]) / 2;
}

RatMatrix normalized_killing(const RootDatum& rd) {
  RatMatrix out(rd.rank, rd.rank);
  const std::size_t count = components(rd).size();
  for (std::size_t c = 0; c < count; ++c) {
    Rat scale = Rat(1) / Rat(2 * dual_coxeter_number(rd, c));
    out = out + scale * to_rational(killing_matrix(rd, c));
  }
  return out;
}

}  // namespace tdual
