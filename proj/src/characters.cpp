#include "tdual/characters.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace tdual {

Int Character::dimension() const {
  Int s = 0;
  for (const auto& [w, m] : multiplicities) s += m;
  return s;
}

Int Character::multiplicity(const IntVector& weight) const {
  auto it = multiplicities.find(weight);
  return it == multiplicities.end() ? Int(0) : it->second;
}

std::string Character::to_table() const {
  std::string out;
  for (const auto& [w, m] : multiplicities) out += to_string(w) + ": " + m.get_str() + "\n";
  return out;
}

bool is_dominant_weight(const RootDatum& rd, const IntVector& x) {
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
    if (dot(x, rd.coroot(i)) < 0) return false;
  return true;
}

IntVector dominant_weight(const RootDatum& rd, const IntVector& x) {
  IntVector cur = x;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
      if (dot(cur, rd.coroot(i)) < 0) {
        cur = reflect_weight(rd, i, cur);
        moved = true;
      }
  }
  return cur;
}

std::vector<IntVector> weyl_orbit(const RootDatum& rd, const IntVector& x) {
  std::set<IntVector> seen{x};
  std::vector<IntVector> out{x};
  for (std::size_t h = 0; h < out.size(); ++h)
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
      IntVector y = reflect_weight(rd, i, out[h]);
      if (seen.insert(y).second) out.push_back(y);
    }
  return out;
}

RatMatrix weight_form(const RootDatum& rd) { return normalized_killing(langlands_dual(rd)); }

namespace {

// Everything the recursion needs about one datum. Satake runs hit the same
// datum many times in a row, so the last one is kept.
struct Context {
  RootDatum rd;
  std::vector<IntVector> pos;
  std::vector<RatVector> pos_form;  // form * beta, one per positive root
  IntVector two_rho, two_rho_check;
  RatMatrix form;
  std::map<IntVector, Character> memo;
};

Context& context(const RootDatum& rd) {
  thread_local std::optional<Context> last;
  if (last && last->rd == rd) return *last;
  Context c;
  c.rd = rd;
  RootSystem rs = root_system(rd);
  for (std::size_t n = 0; n < rs.size(); ++n)
    if (rs.positive[n]) c.pos.push_back(rs.roots[n]);
  c.two_rho = rs.two_rho;
  c.two_rho_check = rs.two_rho_check;
  c.form = weight_form(rd);
  for (const auto& b : c.pos) {
    RatVector fb(rd.rank, Rat(0));
    for (std::size_t i = 0; i < rd.rank; ++i)
      for (std::size_t j = 0; j < rd.rank; ++j) fb[i] += c.form(i, j) * b[j];
    c.pos_form.push_back(std::move(fb));
  }
  last = std::move(c);
  return *last;
}

Rat pair_with(const RatVector& f, const IntVector& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) s += f[i] * x[i];
  return s;
}

std::vector<IntVector> dominant_below(const RootDatum& rd, const std::vector<IntVector>& pos, const IntVector& lambda) {
  std::set<IntVector> seen{lambda};
  std::vector<IntVector> out{lambda};
  for (std::size_t h = 0; h < out.size(); ++h)
    for (const auto& b : pos) {
      IntVector y = sub(out[h], b);
      if (is_dominant_weight(rd, y) && seen.insert(y).second) out.push_back(y);
    }
  return out;
}

Character freudenthal_uncached(const Context& cx, const IntVector& lambda) {
  const RootDatum& rd = cx.rd;
  if (lambda.size() != rd.rank) throw ShapeError("weight has wrong length");
  if (!is_dominant_weight(rd, lambda)) throw DomainError("highest weight " + to_string(lambda) + " is not dominant");
  auto ip = [&](const IntVector& a, const IntVector& b) { return bilinear(cx.form, a, b); };

  // Depth of lambda - mu along 2rho-check orders the recursion.
  std::vector<IntVector> dom = dominant_below(rd, cx.pos, lambda);
  std::vector<std::pair<Int, IntVector>> keyed;
  for (auto& mu : dom) keyed.emplace_back(dot(sub(lambda, mu), cx.two_rho_check), std::move(mu));
  std::sort(keyed.begin(), keyed.end());
  std::map<IntVector, Int> dm;
  const Rat top = ip(lambda, add(lambda, cx.two_rho));
  for (const auto& [depth, mu] : keyed) {
    if (mu == lambda) {
      dm[mu] = 1;
      continue;
    }
    Rat sum = 0;
    for (std::size_t n = 0; n < cx.pos.size(); ++n) {
      const IntVector& b = cx.pos[n];
      IntVector w = add(mu, b);
      for (;;) {
        auto it = dm.find(dominant_weight(rd, w));
        if (it == dm.end()) break;
        sum += Rat(it->second) * pair_with(cx.pos_form[n], w);
        w = add(w, b);
      }
    }
    Rat denom = top - ip(mu, add(mu, cx.two_rho));
    if (denom <= 0) throw Error("Freudenthal recursion: nonpositive denominator");
    Rat m = 2 * sum / denom;
    if (m.get_den() != 1 || m < 0) throw Error("Freudenthal recursion produced a non-integral multiplicity");
    if (m > 0) dm[mu] = m.get_num();
  }
  Character ch;
  ch.rd = rd;
  ch.highest = lambda;
  for (const auto& [mu, m] : dm)
    for (const auto& w : weyl_orbit(rd, mu)) ch.multiplicities[w] = m;
  return ch;
}

const Character& freudenthal(Context& cx, const IntVector& lambda) {
  auto it = cx.memo.find(lambda);
  if (it != cx.memo.end()) return it->second;
  if (cx.memo.size() > 4096) cx.memo.clear();
  return cx.memo.emplace(lambda, freudenthal_uncached(cx, lambda)).first->second;
}

}  // namespace

std::vector<IntVector> dominant_weights_below(const RootDatum& rd, const IntVector& lambda) {
  if (!is_dominant_weight(rd, lambda)) throw DomainError("weight " + to_string(lambda) + " is not dominant");
  return dominant_below(rd, context(rd).pos, lambda);
}

Character irreducible_character(const RootDatum& rd, const IntVector& lambda) { return freudenthal(context(rd), lambda); }

Int weyl_dimension(const RootDatum& rd, const IntVector& lambda) {
  RootSystem rs = root_system(rd);
  Rat d = 1;
  IntVector shifted = add(scale(Int(2), lambda), rs.two_rho);
  for (std::size_t n = 0; n < rs.size(); ++n) {
    if (!rs.positive[n]) continue;
    d *= Rat(dot(shifted, rs.coroots[n]), dot(rs.two_rho, rs.coroots[n]));
  }
  d.canonicalize();
  if (d.get_den() != 1) throw Error("Weyl dimension is not integral");
  return d.get_num();
}

Character product(const Character& a, const Character& b) {
  if (!(a.rd == b.rd)) throw CompositionError("characters over different root data");
  Character out;
  out.rd = a.rd;
  for (const auto& [x, m] : a.multiplicities)
    for (const auto& [y, n] : b.multiplicities) out.multiplicities[add(x, y)] += m * n;
  if (a.highest && b.highest) out.highest = add(*a.highest, *b.highest);
  return out;
}

std::vector<std::pair<IntVector, Int>> tensor_decompose(const Character& a, const Character& b) {
  Character rest = product(a, b);
  Context& cx = context(rest.rd);
  const IntVector& two_rho_check = cx.two_rho_check;
  std::vector<std::pair<IntVector, Int>> out;
  while (!rest.multiplicities.empty()) {
    auto best = rest.multiplicities.begin();
    Int best_h = dot(best->first, two_rho_check);
    for (auto it = rest.multiplicities.begin(); it != rest.multiplicities.end(); ++it) {
      Int h = dot(it->first, two_rho_check);
      if (h > best_h || (h == best_h && it->first > best->first)) {
        best = it;
        best_h = h;
      }
    }
    IntVector nu = best->first;
    Int c = best->second;
    if (c < 0) throw Error("tensor_decompose: negative multiplicity");
    out.emplace_back(nu, c);
    const Character& chi = freudenthal(cx, nu);
    for (const auto& [w, m] : chi.multiplicities) {
      Int& slot = rest.multiplicities[w];
      slot -= c * m;
      if (slot < 0) throw Error("tensor_decompose: weight " + to_string(w) + " went negative");
      if (slot == 0) rest.multiplicities.erase(w);
    }
  }
  return out;
}

bool weight_leq(const RootDatum& rd, const IntVector& lambda, const IntVector& mu) {
  IntVector diff = sub(mu, lambda);
  if (is_zero(diff)) return true;
  if (rd.semisimple_rank() == 0) return false;
  auto c = solve_in_row_span(to_rational(rd.simple_roots), to_rational(diff));
  if (!c) return false;
  for (const auto& x : *c)
    if (x.get_den() != 1 || x < 0) return false;
  return true;
}

namespace {

FiberDim fiber_from(const IntVector& two_rho, const IntVector& lambda, const IntVector& mu, const IntVector& nu) {
  FiberDim f;
  f.value = Rat(dot(two_rho, lambda) + dot(two_rho, mu) - dot(two_rho, nu), 2);
  f.value.canonicalize();
  f.integral = f.value.get_den() == 1;
  f.nonnegative = f.value >= 0;
  return f;
}

}  // namespace

FiberDim fiber_dim(const RootDatum& rd, const IntVector& lambda, const IntVector& mu, const IntVector& nu) {
  return fiber_from(root_system(rd).two_rho, lambda, mu, nu);
}

SatakeReport satake_prediction(const QForm& q, const TwistedDual& dual, const IntVector& lambda, const IntVector& mu) {
  const RootDatum& src = q.datum();
  for (const IntVector* x : {&lambda, &mu}) {
    if (x->size() != src.rank) throw ShapeError("coweight has wrong length");
    if (!is_dominant_coweight(src, *x)) throw DomainError("coweight " + to_string(*x) + " is not dominant");
  }
  auto l = dual.to_dual(lambda), m = dual.to_dual(mu);
  if (!l) throw DomainError("coweight " + to_string(lambda) + " is outside the weight lattice of the dual");
  if (!m) throw DomainError("coweight " + to_string(mu) + " is outside the weight lattice of the dual");
  SatakeReport rep{dual, {}, 0, true, true, braiding_signs(q, lambda, mu)};
  const RootDatum& d = dual.datum;
  IntVector top = add(*l, *m);
  const IntVector src_two_rho = root_system(src).two_rho;
  for (const auto& [nu, c] : tensor_decompose(irreducible_character(d, *l), irreducible_character(d, *m))) {
    SatakeConstituent s;
    s.weight = nu;
    s.coweight = dual.to_source(nu);
    s.multiplicity = c;
    s.below_top = weight_leq(d, nu, top);
    s.fiber = fiber_from(src_two_rho, lambda, mu, s.coweight);
    if (nu == top) rep.top_multiplicity = c;
    if (!s.below_top) rep.all_below = false;
    if (!s.fiber.integral || !s.fiber.nonnegative) rep.fibers_ok = false;
    rep.constituents.push_back(s);
  }
  return rep;
}

SatakeReport satake_prediction(const QForm& q, const IntVector& lambda, const IntVector& mu) {
  return satake_prediction(q, twisted_dual(q, KernelMode::full), lambda, mu);
}

}  // namespace tdual
