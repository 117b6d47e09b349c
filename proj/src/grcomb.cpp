#include "tdual/grcomb.hpp"

#include <map>

namespace tdual {

namespace {

void require_same_shape(const ComponentIndex& a, const ComponentIndex& b) {
  if (a.size() != b.size()) throw ShapeError("components have different numbers of coordinates");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].size() != b[i].size() || a[i].size() != a[0].size()) throw ShapeError("coweights have different ranks");
}

IntVector total(const ComponentIndex& a, std::size_t rank) {
  IntVector s(rank, 0);
  for (const auto& x : a) s = add(s, x);
  return s;
}

// Calls visit on every component of n coweights of the given rank with
// coordinates in [-bound, bound].
bool for_each_component(std::size_t n, std::size_t rank, long bound,
                        const std::function<bool(const ComponentIndex&)>& visit) {
  std::vector<long> flat(n * rank, -bound);
  for (;;) {
    ComponentIndex c(n, IntVector(rank));
    for (std::size_t i = 0; i < flat.size(); ++i) c[i / rank][i % rank] = flat[i];
    if (!visit(c)) return false;
    std::size_t i = 0;
    while (i < flat.size() && ++flat[i] > bound) flat[i++] = -bound;
    if (i == flat.size()) return true;
  }
}

}  // namespace

bool meets_over(const ComponentIndex& a, const ComponentIndex& b, const Partition& p) {
  require_same_shape(a, b);
  if (p.size() != a.size()) throw ShapeError("partition size differs from the number of coordinates");
  const std::size_t rank = a.empty() ? 0 : a[0].size();
  for (const auto& part : p.parts()) {
    IntVector d(rank, 0);
    for (std::size_t i : part) d = add(d, sub(a[i], b[i]));
    if (!is_zero(d)) return false;
  }
  return true;
}

std::optional<Partition> incident(const ComponentIndex& a, const ComponentIndex& b) {
  require_same_shape(a, b);
  if (a.size() > 12) throw RangeError("incident: at most 12 coordinates are supported");
  std::optional<Partition> best;
  for_each_partition(a.size(), [&](const Partition& p) {
    if ((!best || p.part_count() > best->part_count()) && meets_over(a, b, p)) best = p;
    return true;
  });
  return best;
}

IntVector Homomorphism::operator()(const IntVector& x) const {
  if (x.size() != images.size()) throw ShapeError("homomorphism: argument has wrong rank");
  IntVector v = target.zero();
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t c = 0; c < v.size(); ++c) v[c] += x[j] * images[j][c];
  return target.reduce(v);
}

ComponentMapping factorizable_function(const Homomorphism& h, std::size_t n) {
  ComponentMapping m;
  m.target = h.target;
  m.n = n;
  m.rank = h.images.size();
  m.value = [h, rank = m.rank](const ComponentIndex& c) { return h(total(c, rank)); };
  return m;
}

FactorizabilityReport check_factorizable(const ComponentMapping& m, long bound) {
  FactorizabilityReport rep;
  std::map<IntVector, IntVector> by_total;
  std::vector<Partition> two_part;
  for_each_partition(m.n, [&](const Partition& p) {
    if (p.part_count() == 2) two_part.push_back(p);
    return true;
  });
  for_each_component(m.n, m.rank, bound, [&](const ComponentIndex& c) {
    IntVector v = m.target.reduce(m.value(c));
    auto [it, inserted] = by_total.emplace(total(c, m.rank), v);
    if (!inserted && it->second != v) {
      rep.local_constancy = false;
      rep.witness = c;
      return false;
    }
    for (const auto& p : two_part) {
      IntVector prod = m.target.zero();
      for (const auto& part : p.parts()) {
        ComponentIndex padded(m.n, IntVector(m.rank, 0));
        for (std::size_t k = 0; k < part.size(); ++k) padded[k] = c[part[k]];
        prod = m.target.add(prod, m.value(padded));
      }
      if (m.target.reduce(prod) != v) {
        rep.product_rule = false;
        rep.witness = c;
        return false;
      }
    }
    return true;
  });
  return rep;
}

Homomorphism reconstruct_homomorphism(const ComponentMapping& m) {
  Homomorphism h{m.target, {}};
  for (std::size_t j = 0; j < m.rank; ++j) {
    ComponentIndex c(m.n, IntVector(m.rank, 0));
    c[0][j] = 1;
    h.images.push_back(m.target.reduce(m.value(c)));
  }
  return h;
}

FGAbelianGroup fact_sections(const FGAbelianGroup& a, std::size_t n, const Partition& p) {
  if (p.size() != n) throw ShapeError("partition size differs from n");
  return a.power(p.part_count());
}

}  // namespace tdual
