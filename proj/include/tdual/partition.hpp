#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace tdual {

// Set partition of {0, ..., n-1}. Parts are sorted and ordered by their least
// element, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::vector<std::size_t>> parts);

  static Partition discrete(std::size_t n);
  static Partition full(std::size_t n);
  // From a restricted growth string: block[i] is the part containing i.
  static Partition from_blocks(const std::vector<std::size_t>& block);

  std::size_t size() const { return n_; }
  std::size_t part_count() const { return parts_.size(); }
  const std::vector<std::vector<std::size_t>>& parts() const { return parts_; }
  std::vector<std::size_t> blocks() const;

  // Every part of this is contained in a part of other.
  bool refines(const Partition& other) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  // One-based, e.g. "{1,2}|{3}".
  std::string to_string() const;
  static Partition parse(const std::string& text);

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> parts_;
};

// Calls visit on every set partition of {0..n-1}, in lexicographic order of
// restricted growth strings. Stops early when visit returns false.
void for_each_partition(std::size_t n, const std::function<bool(const Partition&)>& visit);

}  // namespace tdual
