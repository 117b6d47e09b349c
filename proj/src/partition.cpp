#include "tdual/partition.hpp"

#include <algorithm>
#include <sstream>

#include "tdual/error.hpp"

namespace tdual {

Partition::Partition(std::vector<std::vector<std::size_t>> parts) {
  std::vector<bool> seen;
  for (auto& p : parts) {
    if (p.empty()) throw ShapeError("partition has an empty part");
    std::sort(p.begin(), p.end());
    for (std::size_t x : p) {
      if (x >= seen.size()) seen.resize(x + 1, false);
      if (seen[x]) throw ShapeError("partition parts overlap");
      seen[x] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw ShapeError("partition does not cover 1..n");
  std::sort(parts.begin(), parts.end());
  n_ = seen.size();
  parts_ = std::move(parts);
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t i = 0; i < n; ++i) parts.push_back({i});
  return Partition(parts);
}

Partition Partition::full(std::size_t n) {
  if (n == 0) return Partition();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return Partition({all});
}

Partition Partition::from_blocks(const std::vector<std::size_t>& block) {
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (block[i] >= parts.size()) parts.resize(block[i] + 1);
    parts[block[i]].push_back(i);
  }
  return Partition(parts);
}

std::vector<std::size_t> Partition::blocks() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t p = 0; p < parts_.size(); ++p)
    for (std::size_t x : parts_[p]) out[x] = p;
  return out;
}

bool Partition::refines(const Partition& other) const {
  if (n_ != other.n_) return false;
  auto ob = other.blocks();
  for (const auto& p : parts_)
    for (std::size_t x : p)
      if (ob[x] != ob[p.front()]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    if (p) s += "|";
    s += "{";
    for (std::size_t i = 0; i < parts_[p].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[p][i] + 1);
    }
    s += "}";
  }
  return s;
}

Partition Partition::parse(const std::string& text) {
  std::vector<std::vector<std::size_t>> parts;
  std::stringstream ss(text);
  std::string chunk;
  while (std::getline(ss, chunk, '|')) {
    std::vector<std::size_t> part;
    std::string digits;
    for (char c : chunk + ",") {
      if (c >= '0' && c <= '9') {
        digits += c;
      } else if (c == ',' || c == '}') {
        if (!digits.empty()) {
          long v = std::stol(digits);
          if (v < 1) throw UsageError("partition indices start at 1");
          part.push_back(static_cast<std::size_t>(v - 1));
        }
        digits.clear();
      } else if (c != '{' && c != ' ') {
        throw UsageError("malformed partition: " + text);
      }
    }
    parts.push_back(part);
  }
  return Partition(parts);
}

void for_each_partition(std::size_t n, const std::function<bool(const Partition&)>& visit) {
  if (n == 0) {
    visit(Partition());
    return;
  }
  std::vector<std::size_t> block(n, 0), maxima(n, 0);
  for (;;) {
    if (!visit(Partition::from_blocks(block))) return;
    std::size_t i = n - 1;
    while (i > 0 && block[i] == maxima[i - 1] + 1) --i;
    if (i == 0) return;
    ++block[i];
    maxima[i] = std::max(maxima[i - 1], block[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      block[j] = 0;
      maxima[j] = maxima[i];
    }
  }
}

}  // namespace tdual
