#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "satkit/error.hpp"

namespace satkit::span {

// Union by size with path halving.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Classes are listed by ascending least member; each class is sorted, so
// `classes[k].front()` is its representative.
struct Partition {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
};

// Finest partition of {0..count-1} merging every pair. Indices are taken
// as already ordered, so the least index is the representative.
// Throws UnknownTriple for an out-of-range index.
Partition equivalence_closure(std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

// Keyed form: the representative of each class is its least member under
// operator<. Throws UnknownTriple when a pair mentions an unlisted item.
template <class T>
std::pair<std::vector<T>, Partition> equivalence_closure(std::vector<T> items,
                                                         const std::vector<std::pair<T, T>>& pairs) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  auto index = [&](const T& v) {
    auto it = std::lower_bound(items.begin(), items.end(), v);
    if (it == items.end() || *it != v) throw UnknownTriple("generating pair mentions an unlisted element");
    return static_cast<std::size_t>(it - items.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> indexed;
  indexed.reserve(pairs.size());
  for (const auto& [a, b] : pairs) indexed.emplace_back(index(a), index(b));
  Partition p = equivalence_closure(items.size(), indexed);
  return {std::move(items), std::move(p)};
}

}  // namespace satkit::span
