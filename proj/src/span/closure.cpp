#include "satkit/span/closure.hpp"

namespace satkit::span {

Partition equivalence_closure(std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  DisjointSet dsu(count);
  for (const auto& [a, b] : pairs) {
    if (a >= count || b >= count) throw UnknownTriple("generating pair index out of range");
    dsu.unite(a, b);
  }
  Partition p;
  p.class_of.assign(count, npos);
  std::vector<std::size_t> root_class(count, npos);
  // Ascending scan: the first member met opens its class, so classes come
  // out ordered by least member and each member list is sorted.
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t r = dsu.find(v);
    if (root_class[r] == npos) {
      root_class[r] = p.classes.size();
      p.classes.emplace_back();
    }
    p.class_of[v] = root_class[r];
    p.classes[root_class[r]].push_back(v);
  }
  return p;
}

}  // namespace satkit::span
