#include "satkit/cat/graph.hpp"

#include <algorithm>

#include "satkit/error.hpp"

namespace satkit::cat {

namespace {

template <class Range, class Key>
std::optional<std::size_t> sorted_find(const Range& range, std::string_view id, Key key) {
  auto it = std::lower_bound(range.begin(), range.end(), id,
                             [&](const auto& item, std::string_view v) { return key(item) < v; });
  if (it == range.end() || key(*it) != id) return std::nullopt;
  return static_cast<std::size_t>(it - range.begin());
}

}  // namespace

FinGraph::FinGraph(std::vector<std::string> nodes, std::vector<EdgeSpec> edges) {
  std::sort(nodes.begin(), nodes.end());
  if (auto dup = std::adjacent_find(nodes.begin(), nodes.end()); dup != nodes.end())
    throw ValidationError("duplicate node '" + *dup + "'");
  nodes_ = std::move(nodes);

  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0 && edges[i].id == edges[i - 1].id)
      throw ValidationError("duplicate edge '" + edges[i].id + "'");
    auto s = find_node(edges[i].source);
    auto t = find_node(edges[i].target);
    if (!s || !t)
      throw UnknownReference("edge '" + edges[i].id + "' has an endpoint that is not a node");
    edges_.push_back(Edge{std::move(edges[i].id), *s, *t});
  }
}

std::optional<std::size_t> FinGraph::find_node(std::string_view id) const {
  return sorted_find(nodes_, id, [](const std::string& n) -> std::string_view { return n; });
}

std::optional<std::size_t> FinGraph::find_edge(std::string_view id) const {
  return sorted_find(edges_, id, [](const Edge& e) -> std::string_view { return e.id; });
}

std::size_t FinGraph::node_index(std::string_view id) const {
  if (auto i = find_node(id)) return *i;
  throw UnknownReference("no node '" + std::string(id) + "'");
}

std::size_t FinGraph::edge_index(std::string_view id) const {
  if (auto i = find_edge(id)) return *i;
  throw UnknownReference("no edge '" + std::string(id) + "'");
}

FinGraph FinGraph::opposite() const {
  FinGraph op = *this;
  for (auto& e : op.edges_) std::swap(e.source, e.target);
  return op;
}

bool has_directed_cycle(const FinGraph& g) {
  // Kahn's algorithm: a cycle exists iff some node is never released.
  std::vector<std::size_t> indegree(g.node_count(), 0);
  for (const auto& e : g.edges()) ++indegree[e.target];
  std::vector<std::size_t> ready;
  for (std::size_t n = 0; n < g.node_count(); ++n)
    if (indegree[n] == 0) ready.push_back(n);
  std::size_t released = 0;
  while (!ready.empty()) {
    std::size_t n = ready.back();
    ready.pop_back();
    ++released;
    for (const auto& e : g.edges())
      if (e.source == n && --indegree[e.target] == 0) ready.push_back(e.target);
  }
  return released != g.node_count();
}

}  // namespace satkit::cat
