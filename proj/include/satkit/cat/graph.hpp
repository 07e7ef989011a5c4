#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace satkit::cat {

struct EdgeSpec {
  std::string id;
  std::string source;
  std::string target;
};

struct Edge {
  std::string id;
  std::size_t source;
  std::size_t target;

  bool operator==(const Edge&) const = default;
};

// Finite directed multigraph. Nodes and edges are kept sorted by id, so
// node/edge indices agree with the lexicographic order of their names.
class FinGraph {
 public:
  FinGraph() = default;
  FinGraph(std::vector<std::string> nodes, std::vector<EdgeSpec> edges);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find_node(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  // Throw UnknownReference.
  std::size_t node_index(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;

  // Same nodes, every edge reversed.
  FinGraph opposite() const;

  bool operator==(const FinGraph&) const = default;

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
};

bool has_directed_cycle(const FinGraph& g);

}  // namespace satkit::cat
