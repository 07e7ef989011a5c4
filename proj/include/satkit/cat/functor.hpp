#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satkit/cat/category.hpp"
#include "satkit/cat/graph.hpp"

namespace satkit::cat {

using GraphPtr = std::shared_ptr<const FinGraph>;

// A graph morphism from `source` into the underlying graph of `target`.
// The constructor throws EndpointMismatch if an edge is sent to a morphism
// whose domain or codomain disagrees with the images of its endpoints.
class Diagram {
 public:
  Diagram(GraphPtr source, CatPtr target, std::vector<std::size_t> node_map,
          std::vector<std::size_t> edge_map);

  // Name-keyed form; every node and edge must be mapped.
  static Diagram from_names(GraphPtr source, CatPtr target,
                            const std::map<std::string, std::string>& nodes,
                            const std::map<std::string, std::string>& edges);

  const GraphPtr& source() const { return source_; }
  const CatPtr& target() const { return target_; }
  std::size_t node(std::size_t n) const { return node_map_[n]; }
  std::size_t edge(std::size_t e) const { return edge_map_[e]; }
  const std::vector<std::size_t>& node_map() const { return node_map_; }
  const std::vector<std::size_t>& edge_map() const { return edge_map_; }

  bool operator==(const Diagram& other) const;

 private:
  GraphPtr source_;
  CatPtr target_;
  std::vector<std::size_t> node_map_;
  std::vector<std::size_t> edge_map_;
};

// A functor between finite categories.
class CatFunctor {
 public:
  CatFunctor(CatPtr source, CatPtr target, std::vector<std::size_t> object_map,
             std::vector<std::size_t> morphism_map);

  const CatPtr& source() const { return source_; }
  const CatPtr& target() const { return target_; }
  std::size_t object(std::size_t x) const { return object_map_[x]; }
  std::size_t morphism(std::size_t f) const { return morphism_map_[f]; }

 private:
  CatPtr source_;
  CatPtr target_;
  std::vector<std::size_t> object_map_;
  std::vector<std::size_t> morphism_map_;
};

// Violations of the domain/codomain, identity and composition laws.
std::vector<std::string> functor_law_violations(const CatFunctor& k);

// A functor from a finite category to finite sets.
//
// Element labels are kept sorted per object; the constructor accepts any
// order and remaps the arrow functions accordingly. Structural problems
// (wrong table sizes, out-of-range values, duplicate labels) throw
// ValidationError; the functor laws are checked by functor_law_violations.
class SetFunctor {
 public:
  SetFunctor(CatPtr source, std::vector<std::vector<std::string>> object_sets,
             std::vector<std::vector<std::size_t>> arrow_fns);

  // Name-keyed form. For a free category only the generators need to be
  // given; identities are implicit and composites are extended from
  // generators. Otherwise every non-identity morphism must be given.
  static SetFunctor from_names(CatPtr source,
                               const std::map<std::string, std::vector<std::string>>& sets,
                               const std::map<std::string, std::map<std::string, std::string>>& arrows);

  // Same set everywhere, every arrow the identity.
  static SetFunctor constant(CatPtr source, std::vector<std::string> elements);

  const CatPtr& source() const { return source_; }
  const FinCat& category() const { return *source_; }
  const std::vector<std::string>& set(std::size_t x) const { return object_sets_[x]; }
  std::size_t size(std::size_t x) const { return object_sets_[x].size(); }
  const std::vector<std::size_t>& fn(std::size_t f) const { return arrow_fns_[f]; }
  std::size_t apply(std::size_t f, std::size_t element) const { return arrow_fns_[f][element]; }
  std::size_t element_index(std::size_t x, const std::string& label) const;  // throws UnknownReference
  std::size_t total_size() const;

  const std::vector<std::vector<std::string>>& object_sets() const { return object_sets_; }
  const std::vector<std::vector<std::size_t>>& arrow_fns() const { return arrow_fns_; }

  bool operator==(const SetFunctor& other) const;

 private:
  CatPtr source_;
  std::vector<std::vector<std::string>> object_sets_;
  std::vector<std::vector<std::size_t>> arrow_fns_;
};

using SetFunctorPtr = std::shared_ptr<const SetFunctor>;

std::vector<std::string> functor_law_violations(const SetFunctor& f);

// Extend generator functions of a free category to all paths.
// `sizes[x]` is the set size at object x; keys of `generator_fns` are
// morphism indices of generators. Throws ValidationError if c is not free.
std::vector<std::vector<std::size_t>> extend_from_generators(
    const FinCat& c, const std::vector<std::size_t>& sizes,
    const std::map<std::size_t, std::vector<std::size_t>>& generator_fns);

// components[x] : source(x) -> target(x), element indices.
struct NatTransformation {
  SetFunctorPtr source;
  SetFunctorPtr target;
  std::vector<std::vector<std::size_t>> components;

  std::size_t at(std::size_t x, std::size_t element) const { return components[x][element]; }
  bool operator==(const NatTransformation& other) const;
};

// First morphism f and element at which the naturality square fails, or
// nullopt when natural.
std::optional<std::pair<std::size_t, std::size_t>> naturality_failure(const NatTransformation& a);
bool is_natural(const NatTransformation& a);

NatTransformation identity_transformation(const SetFunctorPtr& f);
// after ∘ before; throws SourceMismatch if the middle functors differ.
NatTransformation compose(const NatTransformation& after, const NatTransformation& before);

}  // namespace satkit::cat
