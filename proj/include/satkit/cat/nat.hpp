#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "satkit/cat/functor.hpp"

namespace satkit::cat {

// Finite constraint problem whose constraints all read
// `value[to] == map[value[from]]`. Both the naturality squares of a
// transformation and the edge squares of a connecting morphism have this
// shape once a variable is introduced per (object, element).
class FunctionalCsp {
 public:
  std::size_t add_variable(std::size_t domain_size);
  void add_constraint(std::size_t from, std::size_t to, std::vector<std::size_t> map);
  // Keeps only values with allowed[value] true.
  void restrict(std::size_t variable, const std::vector<bool>& allowed);

  std::size_t variable_count() const { return domains_.size(); }
  std::size_t constraint_count(std::size_t v) const { return outgoing_[v].size() + incoming_[v].size(); }

  // All solutions, found by depth-first search over `order` with forced
  // propagation along constraints. Solutions are returned in the order the
  // search finds them; with `order` ascending and values tried ascending
  // that is lexicographic order. Throws EnumerationLimit past `limit`.
  std::vector<std::vector<std::size_t>> solve(const std::vector<std::size_t>& order,
                                              std::size_t limit = std::numeric_limits<std::size_t>::max()) const;

 private:
  struct Constraint {
    std::size_t from;
    std::size_t to;
    std::vector<std::size_t> map;
  };
  std::vector<std::size_t> domains_;
  std::vector<std::vector<bool>> allowed_;  // empty: whole domain
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> outgoing_;
  std::vector<std::vector<std::size_t>> incoming_;
};

// All natural transformations F -> G in lexicographic order of their
// component tables (objects in index order, elements in index order).
// Throws SourceMismatch if the source categories differ and
// EnumerationLimit if there are more than `limit`.
std::vector<NatTransformation> nat_set(const SetFunctorPtr& f, const SetFunctorPtr& g,
                                       std::size_t limit = std::numeric_limits<std::size_t>::max());

// A unary condition on one component value: alpha_object(element) must be
// an allowed value.
struct ComponentRestriction {
  std::size_t object;
  std::size_t element;
  std::vector<bool> allowed;  // indexed by elements of G(object)
};

// The elements of nat_set(f, g) meeting every restriction, in the same
// order, found without enumerating the rest.
std::vector<NatTransformation> nat_set(const SetFunctorPtr& f, const SetFunctorPtr& g,
                                       const std::vector<ComponentRestriction>& restrictions,
                                       std::size_t limit = std::numeric_limits<std::size_t>::max());

// The representable c(x, ?): at z the morphisms x -> z (labelled by their
// ids), acting by post-composition. Throws UnknownObject.
SetFunctor hom_functor(const CatPtr& c, std::size_t x);
SetFunctor hom_functor(const CatPtr& c, const std::string& x);

}  // namespace satkit::cat
