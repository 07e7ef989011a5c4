#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satkit/cat/graph.hpp"

namespace satkit::cat {

struct MorphismSpec {
  std::string id;
  std::string domain;
  std::string codomain;
};

// `after ∘ before = result`.
struct CompositeSpec {
  std::string after;
  std::string before;
  std::string result;
};

struct Morphism {
  std::string id;
  std::size_t domain;
  std::size_t codomain;

  bool operator==(const Morphism&) const = default;
};

// A finite category with an explicit composition table.
//
// Objects and morphisms are sorted by id, so their indices follow the
// lexicographic order of the ids. The constructor only checks referential
// integrity (unknown or duplicate ids, table entries on non-composable
// pairs); the category laws are checked by validate_category so that an
// invalid table can still be inspected.
class FinCat {
 public:
  FinCat() = default;
  FinCat(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
         std::vector<std::pair<std::string, std::string>> identities,
         std::vector<CompositeSpec> table);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  std::optional<std::size_t> find_object(std::string_view id) const;
  std::optional<std::size_t> find_morphism(std::string_view id) const;
  std::size_t object_index(std::string_view id) const;    // throws UnknownObject
  std::size_t morphism_index(std::string_view id) const;  // throws UnknownReference

  const std::string& object_name(std::size_t x) const { return objects_[x]; }
  const std::string& morphism_name(std::size_t m) const { return morphisms_[m].id; }
  std::size_t domain(std::size_t m) const { return morphisms_[m].domain; }
  std::size_t codomain(std::size_t m) const { return morphisms_[m].codomain; }
  std::size_t identity(std::size_t x) const { return identity_[x]; }
  bool is_identity(std::size_t m) const;

  // Table entry for `after ∘ before`, if present.
  std::optional<std::size_t> try_compose(std::size_t after, std::size_t before) const;
  // Throws ValidationError when the pair is not composable or the entry is missing.
  std::size_t compose(std::size_t after, std::size_t before) const;

  // Morphisms a -> b in index order.
  const std::vector<std::size_t>& hom(std::size_t a, std::size_t b) const {
    return hom_[a * objects_.size() + b];
  }

  // Free categories remember their generating edges: `path(m)` lists the
  // generators of m in application order (first applied first).
  bool is_free() const { return free_; }
  const std::vector<std::size_t>& generators() const { return generators_; }
  const std::vector<std::size_t>& path(std::size_t m) const { return paths_[m]; }

  bool operator==(const FinCat&) const = default;

 private:
  friend FinCat free_category(const FinGraph&);
  friend FinCat opposite_category(const FinCat&);

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::size_t> identity_;
  std::vector<std::size_t> table_;  // row-major [after][before], npos if absent
  std::vector<std::vector<std::size_t>> hom_;
  bool free_ = false;
  std::vector<std::size_t> generators_;
  std::vector<std::vector<std::size_t>> paths_;
};

using CatPtr = std::shared_ptr<const FinCat>;

struct LawViolation {
  std::string law;                      // identity-typing, typing, totality, left-unit, right-unit, associativity
  std::vector<std::string> witnesses;   // morphism ids involved

  std::string describe() const;
  bool operator==(const LawViolation&) const = default;
};

// Empty iff the table satisfies totality, typing, unit and associativity laws.
std::vector<LawViolation> validate_category(const FinCat& c);

// Path category of an acyclic graph. Identities are named `id(<node>)` and
// composite paths `g.f` (g after f). Throws CyclicGraph.
FinCat free_category(const FinGraph& g);

FinCat opposite_category(const FinCat& c);

// Adds identities named `id(<object>)` and their unit-law table entries,
// then the given non-identity morphisms and composites.
FinCat explicit_category(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
                         std::vector<CompositeSpec> composites);

// One object, only its identity.
FinCat terminal_category(const std::string& object = "pt");

// Nodes = objects, edges = all morphisms (identities included).
FinGraph underlying_graph(const FinCat& c);

std::string identity_name(std::string_view object);

// Resolves a morphism id, or a dot-composite `h.g.f` of ids (rightmost
// applied first). Throws UnknownReference, or ValidationError when the
// pieces do not compose.
std::size_t resolve_path(const FinCat& c, std::string_view path);

}  // namespace satkit::cat
