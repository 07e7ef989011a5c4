#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "satkit/ab/group.hpp"
#include "satkit/cat/functor.hpp"

namespace satkit::ab {

using cat::CatPtr;

// A functor into abelian groups. arrow(f) has one row per generator of the
// domain group: the image of that generator as a word in the codomain's
// generators.
class AbFunctor {
 public:
  // Throws ValidationError on wrong shapes or when an arrow map does not
  // send relations to zero.
  AbFunctor(CatPtr source, std::vector<FpAbelianGroup> groups, std::vector<IntMatrix> arrows);

  // Name-keyed form; arrows map generator labels to words. For a free
  // category only the generators are needed, otherwise every non-identity
  // morphism. Missing generator images default to 0.
  static AbFunctor from_names(CatPtr source, const std::map<std::string, FpAbelianGroup>& groups,
                              const std::map<std::string, std::map<std::string, std::vector<Integer>>>& arrows);

  const CatPtr& source() const { return source_; }
  const cat::FinCat& category() const { return *source_; }
  const FpAbelianGroup& group(std::size_t x) const { return groups_[x]; }
  const GroupModel& model(std::size_t x) const { return models_[x]; }
  const IntMatrix& arrow(std::size_t f) const { return arrows_[f]; }
  const std::vector<IntMatrix>& arrows() const { return arrows_; }
  // Image of a word under arrow f.
  std::vector<Integer> apply(std::size_t f, const std::vector<Integer>& word) const;

  bool finite() const;
  bool operator==(const AbFunctor& other) const;

 private:
  CatPtr source_;
  std::vector<FpAbelianGroup> groups_;
  std::vector<GroupModel> models_;
  std::vector<IntMatrix> arrows_;
};

using AbFunctorPtr = std::shared_ptr<const AbFunctor>;

std::vector<std::string> functor_law_violations(const AbFunctor& t);

// The functor of underlying sets, with each object's element list; element
// i of set->set(x) is groups[x].label(i). Throws InfiniteGroup.
struct UnderlyingSets {
  cat::SetFunctorPtr set;
  std::vector<FiniteGroup> groups;
};
UnderlyingSets underlying(const AbFunctor& t);

// Whether f(a + b) = f(a) + f(b) for all a, b, with f given on elements.
bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<std::size_t>& f);

}  // namespace satkit::ab
