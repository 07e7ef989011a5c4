#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "satkit/ab/matrix.hpp"
#include "satkit/ab/snf.hpp"

namespace satkit::ab {

// <generators | relations>, one relation per row.
struct FpAbelianGroup {
  std::vector<std::string> generators;
  IntMatrix relations;  // rows = relations, cols = generators

  FpAbelianGroup() = default;
  FpAbelianGroup(std::vector<std::string> gens, IntMatrix rels);

  std::size_t generator_index(const std::string& label) const;  // throws UnknownReference
  bool operator==(const FpAbelianGroup&) const = default;
};

struct InvariantFactors {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // each >= 2, each dividing the next

  bool finite() const { return rank == 0; }
  Integer order() const;  // throws InfiniteGroup when rank > 0
  // "0", "Z/2", "Z/2 + Z/6 + Z^3".
  std::string to_string() const;
  bool operator==(const InvariantFactors&) const = default;
};

FpAbelianGroup free_abelian(std::vector<std::string> basis);
InvariantFactors canonical_form(const FpAbelianGroup& g);

// Normal forms of group elements through the Smith form of the relations:
// a coefficient vector x maps to x·W, reduced modulo each d_j.
class GroupModel {
 public:
  explicit GroupModel(FpAbelianGroup g);

  const FpAbelianGroup& presentation() const { return group_; }
  const InvariantFactors& invariants() const { return invariants_; }
  std::size_t generator_count() const { return group_.generators.size(); }

  std::vector<Integer> normal_form(const std::vector<Integer>& coefficients) const;
  // Coefficients over the generators of an element given in normal form.
  std::vector<Integer> word(const std::vector<Integer>& normal) const;
  bool is_zero(const std::vector<Integer>& coefficients) const;
  bool equal(const std::vector<Integer>& a, const std::vector<Integer>& b) const;

  // d_j for every coordinate j; 0 marks a free coordinate.
  const std::vector<Integer>& moduli() const { return moduli_; }

 private:
  FpAbelianGroup group_;
  SmithForm snf_;
  std::vector<Integer> moduli_;
  InvariantFactors invariants_;
};

// Explicit element list of a finite group, in label order. Labels are the
// coordinates over the nontrivial invariant factors: "k" for one factor,
// "(k1,k2,...)" for several, "0" for the trivial group.
class FiniteGroup {
 public:
  explicit FiniteGroup(const FpAbelianGroup& g);  // throws InfiniteGroup

  const GroupModel& model() const { return model_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of_label(const std::string& label) const;  // throws UnknownReference

  std::size_t zero() const { return zero_; }
  std::size_t add(std::size_t a, std::size_t b) const { return sum_[a * size() + b]; }
  std::size_t negate(std::size_t a) const { return negation_[a]; }
  std::size_t of_word(const std::vector<Integer>& coefficients) const;
  const std::vector<Integer>& word(std::size_t i) const { return words_[i]; }
  std::size_t generator(std::size_t j) const;

 private:
  GroupModel model_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Integer>> normals_;
  std::vector<std::vector<Integer>> words_;
  std::map<std::vector<Integer>, std::size_t> by_normal_;
  std::vector<std::size_t> sum_;
  std::vector<std::size_t> negation_;
  std::size_t zero_ = 0;
};

// One generator per element of a finite group, named by its label, with
// relations a + b - (a+b) and 0 read off the addition table.
FpAbelianGroup cayley_presentation(const std::vector<std::string>& labels,
                                   const std::vector<std::vector<std::size_t>>& sum, std::size_t zero);

}  // namespace satkit::ab
