#include "satkit/ab/group.hpp"

#include <algorithm>
#include <numeric>

#include "satkit/error.hpp"

namespace satkit::ab {

FpAbelianGroup::FpAbelianGroup(std::vector<std::string> gens, IntMatrix rels)
    : generators(std::move(gens)), relations(std::move(rels)) {
  if (relations.rows() == 0 && relations.cols() != generators.size()) relations = IntMatrix(0, generators.size());
  if (relations.cols() != generators.size())
    throw ValidationError("relation matrix has " + std::to_string(relations.cols()) + " columns for " +
                          std::to_string(generators.size()) + " generators");
  std::vector<std::string> sorted = generators;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("duplicate generator '" + *std::adjacent_find(sorted.begin(), sorted.end()) + "'");
}

std::size_t FpAbelianGroup::generator_index(const std::string& label) const {
  auto it = std::find(generators.begin(), generators.end(), label);
  if (it == generators.end()) throw UnknownReference("no generator '" + label + "'");
  return static_cast<std::size_t>(it - generators.begin());
}

Integer InvariantFactors::order() const {
  if (rank > 0) throw InfiniteGroup("group has free rank " + std::to_string(rank));
  Integer n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::string InvariantFactors::to_string() const {
  std::vector<std::string> parts;
  for (const auto& d : torsion) parts.push_back("Z/" + d.str());
  if (rank == 1) parts.push_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

FpAbelianGroup free_abelian(std::vector<std::string> basis) {
  const std::size_t n = basis.size();
  return FpAbelianGroup(std::move(basis), IntMatrix(0, n));
}

InvariantFactors canonical_form(const FpAbelianGroup& g) { return GroupModel(g).invariants(); }

GroupModel::GroupModel(FpAbelianGroup g) : group_(std::move(g)), snf_(smith_normal_form(group_.relations)) {
  const auto diag = snf_.diagonal();
  for (std::size_t j = 0; j < generator_count(); ++j) {
    moduli_.push_back(j < diag.size() ? diag[j] : Integer(0));
    if (moduli_.back() == 0) ++invariants_.rank;
    else if (moduli_.back() > 1) invariants_.torsion.push_back(moduli_.back());
  }
}

std::vector<Integer> GroupModel::normal_form(const std::vector<Integer>& coefficients) const {
  if (coefficients.size() != generator_count()) throw ValidationError("word has the wrong number of coefficients");
  std::vector<Integer> y = coefficients * snf_.w;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (moduli_[j] == 0) continue;
    y[j] %= moduli_[j];
    if (y[j] < 0) y[j] += moduli_[j];
  }
  return y;
}

std::vector<Integer> GroupModel::word(const std::vector<Integer>& normal) const { return normal * snf_.w_inverse; }

bool GroupModel::is_zero(const std::vector<Integer>& coefficients) const {
  const auto y = normal_form(coefficients);
  return std::all_of(y.begin(), y.end(), [](const Integer& v) { return v == 0; });
}

bool GroupModel::equal(const std::vector<Integer>& a, const std::vector<Integer>& b) const {
  return normal_form(a) == normal_form(b);
}

FiniteGroup::FiniteGroup(const FpAbelianGroup& g) : model_(g) {
  if (!model_.invariants().finite())
    throw InfiniteGroup("group has free rank " + std::to_string(model_.invariants().rank));
  const auto& moduli = model_.moduli();
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < moduli.size(); ++j)
    if (moduli[j] > 1) active.push_back(j);

  std::vector<Integer> cur(moduli.size(), 0);
  std::vector<std::pair<std::string, std::vector<Integer>>> elements;
  while (true) {
    std::string label;
    if (active.empty()) {
      label = "0";
    } else if (active.size() == 1) {
      label = cur[active[0]].str();
    } else {
      label = "(";
      for (std::size_t k = 0; k < active.size(); ++k) label += (k ? "," : "") + cur[active[k]].str();
      label += ")";
    }
    elements.emplace_back(std::move(label), cur);
    std::size_t k = active.size();
    while (k > 0) {
      std::size_t j = active[k - 1];
      if (++cur[j] < moduli[j]) break;
      cur[j] = 0;
      --k;
    }
    if (k == 0) break;
  }
  std::sort(elements.begin(), elements.end());
  for (auto& [label, normal] : elements) {
    by_normal_[normal] = labels_.size();
    labels_.push_back(label);
    words_.push_back(model_.word(normal));
    normals_.push_back(std::move(normal));
  }
  zero_ = by_normal_.at(std::vector<Integer>(moduli.size(), 0));
  const std::size_t n = size();
  sum_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Integer> w = words_[a];
      for (std::size_t j = 0; j < w.size(); ++j) w[j] += words_[b][j];
      sum_[a * n + b] = of_word(w);
    }
    std::vector<Integer> w = words_[a];
    for (auto& v : w) v = -v;
    negation_.push_back(of_word(w));
  }
}

std::size_t FiniteGroup::index_of_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UnknownReference("no group element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t FiniteGroup::of_word(const std::vector<Integer>& coefficients) const {
  return by_normal_.at(model_.normal_form(coefficients));
}

std::size_t FiniteGroup::generator(std::size_t j) const {
  std::vector<Integer> e(model_.generator_count(), 0);
  e.at(j) = 1;
  return of_word(e);
}

FpAbelianGroup cayley_presentation(const std::vector<std::string>& labels,
                                   const std::vector<std::vector<std::size_t>>& sum, std::size_t zero) {
  const std::size_t n = labels.size();
  std::vector<std::vector<Integer>> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::vector<Integer> r(n, 0);
      r[a] += 1;
      r[b] += 1;
      r[sum[a][b]] -= 1;
      rows.push_back(std::move(r));
    }
  if (n > 0) {
    std::vector<Integer> r(n, 0);
    r[zero] = 1;
    rows.push_back(std::move(r));
  }
  return FpAbelianGroup(labels, IntMatrix::from_rows(n, rows));
}

}  // namespace satkit::ab
