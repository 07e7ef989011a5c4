#include "satkit/ab/functor.hpp"

#include "satkit/error.hpp"

namespace satkit::ab {

AbFunctor::AbFunctor(CatPtr source, std::vector<FpAbelianGroup> groups, std::vector<IntMatrix> arrows)
    : source_(std::move(source)), groups_(std::move(groups)), arrows_(std::move(arrows)) {
  const auto& c = *source_;
  if (groups_.size() != c.object_count()) throw ValidationError("need one group per object");
  if (arrows_.size() != c.morphism_count()) throw ValidationError("need one arrow map per morphism");
  for (const auto& g : groups_) models_.emplace_back(g);
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    const auto& from = groups_[c.domain(f)];
    const auto& to = groups_[c.codomain(f)];
    const auto& a = arrows_[f];
    if (a.rows() != from.generators.size() || a.cols() != to.generators.size())
      throw ValidationError("arrow map of " + c.morphism_name(f) + " has shape " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
    for (std::size_t r = 0; r < from.relations.rows(); ++r)
      if (!models_[c.codomain(f)].is_zero(from.relations.row(r) * a))
        throw ValidationError("arrow map of " + c.morphism_name(f) + " does not respect relation " +
                              std::to_string(r + 1));
  }
}

AbFunctor AbFunctor::from_names(CatPtr source, const std::map<std::string, FpAbelianGroup>& groups,
                                const std::map<std::string, std::map<std::string, std::vector<Integer>>>& arrows) {
  const auto& c = *source;
  std::vector<FpAbelianGroup> gs(c.object_count());
  std::vector<bool> seen(c.object_count(), false);
  for (const auto& [name, g] : groups) {
    const std::size_t x = c.object_index(name);
    gs[x] = g;
    seen[x] = true;
  }
  for (std::size_t x = 0; x < c.object_count(); ++x)
    if (!seen[x]) throw ValidationError("no group given for object " + c.object_name(x));

  std::vector<IntMatrix> maps(c.morphism_count());
  std::vector<bool> given(c.morphism_count(), false);
  for (const auto& [name, images] : arrows) {
    const std::size_t f = c.morphism_index(name);
    if (c.is_identity(f)) throw ValidationError("identity " + name + " is implicit");
    if (c.is_free() && c.path(f).size() != 1) throw ValidationError(name + " is a composite; give generators only");
    const auto& from = gs[c.domain(f)];
    const auto& to = gs[c.codomain(f)];
    IntMatrix a(from.generators.size(), to.generators.size());
    for (const auto& [gen, word] : images) {
      const std::size_t r = from.generator_index(gen);
      if (word.size() != to.generators.size()) throw ValidationError("image of " + gen + " under " + name + " has the wrong length");
      for (std::size_t k = 0; k < word.size(); ++k) a(r, k) = word[k];
    }
    maps[f] = std::move(a);
    given[f] = true;
  }
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) {
      maps[f] = IntMatrix::identity(gs[c.domain(f)].generators.size());
    } else if (!given[f]) {
      if (!c.is_free()) throw ValidationError("no arrow map given for " + c.morphism_name(f));
      if (c.path(f).size() == 1) {
        maps[f] = IntMatrix(gs[c.domain(f)].generators.size(), gs[c.codomain(f)].generators.size());
      }
    }
  }
  if (c.is_free())
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      const auto& p = c.path(f);
      if (p.size() < 2) continue;
      // Rows are images of generators, so a path composes left to right.
      IntMatrix a = maps[p[0]];
      for (std::size_t i = 1; i < p.size(); ++i) a = a * maps[p[i]];
      maps[f] = std::move(a);
    }
  return AbFunctor(std::move(source), std::move(gs), std::move(maps));
}

std::vector<Integer> AbFunctor::apply(std::size_t f, const std::vector<Integer>& word) const {
  return word * arrows_[f];
}

bool AbFunctor::finite() const {
  for (const auto& m : models_)
    if (!m.invariants().finite()) return false;
  return true;
}

bool AbFunctor::operator==(const AbFunctor& other) const {
  return (source_ == other.source_ || *source_ == *other.source_) && groups_ == other.groups_ &&
         arrows_ == other.arrows_;
}

std::vector<std::string> functor_law_violations(const AbFunctor& t) {
  std::vector<std::string> out;
  const auto& c = t.category();
  auto unit = [](std::size_t n, std::size_t j) {
    std::vector<Integer> e(n, 0);
    e[j] = 1;
    return e;
  };
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const std::size_t n = t.group(x).generators.size();
    for (std::size_t j = 0; j < n; ++j)
      if (!t.model(x).equal(t.apply(c.identity(x), unit(n, j)), unit(n, j)))
        out.push_back("identity of " + c.object_name(x) + " moves " + t.group(x).generators[j]);
  }
  for (std::size_t g = 0; g < c.morphism_count(); ++g)
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      auto h = c.try_compose(g, f);
      if (!h) continue;
      const std::size_t n = t.group(c.domain(f)).generators.size();
      for (std::size_t j = 0; j < n; ++j)
        if (!t.model(c.codomain(g)).equal(t.apply(g, t.apply(f, unit(n, j))), t.apply(*h, unit(n, j))))
          out.push_back(c.morphism_name(g) + " after " + c.morphism_name(f) + " differs from " +
                        c.morphism_name(*h) + " on " + t.group(c.domain(f)).generators[j]);
    }
  return out;
}

UnderlyingSets underlying(const AbFunctor& t) {
  UnderlyingSets out;
  const auto& c = t.category();
  std::vector<std::vector<std::string>> sets;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    out.groups.emplace_back(t.group(x));
    sets.push_back(out.groups.back().labels());
  }
  std::vector<std::vector<std::size_t>> fns;
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    const auto& from = out.groups[c.domain(f)];
    const auto& to = out.groups[c.codomain(f)];
    fns.emplace_back();
    for (std::size_t i = 0; i < from.size(); ++i) fns.back().push_back(to.of_word(t.apply(f, from.word(i))));
  }
  out.set = std::make_shared<cat::SetFunctor>(t.source(), std::move(sets), std::move(fns));
  return out;
}

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<std::size_t>& f) {
  for (std::size_t a = 0; a < from.size(); ++a)
    for (std::size_t b = 0; b < from.size(); ++b)
      if (f[from.add(a, b)] != to.add(f[a], f[b])) return false;
  return true;
}

}  // namespace satkit::ab
