#include "satkit/cat/functor.hpp"

#include <algorithm>
#include <numeric>

#include "satkit/error.hpp"

namespace satkit::cat {

namespace {

bool same_category(const CatPtr& a, const CatPtr& b) { return a == b || (a && b && *a == *b); }

bool same_functor(const SetFunctorPtr& a, const SetFunctorPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace

Diagram::Diagram(GraphPtr source, CatPtr target, std::vector<std::size_t> node_map,
                 std::vector<std::size_t> edge_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      node_map_(std::move(node_map)),
      edge_map_(std::move(edge_map)) {
  if (node_map_.size() != source_->node_count() || edge_map_.size() != source_->edge_count())
    throw EndpointMismatch("diagram does not map every node and edge");
  for (std::size_t n = 0; n < node_map_.size(); ++n)
    if (node_map_[n] >= target_->object_count())
      throw EndpointMismatch("node '" + source_->nodes()[n] + "' is sent to an unknown object");
  for (std::size_t e = 0; e < edge_map_.size(); ++e) {
    const Edge& edge = source_->edges()[e];
    if (edge_map_[e] >= target_->morphism_count())
      throw EndpointMismatch("edge '" + edge.id + "' is sent to an unknown morphism");
    if (target_->domain(edge_map_[e]) != node_map_[edge.source] ||
        target_->codomain(edge_map_[e]) != node_map_[edge.target])
      throw EndpointMismatch("edge '" + edge.id + "' is sent to " + target_->morphism_name(edge_map_[e]) +
                             ", whose endpoints differ from the images of its nodes");
  }
}

Diagram Diagram::from_names(GraphPtr source, CatPtr target, const std::map<std::string, std::string>& nodes,
                            const std::map<std::string, std::string>& edges) {
  std::vector<std::size_t> node_map(source->node_count(), npos);
  std::vector<std::size_t> edge_map(source->edge_count(), npos);
  for (const auto& [node, object] : nodes) node_map[source->node_index(node)] = target->object_index(object);
  for (const auto& [edge, morphism] : edges)
    edge_map[source->edge_index(edge)] = target->morphism_index(morphism);
  for (std::size_t n = 0; n < node_map.size(); ++n)
    if (node_map[n] == npos) throw EndpointMismatch("node '" + source->nodes()[n] + "' is not mapped");
  for (std::size_t e = 0; e < edge_map.size(); ++e)
    if (edge_map[e] == npos) throw EndpointMismatch("edge '" + source->edges()[e].id + "' is not mapped");
  return Diagram(std::move(source), std::move(target), std::move(node_map), std::move(edge_map));
}

bool Diagram::operator==(const Diagram& other) const {
  return (source_ == other.source_ || *source_ == *other.source_) && same_category(target_, other.target_) &&
         node_map_ == other.node_map_ && edge_map_ == other.edge_map_;
}

CatFunctor::CatFunctor(CatPtr source, CatPtr target, std::vector<std::size_t> object_map,
                       std::vector<std::size_t> morphism_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      object_map_(std::move(object_map)),
      morphism_map_(std::move(morphism_map)) {
  if (object_map_.size() != source_->object_count() || morphism_map_.size() != source_->morphism_count())
    throw ValidationError("functor does not map every object and morphism");
  for (std::size_t x : object_map_)
    if (x >= target_->object_count()) throw ValidationError("functor maps to an unknown object");
  for (std::size_t f : morphism_map_)
    if (f >= target_->morphism_count()) throw ValidationError("functor maps to an unknown morphism");
}

std::vector<std::string> functor_law_violations(const CatFunctor& k) {
  std::vector<std::string> out;
  const FinCat& c = *k.source();
  const FinCat& d = *k.target();
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    if (d.domain(k.morphism(f)) != k.object(c.domain(f)) || d.codomain(k.morphism(f)) != k.object(c.codomain(f)))
      out.push_back("endpoints of " + c.morphism_name(f));
  for (std::size_t x = 0; x < c.object_count(); ++x)
    if (k.morphism(c.identity(x)) != d.identity(k.object(x))) out.push_back("identity of " + c.object_name(x));
  if (!out.empty()) return out;
  for (std::size_t g = 0; g < c.morphism_count(); ++g)
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      if (c.codomain(f) != c.domain(g)) continue;
      if (k.morphism(c.compose(g, f)) != d.compose(k.morphism(g), k.morphism(f)))
        out.push_back("composition " + c.morphism_name(g) + "." + c.morphism_name(f));
    }
  return out;
}

SetFunctor::SetFunctor(CatPtr source, std::vector<std::vector<std::string>> object_sets,
                       std::vector<std::vector<std::size_t>> arrow_fns)
    : source_(std::move(source)) {
  const FinCat& c = *source_;
  if (object_sets.size() != c.object_count()) throw ValidationError("set functor must give a set per object");
  if (arrow_fns.size() != c.morphism_count())
    throw ValidationError("set functor must give a function per morphism");

  // Sort labels and remember where each old index went.
  std::vector<std::vector<std::size_t>> relabel(c.object_count());
  object_sets_.resize(c.object_count());
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    auto& labels = object_sets[x];
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    relabel[x].resize(labels.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      relabel[x][order[i]] = i;
      object_sets_[x].push_back(labels[order[i]]);
    }
    if (auto dup = std::adjacent_find(object_sets_[x].begin(), object_sets_[x].end());
        dup != object_sets_[x].end())
      throw ValidationError("duplicate element '" + *dup + "' at object " + c.object_name(x));
  }

  arrow_fns_.resize(c.morphism_count());
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    const std::size_t a = c.domain(f);
    const std::size_t b = c.codomain(f);
    if (arrow_fns[f].size() != object_sets_[a].size())
      throw ValidationError("function for " + c.morphism_name(f) + " is not total on its domain");
    arrow_fns_[f].resize(arrow_fns[f].size());
    for (std::size_t i = 0; i < arrow_fns[f].size(); ++i) {
      if (arrow_fns[f][i] >= object_sets_[b].size())
        throw ValidationError("function for " + c.morphism_name(f) + " leaves its codomain");
      arrow_fns_[f][relabel[a][i]] = relabel[b][arrow_fns[f][i]];
    }
  }
}

SetFunctor SetFunctor::from_names(CatPtr source, const std::map<std::string, std::vector<std::string>>& sets,
                                  const std::map<std::string, std::map<std::string, std::string>>& arrows) {
  const FinCat& c = *source;
  std::vector<std::vector<std::string>> object_sets(c.object_count());
  std::vector<bool> seen(c.object_count(), false);
  for (const auto& [object, elements] : sets) {
    std::size_t x = c.object_index(object);
    object_sets[x] = elements;
    std::sort(object_sets[x].begin(), object_sets[x].end());
    seen[x] = true;
  }
  for (std::size_t x = 0; x < c.object_count(); ++x)
    if (!seen[x]) throw ValidationError("no set given for object " + c.object_name(x));

  auto lookup = [&](std::size_t x, const std::string& label, const std::string& where) {
    auto it = std::lower_bound(object_sets[x].begin(), object_sets[x].end(), label);
    if (it == object_sets[x].end() || *it != label)
      throw UnknownReference("element '" + label + "' is not in the set at " + c.object_name(x) + " (" + where + ")");
    return static_cast<std::size_t>(it - object_sets[x].begin());
  };

  std::map<std::size_t, std::vector<std::size_t>> given;
  for (const auto& [morphism, table] : arrows) {
    std::size_t f = c.morphism_index(morphism);
    std::vector<std::size_t> fn(object_sets[c.domain(f)].size(), npos);
    for (const auto& [from, to] : table)
      fn[lookup(c.domain(f), from, morphism)] = lookup(c.codomain(f), to, morphism);
    for (std::size_t i = 0; i < fn.size(); ++i)
      if (fn[i] == npos)
        throw ValidationError("function for " + morphism + " is undefined on '" + object_sets[c.domain(f)][i] + "'");
    given[f] = std::move(fn);
  }

  std::vector<std::vector<std::size_t>> fns(c.morphism_count());
  if (c.is_free()) {
    for (const auto& [f, fn] : given)
      if (c.path(f).size() != 1) throw ValidationError("free category: give functions only on generators, not " + c.morphism_name(f));
    std::vector<std::size_t> sizes;
    for (const auto& s : object_sets) sizes.push_back(s.size());
    for (std::size_t g : c.generators())
      if (!given.count(g)) throw ValidationError("no function given for generator " + c.morphism_name(g));
    fns = extend_from_generators(c, sizes, given);
  } else {
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      if (auto it = given.find(f); it != given.end()) {
        fns[f] = it->second;
      } else if (c.is_identity(f)) {
        fns[f].resize(object_sets[c.domain(f)].size());
        std::iota(fns[f].begin(), fns[f].end(), 0);
      } else {
        throw ValidationError("no function given for morphism " + c.morphism_name(f));
      }
    }
  }
  return SetFunctor(std::move(source), std::move(object_sets), std::move(fns));
}

SetFunctor SetFunctor::constant(CatPtr source, std::vector<std::string> elements) {
  const FinCat& c = *source;
  std::vector<std::size_t> id(elements.size());
  std::iota(id.begin(), id.end(), 0);
  return SetFunctor(std::move(source), std::vector<std::vector<std::string>>(c.object_count(), elements),
                    std::vector<std::vector<std::size_t>>(c.morphism_count(), id));
}

std::size_t SetFunctor::element_index(std::size_t x, const std::string& label) const {
  const auto& s = object_sets_[x];
  auto it = std::lower_bound(s.begin(), s.end(), label);
  if (it == s.end() || *it != label)
    throw UnknownReference("no element '" + label + "' at object " + source_->object_name(x));
  return static_cast<std::size_t>(it - s.begin());
}

std::size_t SetFunctor::total_size() const {
  std::size_t n = 0;
  for (const auto& s : object_sets_) n += s.size();
  return n;
}

bool SetFunctor::operator==(const SetFunctor& other) const {
  return same_category(source_, other.source_) && object_sets_ == other.object_sets_ &&
         arrow_fns_ == other.arrow_fns_;
}

std::vector<std::string> functor_law_violations(const SetFunctor& t) {
  std::vector<std::string> out;
  const FinCat& c = t.category();
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const auto& fn = t.fn(c.identity(x));
    for (std::size_t i = 0; i < fn.size(); ++i)
      if (fn[i] != i) {
        out.push_back("identity of " + c.object_name(x) + " moves '" + t.set(x)[i] + "'");
        break;
      }
  }
  for (std::size_t g = 0; g < c.morphism_count(); ++g)
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      if (c.codomain(f) != c.domain(g)) continue;
      auto h = c.try_compose(g, f);
      if (!h) continue;
      for (std::size_t i = 0; i < t.size(c.domain(f)); ++i)
        if (t.apply(*h, i) != t.apply(g, t.apply(f, i))) {
          out.push_back("composition " + c.morphism_name(g) + "." + c.morphism_name(f) + " at '" +
                        t.set(c.domain(f))[i] + "'");
          break;
        }
    }
  return out;
}

std::vector<std::vector<std::size_t>> extend_from_generators(
    const FinCat& c, const std::vector<std::size_t>& sizes,
    const std::map<std::size_t, std::vector<std::size_t>>& generator_fns) {
  if (!c.is_free()) throw ValidationError("extend_from_generators needs a free category");
  std::vector<std::vector<std::size_t>> fns(c.morphism_count());
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    fns[f].resize(sizes[c.domain(f)]);
    for (std::size_t i = 0; i < fns[f].size(); ++i) {
      std::size_t v = i;
      for (std::size_t g : c.path(f)) v = generator_fns.at(g)[v];
      fns[f][i] = v;
    }
  }
  return fns;
}

bool NatTransformation::operator==(const NatTransformation& other) const {
  return same_functor(source, other.source) && same_functor(target, other.target) &&
         components == other.components;
}

std::optional<std::pair<std::size_t, std::size_t>> naturality_failure(const NatTransformation& a) {
  const FinCat& c = a.source->category();
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    const std::size_t x = c.domain(f);
    const std::size_t y = c.codomain(f);
    for (std::size_t i = 0; i < a.source->size(x); ++i)
      if (a.target->apply(f, a.at(x, i)) != a.at(y, a.source->apply(f, i))) return std::pair{f, i};
  }
  return std::nullopt;
}

bool is_natural(const NatTransformation& a) { return !naturality_failure(a).has_value(); }

NatTransformation identity_transformation(const SetFunctorPtr& f) {
  NatTransformation id{f, f, {}};
  for (std::size_t x = 0; x < f->category().object_count(); ++x) {
    id.components.emplace_back(f->size(x));
    std::iota(id.components.back().begin(), id.components.back().end(), 0);
  }
  return id;
}

NatTransformation compose(const NatTransformation& after, const NatTransformation& before) {
  if (!same_functor(before.target, after.source))
    throw SourceMismatch("composed transformations do not share the middle functor");
  NatTransformation out{before.source, after.target, before.components};
  for (std::size_t x = 0; x < out.components.size(); ++x)
    for (auto& v : out.components[x]) v = after.at(x, v);
  return out;
}

}  // namespace satkit::cat
