#include "satkit/cat/category.hpp"

#include <algorithm>
#include <map>

#include "satkit/error.hpp"

namespace satkit::cat {

std::string identity_name(std::string_view object) { return "id(" + std::string(object) + ")"; }

FinCat::FinCat(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
               std::vector<std::pair<std::string, std::string>> identities,
               std::vector<CompositeSpec> table) {
  std::sort(objects.begin(), objects.end());
  if (auto dup = std::adjacent_find(objects.begin(), objects.end()); dup != objects.end())
    throw ValidationError("duplicate object '" + *dup + "'");
  objects_ = std::move(objects);

  std::sort(morphisms.begin(), morphisms.end(),
            [](const MorphismSpec& a, const MorphismSpec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    if (i > 0 && morphisms[i].id == morphisms[i - 1].id)
      throw ValidationError("duplicate morphism '" + morphisms[i].id + "'");
    morphisms_.push_back(Morphism{morphisms[i].id, object_index(morphisms[i].domain),
                                  object_index(morphisms[i].codomain)});
  }

  identity_.assign(objects_.size(), npos);
  for (const auto& [object, morphism] : identities) {
    std::size_t x = object_index(object);
    if (identity_[x] != npos) throw ValidationError("two identities for object '" + object + "'");
    identity_[x] = morphism_index(morphism);
  }
  for (std::size_t x = 0; x < objects_.size(); ++x)
    if (identity_[x] == npos) throw ValidationError("object '" + objects_[x] + "' has no identity");

  const std::size_t m = morphisms_.size();
  table_.assign(m * m, npos);
  for (const auto& entry : table) {
    std::size_t g = morphism_index(entry.after);
    std::size_t f = morphism_index(entry.before);
    std::size_t h = morphism_index(entry.result);
    if (morphisms_[f].codomain != morphisms_[g].domain)
      throw ValidationError("compose " + entry.after + "." + entry.before + ": not a composable pair");
    std::size_t& slot = table_[g * m + f];
    if (slot != npos && slot != h)
      throw ValidationError("compose " + entry.after + "." + entry.before + " given twice");
    slot = h;
  }

  hom_.assign(objects_.size() * objects_.size(), {});
  for (std::size_t i = 0; i < m; ++i)
    hom_[morphisms_[i].domain * objects_.size() + morphisms_[i].codomain].push_back(i);
  paths_.assign(m, {});
}

std::optional<std::size_t> FinCat::find_object(std::string_view id) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), id);
  if (it == objects_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - objects_.begin());
}

std::optional<std::size_t> FinCat::find_morphism(std::string_view id) const {
  auto it = std::lower_bound(morphisms_.begin(), morphisms_.end(), id,
                             [](const Morphism& a, std::string_view v) { return a.id < v; });
  if (it == morphisms_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - morphisms_.begin());
}

std::size_t FinCat::object_index(std::string_view id) const {
  if (auto x = find_object(id)) return *x;
  throw UnknownObject("no object '" + std::string(id) + "'");
}

std::size_t FinCat::morphism_index(std::string_view id) const {
  if (auto f = find_morphism(id)) return *f;
  throw UnknownReference("no morphism '" + std::string(id) + "'");
}

bool FinCat::is_identity(std::size_t m) const {
  return identity_[morphisms_[m].domain] == m;
}

std::optional<std::size_t> FinCat::try_compose(std::size_t after, std::size_t before) const {
  std::size_t h = table_[after * morphisms_.size() + before];
  if (h == npos) return std::nullopt;
  return h;
}

std::size_t FinCat::compose(std::size_t after, std::size_t before) const {
  if (morphisms_[before].codomain != morphisms_[after].domain)
    throw ValidationError("cannot compose " + morphisms_[after].id + " after " + morphisms_[before].id);
  if (auto h = try_compose(after, before)) return *h;
  throw ValidationError("composition table has no entry for " + morphisms_[after].id + "." +
                        morphisms_[before].id);
}

std::string LawViolation::describe() const {
  std::string out = law + " (";
  for (std::size_t i = 0; i < witnesses.size(); ++i) out += (i ? ", " : "") + witnesses[i];
  return out + ")";
}

std::vector<LawViolation> validate_category(const FinCat& c) {
  std::vector<LawViolation> report;
  const std::size_t m = c.morphism_count();
  auto name = [&](std::size_t f) { return c.morphism_name(f); };

  for (std::size_t x = 0; x < c.object_count(); ++x) {
    std::size_t id = c.identity(x);
    if (c.domain(id) != x || c.codomain(id) != x)
      report.push_back({"identity-typing", {name(id)}});
  }
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (c.codomain(f) != c.domain(g)) continue;
      auto h = c.try_compose(g, f);
      if (!h) {
        report.push_back({"totality", {name(g), name(f)}});
      } else if (c.domain(*h) != c.domain(f) || c.codomain(*h) != c.codomain(g)) {
        report.push_back({"typing", {name(g), name(f), name(*h)}});
      }
    }
  for (std::size_t f = 0; f < m; ++f) {
    auto right = c.try_compose(f, c.identity(c.domain(f)));
    if (right && *right != f) report.push_back({"right-unit", {name(f)}});
    auto left = c.try_compose(c.identity(c.codomain(f)), f);
    if (left && *left != f) report.push_back({"left-unit", {name(f)}});
  }
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t g = 0; g < m; ++g) {
      if (c.codomain(g) != c.domain(h)) continue;
      auto hg = c.try_compose(h, g);
      for (std::size_t f = 0; f < m; ++f) {
        if (c.codomain(f) != c.domain(g)) continue;
        auto gf = c.try_compose(g, f);
        if (!hg || !gf) continue;
        if (c.codomain(*gf) != c.domain(h) || c.codomain(f) != c.domain(*hg)) continue;
        auto a = c.try_compose(h, *gf);
        auto b = c.try_compose(*hg, f);
        if (a && b && *a != *b) report.push_back({"associativity", {name(h), name(g), name(f)}});
      }
    }
  return report;
}

FinCat free_category(const FinGraph& g) {
  if (has_directed_cycle(g)) throw CyclicGraph("graph has a directed cycle; its path category is infinite");

  struct Path {
    std::size_t start;
    std::size_t end;
    std::vector<std::size_t> edges;  // graph edge indices, first applied first
  };
  auto path_name = [&](const Path& p) {
    if (p.edges.empty()) return identity_name(g.nodes()[p.start]);
    std::string out;
    for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) {
      if (!out.empty()) out += '.';
      out += g.edges()[*it].id;
    }
    return out;
  };

  std::vector<Path> paths;
  for (std::size_t n = 0; n < g.node_count(); ++n) {
    std::vector<Path> frontier{Path{n, n, {}}};
    while (!frontier.empty()) {
      std::vector<Path> next;
      for (const auto& p : frontier) {
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
          if (g.edges()[e].source != p.end) continue;
          Path q = p;
          q.end = g.edges()[e].target;
          q.edges.push_back(e);
          next.push_back(std::move(q));
        }
        paths.push_back(p);
      }
      frontier = std::move(next);
    }
  }

  std::vector<MorphismSpec> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::string> names;
  for (const auto& p : paths) {
    std::string id = path_name(p);
    morphisms.push_back({id, g.nodes()[p.start], g.nodes()[p.end]});
    if (p.edges.empty()) identities.emplace_back(g.nodes()[p.start], id);
    names[{p.start, p.edges}] = id;
  }
  std::vector<CompositeSpec> table;
  for (const auto& f : paths)
    for (const auto& h : paths) {
      if (h.start != f.end) continue;
      std::vector<std::size_t> joined = f.edges;
      joined.insert(joined.end(), h.edges.begin(), h.edges.end());
      table.push_back({path_name(h), path_name(f), names.at({f.start, joined})});
    }

  FinCat c(std::vector<std::string>(g.nodes()), std::move(morphisms), std::move(identities), std::move(table));
  c.free_ = true;
  for (const auto& p : paths) {
    std::size_t m = c.morphism_index(path_name(p));
    for (std::size_t e : p.edges) c.paths_[m].push_back(c.morphism_index(g.edges()[e].id));
    if (p.edges.size() == 1) c.generators_.push_back(m);
  }
  std::sort(c.generators_.begin(), c.generators_.end());
  return c;
}

FinCat opposite_category(const FinCat& c) {
  FinCat op = c;
  const std::size_t m = c.morphism_count();
  for (auto& f : op.morphisms_) std::swap(f.domain, f.codomain);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) op.table_[f * m + g] = c.table_[g * m + f];
  const std::size_t n = c.object_count();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) op.hom_[a * n + b] = c.hom_[b * n + a];
  for (auto& p : op.paths_) std::reverse(p.begin(), p.end());
  return op;
}

FinCat explicit_category(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
                         std::vector<CompositeSpec> composites) {
  std::vector<std::pair<std::string, std::string>> identities;
  const std::size_t given = morphisms.size();
  for (const auto& x : objects) {
    std::string id = identity_name(x);
    identities.emplace_back(x, id);
    morphisms.push_back({id, x, x});
    composites.push_back({id, id, id});
  }
  for (std::size_t i = 0; i < given; ++i) {
    const auto& f = morphisms[i];
    composites.push_back({f.id, identity_name(f.domain), f.id});
    composites.push_back({identity_name(f.codomain), f.id, f.id});
  }
  return FinCat(std::move(objects), std::move(morphisms), std::move(identities), std::move(composites));
}

FinCat terminal_category(const std::string& object) {
  std::string id = identity_name(object);
  return FinCat({object}, {{id, object, object}}, {{object, id}}, {{id, id, id}});
}

std::size_t resolve_path(const FinCat& c, std::string_view path) {
  if (auto f = c.find_morphism(path)) return *f;
  std::vector<std::string_view> pieces;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = path.find('.', start);
    pieces.push_back(path.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  if (pieces.size() < 2) throw UnknownReference("no morphism '" + std::string(path) + "'");
  std::size_t out = c.morphism_index(pieces.back());
  for (auto it = pieces.rbegin() + 1; it != pieces.rend(); ++it) out = c.compose(c.morphism_index(*it), out);
  return out;
}

FinGraph underlying_graph(const FinCat& c) {
  std::vector<EdgeSpec> edges;
  for (const auto& f : c.morphisms())
    edges.push_back({f.id, c.object_name(f.domain), c.object_name(f.codomain)});
  return FinGraph(c.objects(), std::move(edges));
}

}  // namespace satkit::cat
