#include "satkit/span/span.hpp"

#include <numeric>

#include "satkit/cat/nat.hpp"
#include "satkit/error.hpp"

namespace satkit::span {

using cat::FinCat;
using cat::FinGraph;
using cat::SetFunctor;

namespace {

void require_valid(const FinCat& c, const char* which) {
  auto report = cat::validate_category(c);
  if (!report.empty())
    throw ValidationError(std::string(which) + " is not a category: " + report.front().describe());
}

bool same_ptr_or_value(const SetFunctorPtr& a, const SetFunctorPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace

SpanSchema::SpanSchema(GraphPtr shape, Diagram left, Diagram right)
    : shape_(std::move(shape)), left_(std::move(left)), right_(std::move(right)) {
  if (!(left_.source() == shape_ || *left_.source() == *shape_))
    throw SourceMismatch("left diagram is not defined on the span shape");
  if (!(right_.source() == shape_ || *right_.source() == *shape_))
    throw SourceMismatch("right diagram is not defined on the span shape");
  require_valid(*left_.target(), "X");
  if (right_.target() != left_.target()) require_valid(*right_.target(), "Y");
}

bool SpanSchema::operator==(const SpanSchema& other) const {
  return *shape_ == *other.shape_ && left_ == other.left_ && right_ == other.right_;
}

SpanSchema build_span(GraphPtr shape, Diagram left, Diagram right) {
  return SpanSchema(std::move(shape), std::move(left), std::move(right));
}

SpanSchema build_span(GraphPtr shape, CatPtr x, const DiagramNames& left, CatPtr y, const DiagramNames& right) {
  auto resolve = [&](const CatPtr& c, const DiagramNames& names) {
    std::map<std::string, std::string> edges;
    for (const auto& [edge, path] : names.edges) edges[edge] = c->morphism_name(cat::resolve_path(*c, path));
    return Diagram::from_names(shape, c, names.nodes, edges);
  };
  Diagram f = resolve(x, left);
  Diagram g = resolve(y, right);
  return SpanSchema(std::move(shape), std::move(f), std::move(g));
}

SpanSchema opposite_span(const SpanSchema& s) {
  auto shape = std::make_shared<FinGraph>(s.shape().opposite());
  auto x_op = std::make_shared<FinCat>(cat::opposite_category(*s.x()));
  auto y_op = s.x() == s.y() ? x_op : std::make_shared<FinCat>(cat::opposite_category(*s.y()));
  Diagram left(shape, y_op, s.right().node_map(), s.right().edge_map());
  Diagram right(shape, x_op, s.left().node_map(), s.left().edge_map());
  return SpanSchema(shape, std::move(left), std::move(right));
}

SpanSchema identity_span(const CatPtr& x) {
  auto shape = std::make_shared<FinGraph>(cat::underlying_graph(*x));
  std::vector<std::size_t> nodes(x->object_count());
  std::iota(nodes.begin(), nodes.end(), 0);
  std::vector<std::size_t> edges(x->morphism_count());
  std::iota(edges.begin(), edges.end(), 0);
  Diagram f(shape, x, nodes, edges);
  Diagram g(shape, x, nodes, edges);
  return SpanSchema(shape, std::move(f), std::move(g));
}

bool ConnectingMorphism::operator==(const ConnectingMorphism& other) const {
  return (span == other.span || *span == *other.span) && same_ptr_or_value(left, other.left) &&
         same_ptr_or_value(right, other.right) && components == other.components;
}

std::vector<std::size_t> failing_edges(const ConnectingMorphism& d) {
  std::vector<std::size_t> out;
  const SpanSchema& s = *d.span;
  for (std::size_t e = 0; e < s.shape().edge_count(); ++e) {
    const auto& edge = s.shape().edges()[e];
    const std::size_t fs = s.left().edge(e);
    const std::size_t gs = s.right().edge(e);
    for (std::size_t t = 0; t < d.left->size(s.left().node(edge.source)); ++t)
      if (d.right->apply(gs, d.at(edge.source, t)) != d.at(edge.target, d.left->apply(fs, t))) {
        out.push_back(e);
        break;
      }
  }
  return out;
}

bool is_connecting(const ConnectingMorphism& d) { return failing_edges(d).empty(); }

void check_left_functor(const SpanSchema& s, const SetFunctor& t) {
  if (!(t.source() == s.x() || t.category() == *s.x()))
    throw SourceMismatch("functor is not defined on the left category X of the span");
}

void check_right_functor(const SpanSchema& s, const SetFunctor& v) {
  if (!(v.source() == s.y() || v.category() == *s.y()))
    throw SourceMismatch("functor is not defined on the right category Y of the span");
}

std::vector<ConnectingMorphism> connecting_morphisms(const SpanPtr& s, const SetFunctorPtr& t, const SetFunctorPtr& v,
                                                     std::size_t limit) {
  check_left_functor(*s, *t);
  check_right_functor(*s, *v);
  const FinGraph& shape = s->shape();

  cat::FunctionalCsp csp;
  std::vector<std::size_t> first(shape.node_count());
  for (std::size_t n = 0; n < shape.node_count(); ++n) {
    first[n] = csp.variable_count();
    for (std::size_t i = 0; i < t->size(s->left().node(n)); ++i) csp.add_variable(v->size(s->right().node(n)));
  }
  for (std::size_t e = 0; e < shape.edge_count(); ++e) {
    const auto& edge = shape.edges()[e];
    const std::size_t fs = s->left().edge(e);
    for (std::size_t i = 0; i < t->size(s->left().node(edge.source)); ++i)
      csp.add_constraint(first[edge.source] + i, first[edge.target] + t->apply(fs, i), v->fn(s->right().edge(e)));
  }
  std::vector<std::size_t> order(csp.variable_count());
  std::iota(order.begin(), order.end(), 0);

  std::vector<ConnectingMorphism> out;
  for (const auto& solution : csp.solve(order, limit)) {
    ConnectingMorphism d{s, t, v, std::vector<std::vector<std::size_t>>(shape.node_count())};
    for (std::size_t n = 0; n < shape.node_count(); ++n)
      d.components[n].assign(solution.begin() + static_cast<std::ptrdiff_t>(first[n]),
                             solution.begin() + static_cast<std::ptrdiff_t>(first[n] + t->size(s->left().node(n))));
    out.push_back(std::move(d));
  }
  return out;
}

SpanSchema sequence_span(const CatPtr& x, const std::vector<SigmaDiagram>& members,
                         const std::vector<SigmaMorphism>& morphisms) {
  const FinCat& c = *x;
  std::map<std::string, const SigmaDiagram*> by_name;
  std::vector<std::string> nodes;
  for (const auto& m : members) {
    if (c.codomain(m.first) != c.domain(m.second))
      throw EndpointMismatch("member " + m.name + ": " + c.morphism_name(m.second) + " does not follow " +
                             c.morphism_name(m.first));
    by_name[m.name] = &m;
    nodes.push_back(m.name);
  }

  std::vector<cat::EdgeSpec> edges;
  for (const auto& d : morphisms) {
    auto src = by_name.find(d.source);
    auto dst = by_name.find(d.target);
    if (src == by_name.end() || dst == by_name.end())
      throw UnknownReference("morphism " + d.name + " connects an unknown member");
    const SigmaDiagram& a = *src->second;
    const SigmaDiagram& b = *dst->second;
    auto endpoints = [&](std::size_t comp, std::size_t from, std::size_t to, const char* where) {
      if (c.domain(comp) != from || c.codomain(comp) != to)
        throw NotADiagramMorphism(d.name + ": component at " + where + " (" + c.morphism_name(comp) +
                                  ") has the wrong endpoints");
    };
    endpoints(d.at_start, c.domain(a.first), c.domain(b.first), "start");
    endpoints(d.at_middle, c.codomain(a.first), c.codomain(b.first), "middle");
    endpoints(d.at_end, c.codomain(a.second), c.codomain(b.second), "end");
    if (c.compose(b.first, d.at_start) != c.compose(d.at_middle, a.first))
      throw NotADiagramMorphism(d.name + ": square start->middle does not commute");
    if (c.compose(b.second, d.at_middle) != c.compose(d.at_end, a.second))
      throw NotADiagramMorphism(d.name + ": square middle->end does not commute");
    edges.push_back({d.name, d.source, d.target});
  }

  auto shape = std::make_shared<FinGraph>(nodes, edges);
  std::vector<std::size_t> f_nodes(shape->node_count()), g_nodes(shape->node_count());
  for (const auto& m : members) {
    std::size_t n = shape->node_index(m.name);
    f_nodes[n] = c.codomain(m.second);
    g_nodes[n] = c.domain(m.first);
  }
  std::vector<std::size_t> f_edges(shape->edge_count()), g_edges(shape->edge_count());
  for (const auto& d : morphisms) {
    std::size_t e = shape->edge_index(d.name);
    f_edges[e] = d.at_end;
    g_edges[e] = d.at_start;
  }
  Diagram f(shape, x, std::move(f_nodes), std::move(f_edges));
  Diagram g(shape, x, std::move(g_nodes), std::move(g_edges));
  return SpanSchema(shape, std::move(f), std::move(g));
}

}  // namespace satkit::span
