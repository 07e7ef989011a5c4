#include "satkit/lab/duality.hpp"

#include <algorithm>
#include <utility>

#include "satkit/error.hpp"

namespace satkit::lab {

namespace {

// An arrow of Set° from `from` to `to`: a function to -> from.
struct OpArrow {
  std::vector<std::size_t> fn;
};

// g ∘ f in Set° is f ∘ g in Set.
OpArrow op_compose(const OpArrow& g, const OpArrow& f) {
  OpArrow out;
  for (std::size_t v : g.fn) out.fn.push_back(f.fn[v]);
  return out;
}

}  // namespace

DualityAuditor::DualityAuditor(span::SpanPtr s)
    : span_(std::move(s)), op_(span::opposite_span(*span_)), involution_(span::opposite_span(op_) == *span_) {}

DualityReport DualityAuditor::audit(const span::ConnectingMorphism& d) const {
  if (d.span != span_ && !(*d.span == *span_)) throw SourceMismatch("connecting morphism is over a different span");
  const auto& s = *span_;
  const auto& op = op_;
  DualityReport rep;
  for (std::size_t e : span::failing_edges(d)) rep.direct_failures.push_back(s.shape().edges()[e].id);
  rep.involution = involution_;

  // Over s° = (Y° <- S° -> X°): left is V° on Y°, right is T° on X°, components δ°(S) : V°(G S) -> T°(F S).
  const auto& t = *d.left;
  const auto& v = *d.right;
  for (const auto& edge : op.shape().edges()) {
    const std::size_t from = s.shape().node_index(op.shape().nodes()[edge.source]);
    const std::size_t to = s.shape().node_index(op.shape().nodes()[edge.target]);
    // The op categories share morphism names with the originals.
    const std::size_t e = op.shape().edge_index(edge.id);
    const std::size_t g_morphism = s.y()->morphism_index(op.x()->morphism_name(op.left().edge(e)));
    const std::size_t f_morphism = s.x()->morphism_index(op.y()->morphism_name(op.right().edge(e)));
    OpArrow v_op{v.fn(g_morphism)};  // V°(G° s°)
    OpArrow t_op{t.fn(f_morphism)};  // T°(F° s°)
    OpArrow delta_from{d.components[from]};
    OpArrow delta_to{d.components[to]};
    // T°(F° s°) ∘ δ°(from) = δ°(to) ∘ V°(G° s°) in Set°.
    if (op_compose(t_op, delta_from).fn != op_compose(delta_to, v_op).fn)
      rep.reversed_failures.push_back(edge.id);
  }
  std::sort(rep.direct_failures.begin(), rep.direct_failures.end());
  std::sort(rep.reversed_failures.begin(), rep.reversed_failures.end());
  return rep;
}

DualityReport duality_audit(const span::ConnectingMorphism& d) { return DualityAuditor(d.span).audit(d); }

}  // namespace satkit::lab
