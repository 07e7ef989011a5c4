#include "satkit/lab/colimit.hpp"

#include <map>

#include "satkit/error.hpp"

namespace satkit::lab {

Colimit colimit_oracle(const cat::FinGraph& shape, const SetDiagram& d) {
  std::vector<std::vector<std::size_t>> label(shape.node_count());
  std::size_t next = 0;
  for (std::size_t n = 0; n < shape.node_count(); ++n)
    for (std::size_t i = 0; i < d.sizes[n]; ++i) label[n].push_back(next++);

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t e = 0; e < shape.edge_count(); ++e) {
      const auto& edge = shape.edges()[e];
      for (std::size_t i = 0; i < d.sizes[edge.source]; ++i) {
        std::size_t& a = label[edge.source][i];
        std::size_t& b = label[edge.target][d.edge_fns[e][i]];
        if (a < b) {
          b = a;
          changed = true;
        } else if (b < a) {
          a = b;
          changed = true;
        }
      }
    }
  }

  Colimit out;
  std::map<std::size_t, std::size_t> class_of_label;
  out.injections.resize(shape.node_count());
  for (std::size_t n = 0; n < shape.node_count(); ++n)
    for (std::size_t i = 0; i < d.sizes[n]; ++i) {
      auto [it, fresh] = class_of_label.emplace(label[n][i], out.classes.size());
      if (fresh) out.classes.emplace_back();
      out.classes[it->second].emplace_back(n, i);
      out.injections[n].push_back(it->second);
    }
  return out;
}

SetDiagram restrict_along(const span::SpanSchema& s, const cat::SetFunctor& t) {
  span::check_left_functor(s, t);
  SetDiagram d;
  for (std::size_t n = 0; n < s.shape().node_count(); ++n) d.sizes.push_back(t.size(s.left().node(n)));
  for (std::size_t e = 0; e < s.shape().edge_count(); ++e) d.edge_fns.push_back(t.fn(s.left().edge(e)));
  return d;
}

bool agrees_with_oracle(const span::SatelliteResult& r, const Colimit& c) {
  const auto& s = *r.span();
  if (s.y()->object_count() != 1) throw ValidationError("oracle comparison needs a terminal codomain");
  const std::size_t id = s.y()->identity(0);
  const std::size_t n_classes = r.functor()->size(0);
  if (n_classes != c.classes.size()) return false;
  std::vector<std::size_t> image(c.classes.size(), npos), preimage(n_classes, npos);
  for (std::size_t n = 0; n < s.shape().node_count(); ++n)
    for (std::size_t i = 0; i < c.injections[n].size(); ++i) {
      const std::size_t k = c.injections[n][i];
      const std::size_t target = r.class_of({id, n, i});
      if (image[k] == npos && preimage[target] == npos) {
        image[k] = target;
        preimage[target] = k;
      } else if (image[k] != target || preimage[target] != k) {
        return false;
      }
    }
  for (std::size_t k : image)
    if (k == npos) return false;
  return true;
}

}  // namespace satkit::lab
