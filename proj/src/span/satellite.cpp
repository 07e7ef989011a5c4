#include "satkit/span/satellite.hpp"

#include <algorithm>
#include <numeric>

#include "satkit/error.hpp"
#include "satkit/span/closure.hpp"

namespace satkit::span {

using cat::FinCat;
using cat::SetFunctor;

namespace {

bool same_functor(const SetFunctorPtr& a, const SetFunctorPtr& b) { return a == b || *a == *b; }

std::size_t position_in(const std::vector<std::size_t>& sorted, std::size_t value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it == sorted.end() || *it != value) return npos;
  return static_cast<std::size_t>(it - sorted.begin());
}

std::string padded_label(const std::string& prefix, std::size_t i, std::size_t count) {
  std::string digits = std::to_string(i);
  std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  return prefix + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

std::size_t SatelliteResult::class_of(const Triple& t) const {
  const FinCat& y = *span_->y();
  if (t.morphism >= y.morphism_count() || t.node >= span_->shape().node_count())
    throw UnknownTriple("triple index out of range");
  const std::size_t target = y.codomain(t.morphism);
  const std::size_t start = block_start_[target][t.node];
  if (start == npos || span_->right().node(t.node) != y.domain(t.morphism) ||
      t.element >= input_->size(span_->left().node(t.node)))
    throw UnknownTriple("not a triple of the satellite: " + describe(t));
  const std::size_t width = y.hom(y.domain(t.morphism), target).size();
  return class_index_[target][start + t.element * width + hom_position_[t.morphism]];
}

std::string SatelliteResult::describe(const Triple& t) const {
  const SpanSchema& s = *span_;
  return "cls(" + s.y()->morphism_name(t.morphism) + "," + s.shape().nodes()[t.node] + "," +
         input_->set(s.left().node(t.node))[t.element] + ")";
}

SatelliteResult right_satellite(const SpanPtr& s, const SetFunctorPtr& t) {
  check_left_functor(*s, *t);
  const FinCat& y = *s->y();
  const auto& shape = s->shape();
  const Diagram& f = s->left();
  const Diagram& g = s->right();

  SatelliteResult r;
  r.span_ = s;
  r.input_ = t;
  r.hom_position_.resize(y.morphism_count());
  for (std::size_t m = 0; m < y.morphism_count(); ++m)
    r.hom_position_[m] = position_in(y.hom(y.domain(m), y.codomain(m)), m);
  r.block_start_.assign(y.object_count(), std::vector<std::size_t>(shape.node_count(), npos));
  r.class_index_.resize(y.object_count());
  r.classes_.resize(y.object_count());

  std::vector<std::vector<std::string>> labels(y.object_count());
  for (std::size_t target = 0; target < y.object_count(); ++target) {
    // Enumerate triples in (Y', node, element, morphism) order.
    std::vector<Triple> triples;
    for (std::size_t source = 0; source < y.object_count(); ++source) {
      const auto& homs = y.hom(source, target);
      if (homs.empty()) continue;
      for (std::size_t n = 0; n < shape.node_count(); ++n) {
        if (g.node(n) != source) continue;
        r.block_start_[target][n] = triples.size();
        for (std::size_t e = 0; e < t->size(f.node(n)); ++e)
          for (std::size_t m : homs) triples.push_back(Triple{m, n, e});
      }
    }
    auto index = [&](const Triple& tr) {
      const std::size_t width = y.hom(y.domain(tr.morphism), target).size();
      return r.block_start_[target][tr.node] + tr.element * width + r.hom_position_[tr.morphism];
    };

    // cls(y ∘ G(s), S1, t) ~ cls(y, S2, T(F(s))(t)) for every edge s : S1 -> S2.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t e = 0; e < shape.edge_count(); ++e) {
      const auto& edge = shape.edges()[e];
      const std::size_t gs = g.edge(e);
      const std::size_t fs = f.edge(e);
      for (std::size_t m : y.hom(g.node(edge.target), target)) {
        const std::size_t mg = y.compose(m, gs);
        for (std::size_t el = 0; el < t->size(f.node(edge.source)); ++el)
          pairs.emplace_back(index(Triple{mg, edge.source, el}), index(Triple{m, edge.target, t->apply(fs, el)}));
      }
    }
    Partition p = equivalence_closure(triples.size(), pairs);

    std::vector<SatelliteClass> classes;
    std::vector<std::string> class_labels;
    for (const auto& members : p.classes) {
      SatelliteClass c{triples[members.front()], {}};
      for (std::size_t i : members) c.members.push_back(triples[i]);
      class_labels.push_back(r.describe(c.representative));
      classes.push_back(std::move(c));
    }
    std::vector<std::size_t> order(classes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return class_labels[a] < class_labels[b]; });
    std::vector<std::size_t> rank(classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      rank[order[i]] = i;
      r.classes_[target].push_back(std::move(classes[order[i]]));
      labels[target].push_back(class_labels[order[i]]);
    }
    r.class_index_[target].resize(triples.size());
    for (std::size_t i = 0; i < triples.size(); ++i) r.class_index_[target][i] = rank[p.class_of[i]];
  }

  // cls(y, S, t) |-> cls(f ∘ y, S, t).
  std::vector<std::vector<std::size_t>> fns(y.morphism_count());
  for (std::size_t m = 0; m < y.morphism_count(); ++m) {
    const std::size_t a = y.domain(m);
    for (const auto& c : r.classes_[a]) {
      std::size_t image = npos;
      for (const auto& tr : c.members) {
        std::size_t v = r.class_of(Triple{y.compose(m, tr.morphism), tr.node, tr.element});
        if (image == npos) image = v;
        if (v != image)
          throw IllDefined("arrow action of " + y.morphism_name(m) + " separates " + r.describe(c.representative) +
                           " and " + r.describe(tr));
      }
      fns[m].push_back(image);
    }
  }
  r.functor_ = std::make_shared<SetFunctor>(s->y(), std::move(labels), std::move(fns));

  r.unit_ = ConnectingMorphism{s, t, r.functor_, std::vector<std::vector<std::size_t>>(shape.node_count())};
  for (std::size_t n = 0; n < shape.node_count(); ++n) {
    const std::size_t id = y.identity(g.node(n));
    for (std::size_t el = 0; el < t->size(f.node(n)); ++el)
      r.unit_.components[n].push_back(r.class_of(Triple{id, n, el}));
  }
  return r;
}

NatTransformation mediating_to(const SatelliteResult& result, const ConnectingMorphism& candidate) {
  if (!(*candidate.span == *result.span()) || !same_functor(candidate.left, result.input()))
    throw SourceMismatch("candidate does not share the span and functor of the satellite");
  const FinCat& y = *result.span()->y();
  const SetFunctor& target = *candidate.right;

  NatTransformation gamma{result.functor(), candidate.right, std::vector<std::vector<std::size_t>>(y.object_count())};
  for (std::size_t obj = 0; obj < y.object_count(); ++obj)
    for (const auto& c : result.classes(obj)) {
      std::size_t value = npos;
      for (const auto& tr : c.members) {
        std::size_t v = target.apply(tr.morphism, candidate.at(tr.node, tr.element));
        if (value == npos) value = v;
        if (v != value)
          throw IllDefined("mediating map disagrees on " + result.describe(c.representative) + " and " +
                           result.describe(tr));
      }
      gamma.components[obj].push_back(value);
    }
  if (auto bad = cat::naturality_failure(gamma))
    throw IllDefined("mediating map is not natural at " + y.morphism_name(bad->first));
  return gamma;
}

ConnectingMorphism after_unit(const SatelliteResult& result, const NatTransformation& alpha) {
  if (!same_functor(alpha.source, result.functor()))
    throw SourceMismatch("transformation does not start at the satellite");
  const SpanSchema& s = *result.span();
  ConnectingMorphism d{result.span(), result.input(), alpha.target, result.unit().components};
  for (std::size_t n = 0; n < d.components.size(); ++n)
    for (auto& v : d.components[n]) v = alpha.at(s.right().node(n), v);
  return d;
}

std::size_t LeftSatelliteResult::element_of(std::size_t x, const NatTransformation& phi) const {
  auto it = lookup_[x].find(phi.components);
  return it == lookup_[x].end() ? npos : it->second;
}

LeftSatelliteResult left_satellite(const SpanPtr& s, const SetFunctorPtr& v, std::size_t limit) {
  check_right_functor(*s, *v);
  const FinCat& x = *s->x();
  const FinCat& y = *s->y();
  const auto& shape = s->shape();

  LeftSatelliteResult r;
  r.span_ = s;
  r.input_ = v;
  std::vector<std::vector<std::string>> labels(x.object_count());
  for (std::size_t obj = 0; obj < x.object_count(); ++obj) {
    auto rep = std::make_shared<SetFunctor>(cat::hom_functor(s->x(), obj));
    r.representables_.push_back(right_satellite(s, rep));
    r.elements_.push_back(cat::nat_set(r.representables_.back().functor(), v, limit));
    r.lookup_.emplace_back();
    const std::size_t count = r.elements_.back().size();
    for (std::size_t i = 0; i < count; ++i) {
      r.lookup_.back()[r.elements_.back()[i].components] = i;
      labels[obj].push_back(padded_label("phi", i, count));
    }
  }

  // For g : a -> b, φ |-> φ ∘ S¹(X(g, ?)), acting on classes by cls(y, S, h) |-> cls(y, S, h ∘ g).
  std::vector<std::vector<std::size_t>> fns(x.morphism_count());
  for (std::size_t m = 0; m < x.morphism_count(); ++m) {
    const std::size_t a = x.domain(m);
    const std::size_t b = x.codomain(m);
    const SatelliteResult& from = r.representables_[a];
    const SatelliteResult& to = r.representables_[b];
    for (const auto& phi : r.elements_[a]) {
      NatTransformation moved{to.functor(), v, std::vector<std::vector<std::size_t>>(y.object_count())};
      for (std::size_t obj = 0; obj < y.object_count(); ++obj)
        for (const auto& c : to.classes(obj)) {
          std::size_t value = npos;
          for (const auto& tr : c.members) {
            const std::size_t fs = s->left().node(tr.node);
            const std::size_t h = x.hom(b, fs)[tr.element];
            const std::size_t hg = position_in(x.hom(a, fs), x.compose(h, m));
            std::size_t w = phi.at(obj, from.class_of(Triple{tr.morphism, tr.node, hg}));
            if (value == npos) value = w;
            if (w != value)
              throw IllDefined("left satellite action of " + x.morphism_name(m) + " disagrees on " +
                               to.describe(c.representative) + " and " + to.describe(tr));
          }
          moved.components[obj].push_back(value);
        }
      std::size_t j = r.element_of(b, moved);
      if (j == npos) throw IllDefined("left satellite action of " + x.morphism_name(m) + " leaves the natural maps");
      fns[m].push_back(j);
    }
  }
  r.functor_ = std::make_shared<SetFunctor>(s->x(), std::move(labels), std::move(fns));

  // ϑ(S)(φ) = φ_{G(S)}(cls(1_{G(S)}, S, 1_{F(S)})).
  r.counit_ = ConnectingMorphism{s, r.functor_, v, std::vector<std::vector<std::size_t>>(shape.node_count())};
  for (std::size_t n = 0; n < shape.node_count(); ++n) {
    const std::size_t fx = s->left().node(n);
    const std::size_t gy = s->right().node(n);
    const SatelliteResult& rep = r.representables_[fx];
    const std::size_t unit_class =
        rep.class_of(Triple{y.identity(gy), n, position_in(x.hom(fx, fx), x.identity(fx))});
    for (const auto& phi : r.elements_[fx]) r.counit_.components[n].push_back(phi.at(gy, unit_class));
  }
  return r;
}

NatTransformation mediating_from(const LeftSatelliteResult& result, const ConnectingMorphism& candidate) {
  if (!(*candidate.span == *result.span()) || !same_functor(candidate.right, result.input()))
    throw SourceMismatch("candidate does not share the span and functor of the left satellite");
  const SpanSchema& s = *result.span();
  const FinCat& x = *s.x();
  const FinCat& y = *s.y();
  const SetFunctor& source = *candidate.left;
  const SetFunctor& v = *result.input();

  NatTransformation gamma{candidate.left, result.functor(), std::vector<std::vector<std::size_t>>(x.object_count())};
  for (std::size_t obj = 0; obj < x.object_count(); ++obj) {
    const SatelliteResult& rep = result.representable(obj);
    for (std::size_t el = 0; el < source.size(obj); ++el) {
      // φ(cls(y, S, h)) = V(y)(δ'(S)(T'(h)(t'))).
      NatTransformation phi{rep.functor(), result.input(), std::vector<std::vector<std::size_t>>(y.object_count())};
      for (std::size_t target = 0; target < y.object_count(); ++target)
        for (const auto& c : rep.classes(target)) {
          std::size_t value = npos;
          for (const auto& tr : c.members) {
            const std::size_t h = x.hom(obj, s.left().node(tr.node))[tr.element];
            std::size_t w = v.apply(tr.morphism, candidate.at(tr.node, source.apply(h, el)));
            if (value == npos) value = w;
            if (w != value)
              throw IllDefined("mediating map disagrees on " + rep.describe(c.representative) + " and " +
                               rep.describe(tr));
          }
          phi.components[target].push_back(value);
        }
      std::size_t j = result.element_of(obj, phi);
      if (j == npos) throw IllDefined("mediating map produces a non-natural family at " + x.object_name(obj));
      gamma.components[obj].push_back(j);
    }
  }
  if (auto bad = cat::naturality_failure(gamma))
    throw IllDefined("mediating map is not natural at " + x.morphism_name(bad->first));
  return gamma;
}

ConnectingMorphism before_counit(const LeftSatelliteResult& result, const NatTransformation& beta) {
  if (!same_functor(beta.target, result.functor()))
    throw SourceMismatch("transformation does not end at the left satellite");
  const SpanSchema& s = *result.span();
  ConnectingMorphism d{result.span(), beta.source, result.input(),
                       std::vector<std::vector<std::size_t>>(s.shape().node_count())};
  for (std::size_t n = 0; n < d.components.size(); ++n) {
    const std::size_t fx = s.left().node(n);
    for (std::size_t el = 0; el < beta.source->size(fx); ++el)
      d.components[n].push_back(result.counit().at(n, beta.at(fx, el)));
  }
  return d;
}

NatTransformation satellite_of_nat(const SatelliteResult& from, const SatelliteResult& to,
                                   const NatTransformation& alpha) {
  if (!same_functor(alpha.source, from.input()) || !same_functor(alpha.target, to.input()) ||
      !(*from.span() == *to.span()))
    throw SourceMismatch("transformation does not match the satellites");
  const SpanSchema& s = *from.span();
  const FinCat& y = *s.y();
  NatTransformation out{from.functor(), to.functor(), std::vector<std::vector<std::size_t>>(y.object_count())};
  for (std::size_t obj = 0; obj < y.object_count(); ++obj)
    for (const auto& c : from.classes(obj)) {
      std::size_t value = npos;
      for (const auto& tr : c.members) {
        std::size_t w = to.class_of(Triple{tr.morphism, tr.node, alpha.at(s.left().node(tr.node), tr.element)});
        if (value == npos) value = w;
        if (w != value) throw IllDefined("satellite of transformation disagrees on " + from.describe(tr));
      }
      out.components[obj].push_back(value);
    }
  if (auto bad = cat::naturality_failure(out))
    throw IllDefined("satellite of transformation is not natural at " + y.morphism_name(bad->first));
  return out;
}

NatTransformation satellite_of_nat(const SpanPtr& s, const NatTransformation& alpha) {
  check_left_functor(*s, *alpha.source);
  check_left_functor(*s, *alpha.target);
  return satellite_of_nat(right_satellite(s, alpha.source), right_satellite(s, alpha.target), alpha);
}

}  // namespace satkit::span
