#include "satkit/dsl/tasks.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "satkit/ab/satellite.hpp"
#include "satkit/error.hpp"
#include "satkit/lab/adjunction.hpp"
#include "satkit/lab/duality.hpp"
#include "satkit/lab/preservation.hpp"
#include "satkit/lab/random.hpp"
#include "satkit/lab/universality.hpp"
#include "satkit/span/satellite.hpp"

namespace satkit::dsl {

using nlohmann::json;

namespace {

json integer_json(const ab::Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

// Images of every non-identity morphism, by element label.
json arrows_json(const cat::SetFunctor& f) {
  const auto& c = f.category();
  json out = json::object();
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    json fn = json::object();
    for (std::size_t i = 0; i < f.size(c.domain(m)); ++i)
      fn[f.set(c.domain(m))[i]] = f.set(c.codomain(m))[f.apply(m, i)];
    out[c.morphism_name(m)] = std::move(fn);
  }
  return out;
}

json connecting_json(const span::ConnectingMorphism& d) {
  const auto& shape = d.span->shape();
  json out = json::object();
  for (std::size_t n = 0; n < shape.node_count(); ++n) {
    json comp = json::object();
    const auto& from = d.left->set(d.span->left().node(n));
    const auto& to = d.right->set(d.span->right().node(n));
    for (std::size_t i = 0; i < from.size(); ++i) comp[from[i]] = to[d.at(n, i)];
    out[shape.nodes()[n]] = std::move(comp);
  }
  return out;
}

json universality_json(const lab::UniversalityReport& r) {
  return {{"candidates", r.candidates}, {"pairs", r.pairs}, {"failures", r.failures},
          {"passed", r.passed()},       {"messages", r.messages}};
}

json right_json(const span::SatelliteResult& r) {
  const auto& y = *r.span()->y();
  json objects = json::object();
  for (std::size_t obj = 0; obj < y.object_count(); ++obj) {
    json classes = json::array();
    for (std::size_t k = 0; k < r.classes(obj).size(); ++k) {
      const auto& cls = r.classes(obj)[k];
      std::vector<std::string> members;
      for (const auto& t : cls.members) members.push_back(r.describe(t));
      std::sort(members.begin(), members.end());
      classes.push_back({{"label", r.functor()->set(obj)[k]},
                         {"representative", r.describe(cls.representative)},
                         {"members", members}});
    }
    objects[y.object_name(obj)] = {{"size", r.functor()->size(obj)}, {"classes", std::move(classes)}};
  }
  return {{"objects", std::move(objects)}, {"arrows", arrows_json(*r.functor())}, {"unit", connecting_json(r.unit())}};
}

json left_json(const span::LeftSatelliteResult& l) {
  const auto& x = *l.span()->x();
  const auto& y = *l.span()->y();
  json objects = json::object();
  for (std::size_t obj = 0; obj < x.object_count(); ++obj) {
    const auto& rep = *l.representable(obj).functor();
    json elements = json::array();
    for (std::size_t k = 0; k < l.elements(obj).size(); ++k) {
      json comps = json::object();
      for (std::size_t b = 0; b < y.object_count(); ++b) {
        json comp = json::object();
        for (std::size_t c = 0; c < rep.size(b); ++c) comp[rep.set(b)[c]] = l.input()->set(b)[l.elements(obj)[k].at(b, c)];
        comps[y.object_name(b)] = std::move(comp);
      }
      elements.push_back({{"label", l.functor()->set(obj)[k]}, {"components", std::move(comps)}});
    }
    objects[x.object_name(obj)] = {{"size", l.functor()->size(obj)}, {"elements", std::move(elements)}};
  }
  return {{"objects", std::move(objects)}, {"arrows", arrows_json(*l.functor())}, {"counit", connecting_json(l.counit())}};
}

json groups_json(const ab::AbFunctor& f) {
  const auto& c = f.category();
  json out = json::object();
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const auto inv = f.model(x).invariants();
    json torsion = json::array();
    for (const auto& d : inv.torsion) torsion.push_back(integer_json(d));
    out[c.object_name(x)] = {{"generators", f.group(x).generators},
                             {"rank", inv.rank},
                             {"torsion", std::move(torsion)},
                             {"group", inv.to_string()}};
  }
  return out;
}

struct Context {
  const Workspace& w;
  const RunOptions& options;
  lab::Rng rng;
  const TaskDecl& task;

  const span::SpanPtr& span_arg(std::size_t i) const { return w.find_span(task.args[i].name)->span; }
  const cat::SetFunctorPtr& set_arg(std::size_t i) const { return w.find_set_functor(task.args[i].name)->functor; }
  const ab::AbFunctor& ab_arg(std::size_t i) const { return *w.find_ab_functor(task.args[i].name)->functor; }
};

// Returns the payload; sets `ok` to false when a check did not hold.
json execute(Context& ctx, bool& ok) {
  const std::string& kind = ctx.task.kind;
  const std::size_t k = ctx.options.max_enum_size;
  const std::size_t limit = ctx.options.enumeration_limit;

  if (kind == "right_satellite") {
    auto s = ctx.span_arg(0);
    auto r = span::right_satellite(s, ctx.set_arg(1));
    auto audit = lab::audit_right_universality(r, lab::candidate_functors(ctx.rng, s->y(), k, ctx.options.candidates), limit);
    ok = audit.passed();
    json out = right_json(r);
    out["universality"] = universality_json(audit);
    return out;
  }
  if (kind == "left_satellite") {
    auto s = ctx.span_arg(0);
    auto l = span::left_satellite(s, ctx.set_arg(1), limit);
    auto audit = lab::audit_left_universality(l, lab::candidate_functors(ctx.rng, s->x(), k, ctx.options.candidates), limit);
    ok = audit.passed();
    json out = left_json(l);
    out["universality"] = universality_json(audit);
    return out;
  }
  if (kind == "adjunction_check") {
    auto rep = lab::adjunction_check(ctx.span_arg(0), ctx.set_arg(1), ctx.set_arg(2));
    ok = rep.bijection && rep.natural();
    auto indices = [](const std::vector<std::size_t>& v) {
      json a = json::array();
      for (std::size_t i : v) a.push_back(i == npos ? json(nullptr) : json(i));
      return a;
    };
    return {{"left_count", rep.left.size()}, {"right_count", rep.right.size()}, {"bijection", rep.bijection},
            {"natural", rep.natural()},      {"forward", indices(rep.forward)}, {"backward", indices(rep.backward)},
            {"spot_checks", rep.spots.size()}};
  }
  if (kind == "preservation_right" || kind == "preservation_left") {
    const auto& c = ctx.task.args[2].elements;
    auto rep = kind == "preservation_right" ? lab::preservation_check_right(ctx.span_arg(0), ctx.set_arg(1), c)
                                            : lab::preservation_check_left(ctx.span_arg(0), ctx.set_arg(1), c);
    ok = rep.isomorphism;
    const auto& cat = rep.comparison.source->category();
    json sizes = json::object();
    for (std::size_t x = 0; x < cat.object_count(); ++x)
      sizes[cat.object_name(x)] = {{"source", rep.comparison.source->size(x)}, {"target", rep.comparison.target->size(x)}};
    std::vector<std::string> factor = c;
    std::sort(factor.begin(), factor.end());
    return {{"side", rep.side},       {"factor", factor},         {"well_defined", rep.well_defined},
            {"natural", rep.natural}, {"isomorphism", rep.isomorphism}, {"objects", std::move(sizes)}};
  }
  if (kind == "ab_right_satellite") {
    auto r = ab::ab_right_satellite(ctx.span_arg(0), ctx.ab_arg(1));
    ok = r.unit_homomorphic;
    return {{"objects", groups_json(*r.functor)}, {"unit_homomorphic", r.unit_homomorphic}};
  }
  if (kind == "ab_left_satellite") {
    auto l = ab::ab_left_satellite(ctx.span_arg(0), ctx.ab_arg(1));
    ok = l.counit_homomorphic;
    return {{"objects", groups_json(*l.functor)}, {"counit_homomorphic", l.counit_homomorphic}};
  }
  if (kind == "duality_audit") {
    auto s = ctx.span_arg(0);
    auto deltas = span::connecting_morphisms(s, ctx.set_arg(1), ctx.set_arg(2), limit);
    std::size_t passed = 0;
    bool involution = span::opposite_span(span::opposite_span(*s)) == *s;
    for (const auto& d : deltas)
      if (lab::duality_audit(d).passed()) ++passed;
    ok = involution && passed == deltas.size();
    return {{"pairs", deltas.size()}, {"passed", passed}, {"involution", involution}};
  }
  // sequence_span
  const auto& s = *ctx.span_arg(0);
  const auto& x = *s.x();
  json nodes = json::object(), edges = json::object();
  for (std::size_t n = 0; n < s.shape().node_count(); ++n)
    nodes[s.shape().nodes()[n]] = {{"F", x.object_name(s.left().node(n))}, {"G", x.object_name(s.right().node(n))}};
  for (std::size_t e = 0; e < s.shape().edge_count(); ++e) {
    const auto& edge = s.shape().edges()[e];
    edges[edge.id] = {{"source", s.shape().nodes()[edge.source]},
                      {"target", s.shape().nodes()[edge.target]},
                      {"F", x.morphism_name(s.left().edge(e))},
                      {"G", x.morphism_name(s.right().edge(e))}};
  }
  json out = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  if (ctx.task.args.size() > 1) out["satellite"] = right_json(span::right_satellite(ctx.span_arg(0), ctx.set_arg(1)));
  ok = true;
  return out;
}

TaskResult run_one(const Workspace& w, const RunOptions& options, std::size_t index) {
  const TaskDecl& t = w.tasks[index];
  TaskResult r{t.name, t.kind, "ok", json::object(), {}, {}};
  Context ctx{w, options, lab::Rng(options.seed).fork(index), t};
  try {
    bool ok = true;
    r.payload = execute(ctx, ok);
    if (!ok) r.status = "failed";
  } catch (const Error& e) {
    r.status = "failed";
    r.error_kind = e.kind();
    r.error_message = e.what();
  } catch (const std::exception& e) {
    r.status = "failed";
    r.error_kind = "InternalError";
    r.error_message = e.what();
  }
  return r;
}

void render(std::ostream& os, const json& j, std::size_t indent) {
  const std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    const bool scalars = v.is_array() && std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
    os << pad << it.key() << ":";
    if (v.is_object() && v.empty()) {
      os << " {}\n";
    } else if (v.is_object()) {
      os << "\n";
      render(os, v, indent + 2);
    } else if (scalars) {
      std::string line;
      for (const auto& e : v) line += (line.empty() ? "" : ", ") + (e.is_string() ? e.get<std::string>() : e.dump());
      os << " [" << line << "]\n";
    } else if (v.is_array()) {
      os << "\n";
      for (const auto& e : v) {
        os << pad << "  -\n";
        if (e.is_object()) render(os, e, indent + 4);
        else os << pad << "    " << e.dump() << "\n";
      }
    } else {
      os << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

std::vector<TaskResult> run_tasks(const Workspace& w, const RunOptions& options) {
  std::vector<std::size_t> chosen;
  if (options.selection.empty()) {
    for (std::size_t i = 0; i < w.tasks.size(); ++i) chosen.push_back(i);
  } else {
    for (const auto& name : options.selection)
      if (!w.find_task(name)) throw UnknownReference("no task named '" + name + "'");
    for (std::size_t i = 0; i < w.tasks.size(); ++i)
      if (std::find(options.selection.begin(), options.selection.end(), w.tasks[i].name) != options.selection.end())
        chosen.push_back(i);
  }
  std::vector<TaskResult> results(chosen.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.jobs, chosen.size()));
  if (workers == 1) {
    for (std::size_t k = 0; k < chosen.size(); ++k) results[k] = run_one(w, options, chosen[k]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < chosen.size();) results[k] = run_one(w, options, chosen[k]);
    });
  for (auto& th : pool) th.join();
  return results;
}

json to_json(const TaskResult& r) {
  json j = {{"name", r.name}, {"kind", r.kind}, {"status", r.status}, {"payload", r.payload}};
  if (!r.error_kind.empty()) j["error"] = {{"kind", r.error_kind}, {"message", r.error_message}};
  return j;
}

TaskResult from_json(const json& j) {
  TaskResult r{j.at("name"), j.at("kind"), j.at("status"), j.at("payload"), {}, {}};
  if (j.contains("error")) {
    r.error_kind = j["error"].at("kind");
    r.error_message = j["error"].at("message");
  }
  return r;
}

std::string serialize(const TaskResult& result, Format format) {
  if (format == Format::Structured) return to_json(result).dump();
  std::ostringstream os;
  os << "task " << result.name << " (" << result.kind << "): " << result.status << "\n";
  if (!result.error_kind.empty()) os << "  error: " << result.error_message << "\n";
  render(os, result.payload, 2);
  return os.str();
}

std::string serialize(const std::vector<TaskResult>& results, Format format, std::uint64_t seed) {
  if (format == Format::Structured) {
    json all = json::array();
    for (const auto& r : results) all.push_back(to_json(r));
    return json{{"results", std::move(all)}, {"seed", seed}}.dump() + "\n";
  }
  std::string out;
  for (const auto& r : results) out += serialize(r, format);
  return out;
}

}  // namespace satkit::dsl
