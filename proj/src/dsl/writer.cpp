#include <sstream>

#include "satkit/dsl/workspace.hpp"

namespace satkit::dsl {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// Morphisms whose images must be written: generators of a free category,
// every non-identity morphism otherwise.
std::vector<std::size_t> written_morphisms(const cat::FinCat& c) {
  if (c.is_free()) return c.generators();
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m)) out.push_back(m);
  return out;
}

std::string word(const std::vector<ab::Integer>& coefficients, const std::vector<std::string>& gens) {
  std::string out;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    const auto& k = coefficients[j];
    if (k == 0) continue;
    const ab::Integer mag = k < 0 ? ab::Integer(-k) : k;
    if (out.empty()) out += k < 0 ? "-" : "";
    else out += k < 0 ? " - " : " + ";
    out += (mag == 1 ? "" : mag.str() + " ") + gens[j];
  }
  return out.empty() ? "0" : out;
}

void write_category(std::ostream& os, const CategoryDecl& d) {
  os << "category " << d.name << " {\n";
  if (!d.objects.empty()) os << "  object " << join(d.objects) << ";\n";
  for (const auto& a : d.arrows) os << "  arrow " << a.id << ": " << a.domain << " -> " << a.codomain << ";\n";
  for (const auto& c : d.composes) os << "  compose " << c.after << "." << c.before << " = " << c.result << ";\n";
  os << "}\n";
}

void write_set_functor(std::ostream& os, const SetFunctorDecl& d) {
  const auto& f = *d.functor;
  const auto& c = f.category();
  os << "setfunctor " << d.name << ": " << d.category << " -> Set {\n";
  for (std::size_t x = 0; x < c.object_count(); ++x)
    os << "  on " << c.object_name(x) << " = {" << join(f.set(x)) << "};\n";
  for (std::size_t m : written_morphisms(c)) {
    std::vector<std::string> pairs;
    for (std::size_t i = 0; i < f.size(c.domain(m)); ++i)
      pairs.push_back(f.set(c.domain(m))[i] + " -> " + f.set(c.codomain(m))[f.apply(m, i)]);
    os << "  on " << c.morphism_name(m) << " = {" << join(pairs) << "};\n";
  }
  os << "}\n";
}

void write_ab_functor(std::ostream& os, const AbFunctorDecl& d) {
  const auto& f = *d.functor;
  const auto& c = f.category();
  os << "abfunctor " << d.name << ": " << d.category << " -> Ab {\n";
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const auto& g = f.group(x);
    std::vector<std::string> rows;
    for (std::size_t r = 0; r < g.relations.rows(); ++r) {
      std::vector<std::string> entries;
      for (std::size_t j = 0; j < g.relations.cols(); ++j) entries.push_back(g.relations(r, j).str());
      rows.push_back("[" + join(entries) + "]");
    }
    os << "  on " << c.object_name(x) << " = group(" << join(g.generators);
    if (!rows.empty()) os << "; " << join(rows);
    os << ");\n";
  }
  for (std::size_t m : written_morphisms(c)) {
    const auto& from = f.group(c.domain(m)).generators;
    const auto& to = f.group(c.codomain(m)).generators;
    std::vector<std::string> images;
    for (std::size_t j = 0; j < from.size(); ++j) images.push_back(from[j] + " -> " + word(f.arrow(m).row(j), to));
    os << "  on " << c.morphism_name(m) << " = {" << join(images) << "};\n";
  }
  os << "}\n";
}

void write_span(std::ostream& os, const SpanDecl& d) {
  if (d.form == SpanDecl::Form::Identity) {
    os << "span " << d.name << " = identity(" << d.x << ");\n";
    return;
  }
  os << "span " << d.name << ": " << d.x << ", " << d.y << " {\n";
  if (!d.nodes.empty()) os << "  node " << join(d.nodes) << ";\n";
  for (const auto& e : d.edges) os << "  edge " << e.id << ": " << e.source << " -> " << e.target << ";\n";
  for (const auto* side : {&d.left, &d.right}) {
    const char* tag = side == &d.left ? "F" : "G";
    for (const auto& n : d.nodes) os << "  " << tag << " " << n << " = " << side->nodes.at(n) << ";\n";
    for (const auto& e : d.edges) os << "  " << tag << " " << e.id << " = " << side->edges.at(e.id) << ";\n";
  }
  os << "}\n";
}

void write_sequence(std::ostream& os, const SequenceDecl& d) {
  os << "sequence " << d.name << ": " << d.category << " {\n";
  for (const auto& m : d.members) os << "  member " << m.name << " = " << m.first << ", " << m.second << ";\n";
  for (const auto& a : d.arrows)
    os << "  morphism " << a.name << ": " << a.source << " -> " << a.target << " = " << a.start << ", " << a.middle
       << ", " << a.end << ";\n";
  os << "}\n";
}

void write_task(std::ostream& os, const TaskDecl& t) {
  std::vector<std::string> args;
  for (const auto& a : t.args) args.push_back(a.is_set ? "{" + join(a.elements) + "}" : a.name);
  os << "task " << t.kind << " " << t.name << "(" << join(args) << ");\n";
}

template <class T, class Eq>
bool same_list(const std::vector<T>& a, const std::vector<T>& b, Eq eq) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].name != b[i].name || !eq(a[i], b[i])) return false;
  return true;
}

}  // namespace

std::string to_dsl(const Workspace& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [kind, i] : w.order) {
    if (!first && kind != "task") os << "\n";
    first = false;
    if (kind == "category") write_category(os, w.categories[i]);
    else if (kind == "setfunctor") write_set_functor(os, w.set_functors[i]);
    else if (kind == "abfunctor") write_ab_functor(os, w.ab_functors[i]);
    else if (kind == "span") write_span(os, w.spans[i]);
    else if (kind == "sequence") write_sequence(os, w.sequences[i]);
    else write_task(os, w.tasks[i]);
  }
  return os.str();
}

bool equivalent(const Workspace& a, const Workspace& b) {
  std::vector<std::pair<std::string, std::string>> oa, ob;
  auto names = [](const Workspace& w, std::vector<std::pair<std::string, std::string>>& out) {
    for (const auto& [kind, i] : w.order) {
      if (kind == "category") out.emplace_back(kind, w.categories[i].name);
      else if (kind == "setfunctor") out.emplace_back(kind, w.set_functors[i].name);
      else if (kind == "abfunctor") out.emplace_back(kind, w.ab_functors[i].name);
      else if (kind == "span") out.emplace_back(kind, w.spans[i].name);
      else if (kind == "sequence") out.emplace_back(kind, w.sequences[i].name);
      else out.emplace_back(kind, w.tasks[i].name);
    }
  };
  names(a, oa);
  names(b, ob);
  return oa == ob &&
         same_list(a.categories, b.categories, [](const auto& x, const auto& y) { return *x.cat == *y.cat; }) &&
         same_list(a.set_functors, b.set_functors, [](const auto& x, const auto& y) { return *x.functor == *y.functor; }) &&
         same_list(a.ab_functors, b.ab_functors, [](const auto& x, const auto& y) { return *x.functor == *y.functor; }) &&
         same_list(a.spans, b.spans, [](const auto& x, const auto& y) { return *x.span == *y.span; }) &&
         same_list(a.tasks, b.tasks, [](const auto& x, const auto& y) { return x.kind == y.kind && x.args == y.args; });
}

}  // namespace satkit::dsl
