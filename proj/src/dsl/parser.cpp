#include <algorithm>
#include <functional>
#include <memory>
#include <set>

#include "satkit/dsl/lexer.hpp"
#include "satkit/dsl/workspace.hpp"
#include "satkit/error.hpp"

namespace satkit::dsl {

namespace {

using ab::Integer;

// Message of a library error without its "Kind: " prefix.
std::string bare_message(const Error& e) {
  std::string what = e.what();
  const std::string prefix = e.kind() + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Workspace run() {
    while (peek().kind != TokenKind::End) declaration();
    return std::move(w_);
  }

 private:
  // Token access.

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }

  const Token& next() {
    const Token& t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  bool at_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Symbol && peek(ahead).text == s;
  }
  bool at_keyword(std::string_view s) const { return peek().kind == TokenKind::Identifier && peek().text == s; }

  [[noreturn]] void expected(const std::string& what) const {
    throw ParseError("SyntaxError", peek().line, peek().column, "expected " + what + ", found " + describe(peek()));
  }

  const Token& symbol(std::string_view s) {
    if (!at_symbol(s)) expected("'" + std::string(s) + "'");
    return next();
  }

  bool accept(std::string_view s) {
    if (!at_symbol(s)) return false;
    next();
    return true;
  }

  const Token& identifier(const std::string& what) {
    if (peek().kind != TokenKind::Identifier) expected(what);
    return next();
  }

  void keyword(std::string_view kw) {
    if (!at_keyword(kw)) expected("'" + std::string(kw) + "'");
    next();
  }

  // An element label: identifier or non-negative integer.
  const Token& label() {
    if (peek().kind != TokenKind::Identifier && peek().kind != TokenKind::Integer) expected("element label");
    return next();
  }

  Integer signed_integer() {
    const bool negative = accept("-");
    if (peek().kind != TokenKind::Integer) expected("integer");
    Integer v(next().text);
    return negative ? Integer(-v) : v;
  }

  // `x` or `id(x)`.
  std::string reference() {
    const Token& t = identifier("morphism name");
    if (t.text == "id" && at_symbol("(")) {
      next();
      std::string inner = identifier("object name").text;
      symbol(")");
      return "id(" + inner + ")";
    }
    return t.text;
  }

  // `h.g.f`, each part a reference.
  std::string path() {
    std::string out = reference();
    while (accept(".")) out += "." + reference();
    return out;
  }

  // Errors.

  [[noreturn]] static void fail(const std::string& kind, const Token& at, const std::string& message) {
    throw ParseError(kind, at.line, at.column, message);
  }

  // Runs `build`, attaching the position of `at` to any library error.
  template <class F>
  auto located(const Token& at, F&& build) -> decltype(build()) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.kind(), at, bare_message(e));
    }
  }

  void claim(const Token& name) {
    if (w_.declared(name.text)) fail("ValidationError", name, "duplicate name '" + name.text + "'");
  }

  const CategoryDecl& category_ref() {
    const Token& t = identifier("category name");
    const auto* c = w_.find_category(t.text);
    if (!c) fail("UnknownReference", t, "no category named '" + t.text + "'");
    return *c;
  }

  std::size_t morphism_in(const cat::FinCat& c, const std::string& p, const Token& at) {
    return located(at, [&] { return cat::resolve_path(c, p); });
  }

  std::size_t object_in(const cat::FinCat& c, const Token& at) {
    auto x = c.find_object(at.text);
    if (!x) fail("UnknownReference", at, "no object '" + at.text + "'");
    return *x;
  }

  // Declarations.

  void declaration() {
    if (at_keyword("category")) return category();
    if (at_keyword("setfunctor")) return setfunctor();
    if (at_keyword("abfunctor")) return abfunctor();
    if (at_keyword("span")) return span_decl();
    if (at_keyword("sequence")) return sequence();
    if (at_keyword("task")) return task();
    expected("declaration (category, setfunctor, abfunctor, span, sequence or task)");
  }

  void category() {
    keyword("category");
    const Token& name = identifier("category name");
    claim(name);
    CategoryDecl d;
    d.name = name.text;
    std::set<std::string> objects, arrows;
    symbol("{");
    while (!accept("}")) {
      if (at_keyword("object")) {
        next();
        do {
          const Token& o = identifier("object name");
          if (!objects.insert(o.text).second) fail("ValidationError", o, "duplicate object '" + o.text + "'");
          d.objects.push_back(o.text);
        } while (accept(","));
      } else if (at_keyword("arrow")) {
        next();
        const Token& f = identifier("arrow name");
        if (f.text == "id") fail("SyntaxError", f, "'id' is reserved for identities");
        if (arrows.count(f.text) || objects.count(f.text))
          fail("ValidationError", f, "duplicate name '" + f.text + "' in category");
        arrows.insert(f.text);
        symbol(":");
        const Token& a = identifier("object name");
        symbol("->");
        const Token& b = identifier("object name");
        for (const Token* end : {&a, &b})
          if (!objects.count(end->text)) fail("UnknownReference", *end, "no object '" + end->text + "'");
        d.arrows.push_back({f.text, a.text, b.text});
      } else if (at_keyword("compose")) {
        next();
        const Token& g_tok = peek();
        std::string g = reference();
        symbol(".");
        const Token& f_tok = peek();
        std::string f = reference();
        symbol("=");
        const Token& h_tok = peek();
        std::string h = reference();
        for (auto [id, t] : {std::pair{&g, &g_tok}, {&f, &f_tok}, {&h, &h_tok}}) {
          const bool identity = id->rfind("id(", 0) == 0 && objects.count(id->substr(3, id->size() - 4));
          if (!identity && !arrows.count(*id)) fail("UnknownReference", *t, "no arrow '" + *id + "'");
        }
        d.composes.push_back({g, f, h});
      } else {
        expected("'object', 'arrow', 'compose' or '}'");
      }
      symbol(";");
    }
    d.explicit_table = !d.composes.empty();
    if (d.explicit_table) {
      auto c = located(name, [&] { return cat::explicit_category(d.objects, d.arrows, d.composes); });
      auto violations = cat::validate_category(c);
      if (!violations.empty()) fail("ValidationError", name, "category " + name.text + ": " + violations[0].describe());
      d.cat = std::make_shared<cat::FinCat>(std::move(c));
    } else {
      std::vector<cat::EdgeSpec> edges;
      for (const auto& a : d.arrows) edges.push_back({a.id, a.domain, a.codomain});
      d.cat = located(name, [&] {
        return std::make_shared<cat::FinCat>(cat::free_category(cat::FinGraph(d.objects, edges)));
      });
    }
    push("category", w_.categories, std::move(d));
  }

  template <class T>
  void push(const std::string& kind, std::vector<T>& list, T decl) {
    w_.order.emplace_back(kind, list.size());
    list.push_back(std::move(decl));
  }

  // `<name>: <cat> -> <target>`
  std::pair<const Token*, const CategoryDecl*> functor_head(const std::string& target) {
    const Token& name = identifier("functor name");
    claim(name);
    symbol(":");
    const CategoryDecl& c = category_ref();
    symbol("->");
    const Token& t = identifier("'" + target + "'");
    if (t.text != target) fail("SyntaxError", t, "expected '" + target + "', found " + describe(t));
    return {&name, &c};
  }

  // The object or arrow after `on`. Returns the object index, or npos with
  // `morphism` set.
  std::size_t on_target(const cat::FinCat& c, std::size_t& morphism, const Token*& at) {
    keyword("on");
    at = &peek();
    std::string p = path();
    if (auto x = c.find_object(p)) return *x;
    morphism = morphism_in(c, p, *at);
    if (c.is_identity(morphism)) fail("ValidationError", *at, "identities are implicit");
    if (c.is_free() && c.path(morphism).size() != 1)
      fail("ValidationError", *at, "'" + p + "' is a composite; give the generating arrows only");
    return npos;
  }

  void setfunctor() {
    keyword("setfunctor");
    auto [name, cdecl] = functor_head("Set");
    const auto& c = *cdecl->cat;
    std::map<std::string, std::vector<std::string>> sets;
    std::map<std::string, std::map<std::string, std::string>> arrows;
    symbol("{");
    while (!accept("}")) {
      std::size_t m = npos;
      const Token* at = nullptr;
      const std::size_t x = on_target(c, m, at);
      symbol("=");
      symbol("{");
      if (x != npos) {
        const std::string& obj = c.object_name(x);
        if (sets.count(obj)) fail("ValidationError", *at, "set of " + obj + " given twice");
        auto& s = sets[obj];
        std::set<std::string> seen;
        if (!at_symbol("}")) do {
            const Token& e = label();
            if (!seen.insert(e.text).second) fail("ValidationError", e, "duplicate element '" + e.text + "'");
            s.push_back(e.text);
          } while (accept(","));
      } else {
        const std::string& f = c.morphism_name(m);
        if (arrows.count(f)) fail("ValidationError", *at, "function of " + f + " given twice");
        const std::string& dom = c.object_name(c.domain(m));
        const std::string& cod = c.object_name(c.codomain(m));
        for (const auto& o : {dom, cod})
          if (!sets.count(o)) fail("UnknownReference", *at, "set of " + o + " must be given before " + f);
        auto& fn = arrows[f];
        if (!at_symbol("}")) do {
            const Token& a = label();
            symbol("->");
            const Token& b = label();
            const auto& ds = sets[dom];
            const auto& cs = sets[cod];
            if (std::find(ds.begin(), ds.end(), a.text) == ds.end())
              fail("UnknownReference", a, "'" + a.text + "' is not in the set of " + dom);
            if (std::find(cs.begin(), cs.end(), b.text) == cs.end())
              fail("UnknownReference", b, "'" + b.text + "' is not in the set of " + cod);
            if (!fn.emplace(a.text, b.text).second) fail("ValidationError", a, "'" + a.text + "' mapped twice");
          } while (accept(","));
      }
      symbol("}");
      symbol(";");
    }
    auto f = located(*name, [&] {
      return std::make_shared<cat::SetFunctor>(cat::SetFunctor::from_names(cdecl->cat, sets, arrows));
    });
    auto violations = cat::functor_law_violations(*f);
    if (!violations.empty()) fail("ValidationError", *name, "functor " + name->text + ": " + violations[0]);
    push("setfunctor", w_.set_functors, SetFunctorDecl{name->text, cdecl->name, f});
  }

  ab::FpAbelianGroup group_literal() {
    keyword("group");
    symbol("(");
    std::vector<std::string> gens;
    std::set<std::string> seen;
    if (peek().kind == TokenKind::Identifier) do {
        const Token& g = identifier("generator");
        if (!seen.insert(g.text).second) fail("ValidationError", g, "duplicate generator '" + g.text + "'");
        gens.push_back(g.text);
      } while (accept(","));
    std::vector<std::vector<Integer>> rows;
    if (accept(";") && at_symbol("[")) do {
        const Token& at = symbol("[");
        std::vector<Integer> row;
        if (!at_symbol("]")) do row.push_back(signed_integer());
          while (accept(","));
        symbol("]");
        if (row.size() != gens.size())
          fail("ValidationError", at,
               "relation has " + std::to_string(row.size()) + " entries for " + std::to_string(gens.size()) + " generators");
        rows.push_back(std::move(row));
      } while (accept(","));
    symbol(")");
    return ab::FpAbelianGroup(gens, ab::IntMatrix::from_rows(gens.size(), rows));
  }

  // `2 a + b - 3 c` or `0`, over the given generators.
  std::vector<Integer> word(const std::vector<std::string>& gens) {
    std::vector<Integer> out(gens.size(), 0);
    auto term = [&](int sign) {
      Integer k = 1;
      bool has_k = false;
      if (peek().kind == TokenKind::Integer) {
        k = Integer(next().text);
        has_k = true;
      }
      if (peek().kind != TokenKind::Identifier) {
        if (has_k && k == 0) return;
        expected("generator");
      }
      const Token& g = next();
      auto it = std::find(gens.begin(), gens.end(), g.text);
      if (it == gens.end()) fail("UnknownReference", g, "no generator '" + g.text + "'");
      out[static_cast<std::size_t>(it - gens.begin())] += sign * k;
    };
    term(accept("-") ? -1 : 1);
    while (true) {
      if (accept("+")) term(1);
      else if (accept("-")) term(-1);
      else break;
    }
    return out;
  }

  void abfunctor() {
    keyword("abfunctor");
    auto [name, cdecl] = functor_head("Ab");
    const auto& c = *cdecl->cat;
    std::map<std::string, ab::FpAbelianGroup> groups;
    std::map<std::string, std::map<std::string, std::vector<Integer>>> arrows;
    symbol("{");
    while (!accept("}")) {
      std::size_t m = npos;
      const Token* at = nullptr;
      const std::size_t x = on_target(c, m, at);
      symbol("=");
      if (x != npos) {
        const std::string& obj = c.object_name(x);
        if (groups.count(obj)) fail("ValidationError", *at, "group of " + obj + " given twice");
        groups[obj] = group_literal();
      } else {
        const std::string& f = c.morphism_name(m);
        if (arrows.count(f)) fail("ValidationError", *at, "map of " + f + " given twice");
        const std::string& dom = c.object_name(c.domain(m));
        const std::string& cod = c.object_name(c.codomain(m));
        for (const auto& o : {dom, cod})
          if (!groups.count(o)) fail("UnknownReference", *at, "group of " + o + " must be given before " + f);
        auto& images = arrows[f];
        symbol("{");
        if (!at_symbol("}")) do {
            const Token& g = identifier("generator");
            const auto& dg = groups[dom].generators;
            if (std::find(dg.begin(), dg.end(), g.text) == dg.end())
              fail("UnknownReference", g, "no generator '" + g.text + "' in the group of " + dom);
            symbol("->");
            if (!images.emplace(g.text, word(groups[cod].generators)).second)
              fail("ValidationError", g, "'" + g.text + "' mapped twice");
          } while (accept(","));
        symbol("}");
      }
      symbol(";");
    }
    auto f = located(*name, [&] {
      return std::make_shared<ab::AbFunctor>(ab::AbFunctor::from_names(cdecl->cat, groups, arrows));
    });
    auto violations = ab::functor_law_violations(*f);
    if (!violations.empty()) fail("ValidationError", *name, "functor " + name->text + ": " + violations[0]);
    push("abfunctor", w_.ab_functors, AbFunctorDecl{name->text, cdecl->name, f});
  }

  void span_decl() {
    keyword("span");
    const Token& name = identifier("span name");
    claim(name);
    SpanDecl d;
    d.name = name.text;
    if (accept("=")) {
      keyword("identity");
      symbol("(");
      const CategoryDecl& c = category_ref();
      symbol(")");
      symbol(";");
      d.form = SpanDecl::Form::Identity;
      d.x = d.y = c.name;
      d.span = std::make_shared<span::SpanSchema>(span::identity_span(c.cat));
      push("span", w_.spans, std::move(d));
      return;
    }
    symbol(":");
    const CategoryDecl& x = category_ref();
    symbol(",");
    const CategoryDecl& y = category_ref();
    d.x = x.name;
    d.y = y.name;
    std::set<std::string> nodes, edges;
    symbol("{");
    while (!accept("}")) {
      if (at_keyword("node")) {
        next();
        do {
          const Token& n = identifier("node name");
          if (nodes.count(n.text) || edges.count(n.text)) fail("ValidationError", n, "duplicate name '" + n.text + "'");
          nodes.insert(n.text);
          d.nodes.push_back(n.text);
        } while (accept(","));
      } else if (at_keyword("edge")) {
        next();
        const Token& e = identifier("edge name");
        if (nodes.count(e.text) || edges.count(e.text)) fail("ValidationError", e, "duplicate name '" + e.text + "'");
        edges.insert(e.text);
        symbol(":");
        const Token& a = identifier("node name");
        symbol("->");
        const Token& b = identifier("node name");
        for (const Token* end : {&a, &b})
          if (!nodes.count(end->text)) fail("UnknownReference", *end, "no node '" + end->text + "'");
        d.edges.push_back({e.text, a.text, b.text});
      } else if (at_keyword("F") || at_keyword("G")) {
        const bool left = next().text == "F";
        const auto& c = *(left ? x : y).cat;
        auto& names = left ? d.left : d.right;
        const Token& item = identifier("node or edge name");
        symbol("=");
        const Token& target = peek();
        if (nodes.count(item.text)) {
          identifier("object name");
          object_in(c, target);
          if (!names.nodes.emplace(item.text, target.text).second)
            fail("ValidationError", item, "image of " + item.text + " given twice");
        } else if (edges.count(item.text)) {
          std::string p = path();
          morphism_in(c, p, target);
          if (!names.edges.emplace(item.text, p).second)
            fail("ValidationError", item, "image of " + item.text + " given twice");
        } else {
          fail("UnknownReference", item, "no node or edge '" + item.text + "'");
        }
      } else {
        expected("'node', 'edge', 'F', 'G' or '}'");
      }
      symbol(";");
    }
    auto shape = std::make_shared<cat::FinGraph>(d.nodes, d.edges);
    d.span = located(name, [&] {
      return std::make_shared<span::SpanSchema>(span::build_span(shape, x.cat, d.left, y.cat, d.right));
    });
    push("span", w_.spans, std::move(d));
  }

  void sequence() {
    keyword("sequence");
    const Token& name = identifier("sequence name");
    claim(name);
    symbol(":");
    const CategoryDecl& x = category_ref();
    const auto& c = *x.cat;
    SequenceDecl d;
    d.name = name.text;
    d.category = x.name;
    std::vector<span::SigmaDiagram> members;
    std::vector<span::SigmaMorphism> arrows;
    std::set<std::string> names;
    auto fresh = [&](const Token& t) {
      if (!names.insert(t.text).second) fail("ValidationError", t, "duplicate name '" + t.text + "'");
    };
    auto member_ref = [&]() -> const Token& {
      const Token& t = identifier("member name");
      if (std::none_of(d.members.begin(), d.members.end(), [&](const auto& m) { return m.name == t.text; }))
        fail("UnknownReference", t, "no member '" + t.text + "'");
      return t;
    };
    auto morphism = [&](std::string& out) {
      const Token& at = peek();
      out = path();
      return morphism_in(c, out, at);
    };
    symbol("{");
    while (!accept("}")) {
      if (at_keyword("member")) {
        next();
        const Token& m = identifier("member name");
        fresh(m);
        symbol("=");
        SequenceDecl::Member mem;
        mem.name = m.text;
        const std::size_t first = morphism(mem.first);
        symbol(",");
        const std::size_t second = morphism(mem.second);
        d.members.push_back(mem);
        members.push_back({m.text, first, second});
      } else if (at_keyword("morphism")) {
        next();
        const Token& a = identifier("morphism name");
        fresh(a);
        symbol(":");
        SequenceDecl::Arrow arr;
        arr.name = a.text;
        arr.source = member_ref().text;
        symbol("->");
        arr.target = member_ref().text;
        symbol("=");
        const std::size_t start = morphism(arr.start);
        symbol(",");
        const std::size_t middle = morphism(arr.middle);
        symbol(",");
        const std::size_t end = morphism(arr.end);
        d.arrows.push_back(arr);
        arrows.push_back({a.text, arr.source, arr.target, start, middle, end});
      } else {
        expected("'member', 'morphism' or '}'");
      }
      symbol(";");
    }
    SpanDecl s;
    s.name = name.text;
    s.form = SpanDecl::Form::Sequence;
    s.x = s.y = x.name;
    s.span = located(name, [&] { return std::make_shared<span::SpanSchema>(span::sequence_span(x.cat, members, arrows)); });
    push("sequence", w_.sequences, std::move(d));
    w_.spans.push_back(std::move(s));
  }

  void task() {
    keyword("task");
    const Token& kind = identifier("task kind");
    const auto& kinds = task_kinds();
    if (std::find(kinds.begin(), kinds.end(), kind.text) == kinds.end()) {
      std::string list;
      for (const auto& k : kinds) list += (list.empty() ? "" : ", ") + k;
      fail("SyntaxError", kind, "unknown task kind '" + kind.text + "'; expected one of " + list);
    }
    const Token& name = identifier("task name");
    claim(name);
    if (w_.find_task(name.text)) fail("ValidationError", name, "duplicate task '" + name.text + "'");
    TaskDecl t{kind.text, name.text, {}, {name.line, name.column}};
    symbol("(");
    if (!at_symbol(")")) do {
        TaskArg a;
        a.at = {peek().line, peek().column};
        if (accept("{")) {
          a.is_set = true;
          std::set<std::string> seen;
          if (!at_symbol("}")) do {
              const Token& e = label();
              if (!seen.insert(e.text).second) fail("ValidationError", e, "duplicate element '" + e.text + "'");
              a.elements.push_back(e.text);
            } while (accept(","));
          symbol("}");
        } else {
          a.name = identifier("argument").text;
        }
        t.args.push_back(std::move(a));
      } while (accept(","));
    symbol(")");
    symbol(";");
    check_task(t, kind);
    push("task", w_.tasks, std::move(t));
  }

  // Argument roles: S span, T set functor on X, V set functor on Y, C set
  // literal, A ab functor on X, B ab functor on Y, Q sequence; lower case
  // marks an optional trailing argument.
  void check_task(const TaskDecl& t, const Token& kind) {
    static const std::map<std::string, std::string> signature{
        {"right_satellite", "ST"},    {"left_satellite", "SV"},     {"adjunction_check", "STV"},
        {"preservation_right", "STC"}, {"preservation_left", "SVC"}, {"ab_right_satellite", "SA"},
        {"ab_left_satellite", "SB"},   {"duality_audit", "STV"},     {"sequence_span", "Qt"}};
    const std::string& sig = signature.at(t.kind);
    const std::size_t required = static_cast<std::size_t>(std::count_if(sig.begin(), sig.end(), ::isupper));
    if (t.args.size() < required || t.args.size() > sig.size())
      fail("ValidationError", kind,
           t.kind + " takes " + std::to_string(required) +
               (required == sig.size() ? "" : " or " + std::to_string(sig.size())) + " arguments, got " +
               std::to_string(t.args.size()));
    const SpanDecl* s = nullptr;
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      const TaskArg& a = t.args[i];
      const char role = static_cast<char>(std::toupper(sig[i]));
      auto at = [&](const std::string& kind_, const std::string& msg) {
        throw ParseError(kind_, a.at.line, a.at.column, msg);
      };
      if (role == 'C') {
        if (!a.is_set) at("ValidationError", "argument " + std::to_string(i + 1) + " must be a set literal {...}");
        continue;
      }
      if (a.is_set) at("ValidationError", "argument " + std::to_string(i + 1) + " must be a name");
      if (!w_.declared(a.name)) at("UnknownReference", "no declaration named '" + a.name + "'");
      switch (role) {
        case 'S':
          s = w_.find_span(a.name);
          if (!s) at("ValidationError", "'" + a.name + "' is not a span");
          break;
        case 'Q':
          if (!w_.find_sequence(a.name)) at("ValidationError", "'" + a.name + "' is not a sequence");
          s = w_.find_span(a.name);
          break;
        case 'T':
        case 'V': {
          const auto* f = w_.find_set_functor(a.name);
          if (!f) at("ValidationError", "'" + a.name + "' is not a set functor");
          const auto& want_cat = role == 'T' ? s->span->x() : s->span->y();
          if (!(f->functor->source() == want_cat || *f->functor->source() == *want_cat))
            at("SourceMismatch", "'" + a.name + "' is defined on " + f->category + ", the span needs a functor on " +
                                     category_name(*want_cat));
          break;
        }
        case 'A':
        case 'B': {
          const auto* f = w_.find_ab_functor(a.name);
          if (!f) at("ValidationError", "'" + a.name + "' is not an ab functor");
          const auto& want_cat = role == 'A' ? s->span->x() : s->span->y();
          if (!(f->functor->source() == want_cat || *f->functor->source() == *want_cat))
            at("SourceMismatch", "'" + a.name + "' is defined on " + f->category + ", the span needs a functor on " +
                                     category_name(*want_cat));
          break;
        }
      }
    }
  }

  std::string category_name(const cat::FinCat& c) const {
    for (const auto& d : w_.categories)
      if (*d.cat == c) return d.name;
    return "?";
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Workspace w_;
};

}  // namespace

const std::vector<std::string>& task_kinds() {
  static const std::vector<std::string> kinds{"right_satellite",    "left_satellite",    "adjunction_check",
                                              "preservation_right", "preservation_left", "ab_right_satellite",
                                              "ab_left_satellite",  "duality_audit",     "sequence_span"};
  return kinds;
}

namespace {

template <class T>
const T* find_named(const std::vector<T>& list, std::string_view name) {
  for (const auto& d : list)
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace

const CategoryDecl* Workspace::find_category(std::string_view name) const { return find_named(categories, name); }
const SetFunctorDecl* Workspace::find_set_functor(std::string_view name) const { return find_named(set_functors, name); }
const AbFunctorDecl* Workspace::find_ab_functor(std::string_view name) const { return find_named(ab_functors, name); }
const SpanDecl* Workspace::find_span(std::string_view name) const { return find_named(spans, name); }
const SequenceDecl* Workspace::find_sequence(std::string_view name) const { return find_named(sequences, name); }
const TaskDecl* Workspace::find_task(std::string_view name) const { return find_named(tasks, name); }

bool Workspace::declared(std::string_view name) const {
  return find_category(name) || find_set_functor(name) || find_ab_functor(name) || find_span(name) ||
         find_sequence(name) || find_task(name);
}

Workspace parse_spec(std::string_view text) { return Parser(text).run(); }

}  // namespace satkit::dsl
