#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "satkit/ab/functor.hpp"
#include "satkit/cat/category.hpp"
#include "satkit/cat/functor.hpp"
#include "satkit/span/span.hpp"

namespace satkit::dsl {

struct Position {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct CategoryDecl {
  std::string name;
  cat::CatPtr cat;
  bool explicit_table = false;  // true iff compose lines were given
  std::vector<std::string> objects;
  std::vector<cat::MorphismSpec> arrows;
  std::vector<cat::CompositeSpec> composes;
};

struct SetFunctorDecl {
  std::string name;
  std::string category;
  cat::SetFunctorPtr functor;
};

struct AbFunctorDecl {
  std::string name;
  std::string category;
  ab::AbFunctorPtr functor;
};

struct SpanDecl {
  enum class Form { Explicit, Identity, Sequence };
  std::string name;
  Form form = Form::Explicit;
  std::string x;  // category names; both X for Identity and Sequence
  std::string y;
  span::SpanPtr span;
  std::vector<std::string> nodes;
  std::vector<cat::EdgeSpec> edges;
  span::DiagramNames left;
  span::DiagramNames right;
};

struct SequenceDecl {
  struct Member {
    std::string name, first, second;
  };
  struct Arrow {
    std::string name, source, target, start, middle, end;
  };
  std::string name;
  std::string category;
  std::vector<Member> members;
  std::vector<Arrow> arrows;
};

struct TaskArg {
  bool is_set = false;
  std::string name;                   // when !is_set
  std::vector<std::string> elements;  // when is_set
  Position at;

  bool operator==(const TaskArg& o) const { return is_set == o.is_set && name == o.name && elements == o.elements; }
};

struct TaskDecl {
  std::string kind;
  std::string name;
  std::vector<TaskArg> args;
  Position at;
};

// Everything declared in one DSL file, in file order. Names share
// a single namespace; spans also exist for every sequence declaration.
class Workspace {
 public:
  std::vector<CategoryDecl> categories;
  std::vector<SetFunctorDecl> set_functors;
  std::vector<AbFunctorDecl> ab_functors;
  std::vector<SpanDecl> spans;
  std::vector<SequenceDecl> sequences;
  std::vector<TaskDecl> tasks;
  // Declaration order as (kind, index) for serialization back to text.
  std::vector<std::pair<std::string, std::size_t>> order;

  const CategoryDecl* find_category(std::string_view name) const;
  const SetFunctorDecl* find_set_functor(std::string_view name) const;
  const AbFunctorDecl* find_ab_functor(std::string_view name) const;
  const SpanDecl* find_span(std::string_view name) const;
  const SequenceDecl* find_sequence(std::string_view name) const;
  const TaskDecl* find_task(std::string_view name) const;
  bool declared(std::string_view name) const;
};

const std::vector<std::string>& task_kinds();

// Throws ParseError: kind SyntaxError for grammar problems, otherwise the
// kind of the validation that failed (UnknownReference, ValidationError,
// EndpointMismatch, SourceMismatch, CyclicGraph, NotADiagramMorphism, ...).
Workspace parse_spec(std::string_view text);

// Back to the DSL; parse_spec(to_dsl(w)) is equivalent to w.
std::string to_dsl(const Workspace& w);

// Same declarations with equal categories, functors, spans and tasks.
bool equivalent(const Workspace& a, const Workspace& b);

}  // namespace satkit::dsl
