#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "shacl2fol/rdf.hpp"

namespace shacl2fol::shacl {

inline constexpr std::string_view kSh = "http://www.w3.org/ns/shacl#";

enum class PathKind {
  Predicate,
  Inverse,
  Sequence,
  Alternative,
  ZeroOrOne,
  ZeroOrMore,
  OneOrMore
};

// SHACL property path. Sequence and Alternative are binary; longer lists
// nest to the right.
struct PropertyPath {
  PathKind kind = PathKind::Predicate;
  std::string iri;  // Predicate only
  std::vector<PropertyPath> children;

  static PropertyPath predicate(std::string iri);
  static PropertyPath inverse(PropertyPath p);
  static PropertyPath sequence(PropertyPath a, PropertyPath b);
  static PropertyPath alternative(PropertyPath a, PropertyPath b);
  static PropertyPath zero_or_one(PropertyPath p);
  static PropertyPath zero_or_more(PropertyPath p);
  static PropertyPath one_or_more(PropertyPath p);

  friend bool operator==(const PropertyPath&, const PropertyPath&) = default;
  friend std::strong_ordering operator<=>(const PropertyPath&,
                                          const PropertyPath&) = default;
};

// Rewrites OneOrMore(p) as Sequence(p, ZeroOrMore(p)) and pushes Inverse
// down to predicates. Idempotent.
PropertyPath normalize(const PropertyPath& p);

// Predicate IRIs mentioned anywhere in the path.
void collect_predicates(const PropertyPath& p, std::set<std::string>& out);

std::string to_string(const PropertyPath& p);

enum class NodeKind { Iri, Literal, BlankNode };
enum class OrderOp { Lt, Leq, Gt, Geq };

enum class ConstraintKind {
  True,
  Not,
  And,
  EqConst,
  NodeKind,
  HasShape,
  SomeThrough,
  MinCount,
  MaxCount,
  EqualsProp,
  DisjointProp,
  OrderProp,
  Closed
};

struct Constraint {
  ConstraintKind kind = ConstraintKind::True;
  rdf::RdfTerm term;        // EqConst value, HasShape shape name
  shacl::NodeKind node_kind = shacl::NodeKind::Iri;
  std::size_t count = 0;    // MinCount / MaxCount
  PropertyPath path;        // SomeThrough, counts, pair constraints
  std::string predicate;    // EqualsProp / DisjointProp / OrderProp
  OrderOp op = OrderOp::Lt;
  std::set<std::string> allowed;  // Closed
  std::vector<Constraint> children;

  static Constraint truth();
  static Constraint negate(Constraint c);
  static Constraint conj(Constraint a, Constraint b);
  // Right-nested conjunction; True for an empty list.
  static Constraint conj(std::vector<Constraint> cs);
  // Not(And(Not a, Not b, ...)); an empty list yields Not(True).
  static Constraint disj(std::vector<Constraint> cs);
  static Constraint eq_const(rdf::RdfTerm t);
  static Constraint node_kind_is(shacl::NodeKind k);
  static Constraint has_shape(rdf::RdfTerm shape);
  static Constraint some_through(PropertyPath p, Constraint c);
  // Not(SomeThrough(p, Not(c))).
  static Constraint all_through(PropertyPath p, Constraint c);
  static Constraint min_count(std::size_t n, PropertyPath p, Constraint c);
  static Constraint max_count(std::size_t n, PropertyPath p, Constraint c);
  static Constraint equals_prop(PropertyPath p, std::string predicate);
  static Constraint disjoint_prop(PropertyPath p, std::string predicate);
  static Constraint order_prop(PropertyPath p, std::string predicate,
                               OrderOp op);
  static Constraint closed(std::set<std::string> allowed);

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Shape names referenced by HasShape nodes.
std::set<rdf::RdfTerm> shape_refs(const Constraint& c);

enum class TargetKind { Node, Class, SubjectsOf, ObjectsOf };

struct TargetDecl {
  TargetKind kind = TargetKind::Node;
  rdf::RdfTerm argument;

  friend bool operator==(const TargetDecl&, const TargetDecl&) = default;
};

struct Shape {
  rdf::RdfTerm name;
  std::vector<TargetDecl> targets;
  Constraint constraint;

  friend bool operator==(const Shape&, const Shape&) = default;
};

class ShapeGraph {
 public:
  ShapeGraph() = default;
  // Throws MalformedShape on duplicate names or dangling HasShape references.
  explicit ShapeGraph(std::vector<Shape> shapes);

  const std::vector<Shape>& shapes() const { return shapes_; }
  const Shape* find(const rdf::RdfTerm& name) const;
  bool empty() const { return shapes_.empty(); }
  std::size_t size() const { return shapes_.size(); }

  // Predicate IRIs used by paths, targets and pair constraints; includes
  // rdf:type when class targets exist.
  std::set<std::string> signature() const;

  friend bool operator==(const ShapeGraph&, const ShapeGraph&) = default;

 private:
  std::vector<Shape> shapes_;
};

// Reads every shape in `g`. Shapes are ordered by name.
ShapeGraph extract_shape_graph(const rdf::Graph& g);

// Every elementary cycle of the HasShape reference graph, each rotated to
// start at its smallest shape name. Sorted.
std::vector<std::vector<rdf::RdfTerm>> detect_recursion(const ShapeGraph& sg);

}  // namespace shacl2fol::shacl
