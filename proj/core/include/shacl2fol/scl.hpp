#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shacl2fol/rdf.hpp"

// The SCL intermediate representation. Sentences (SclSentence), node
// formulas (NodeFormula), path formulas (PathFormula) and order atoms
// (OrderAtom) only admit the shapes of the SCL grammar; general first-order
// formulas cannot be built.
//
// Text form, one sentence per line (variables are x0, x1, ... by binding
// depth, x0 being the focus node):
//
//   T
//   (phi) & (phi)
//   hasShape(<c>, <s>)
//   forall x0. isA(x0, <c>) -> hasShape(x0, <s>)
//   forall x0, x1. [<R>](x0, x1) -> hasShape(x0, <s>)     subjects-of
//   forall x0, x1. [^<R>](x0, x1) -> hasShape(x0, <s>)    objects-of
//   forall x0. hasShape(x0, <s>) <-> psi
//
// Node formulas, with ~ binding tighter than & and quantifiers extending as
// far right as possible:
//
//   T | ~psi | psi & psi | x0 = <c> | isIRI(x0) | isLiteral(x0) | isBlank(x0)
//   hasShape(x0, <s>)
//   exists x1. [path](x0, x1) & psi
//   exists>=n x1. [path](x0, x1) & psi
//   ~exists x1. [path](x0, x1) & <R>(x0, x1)
//   forall x1. [path](x0, x1) <-> <R>(x0, x1)
//   forall x1, x2. [path](x0, x1) & <R>(x0, x2) -> x1 < x2     (or <=)
//
// Paths: <R>, ^<R>, p / q, p | q, p*, p? with / binding tighter than | and
// both nesting to the right. Constants use N-Triples syntax. The shape
// relation is an identifier, `hasShape` by default.
namespace shacl2fol::scl {

using Constant = rdf::RdfTerm;

inline constexpr std::string_view kHasShape = "hasShape";

struct ShapeName {
  rdf::RdfTerm name;
  std::string relation{kHasShape};

  friend bool operator==(const ShapeName&, const ShapeName&) = default;
  friend std::strong_ordering operator<=>(const ShapeName&,
                                          const ShapeName&) = default;
};

enum class PathKind { Role, Seq, Alt, Star, ZeroOrOne };

struct PathFormula {
  PathKind kind = PathKind::Role;
  std::string role;  // predicate IRI, Role only
  bool inverted = false;
  std::vector<PathFormula> children;

  static PathFormula make_role(std::string iri, bool inverted = false);
  static PathFormula seq(PathFormula a, PathFormula b);
  static PathFormula alt(PathFormula a, PathFormula b);
  static PathFormula star(PathFormula p);
  static PathFormula zero_or_one(PathFormula p);

  friend bool operator==(const PathFormula&, const PathFormula&) = default;
  friend std::strong_ordering operator<=>(const PathFormula&,
                                          const PathFormula&) = default;
};

enum class OrderOp { Lt, Leq };

// x < y or x <= y; inverted swaps the arguments.
struct OrderAtom {
  OrderOp op = OrderOp::Lt;
  bool inverted = false;

  friend bool operator==(const OrderAtom&, const OrderAtom&) = default;
  friend std::strong_ordering operator<=>(const OrderAtom&,
                                          const OrderAtom&) = default;
};

enum class Filter { IsIri, IsLiteral, IsBlank };

std::string_view filter_name(Filter f);

enum class NodeKind {
  Top,
  Not,
  And,
  EqConst,
  Filter,
  HasShape,
  Exists,
  NotExistsBoth,
  ForallIff,
  PairwiseOrder,
  AtLeast
};

struct NodeFormula {
  NodeKind kind = NodeKind::Top;
  Constant constant;           // EqConst
  scl::Filter filter = scl::Filter::IsIri;
  ShapeName shape;             // HasShape
  PathFormula path;            // quantified forms
  std::string role;            // NotExistsBoth, ForallIff, PairwiseOrder
  OrderAtom order;             // PairwiseOrder
  std::size_t count = 0;       // AtLeast
  std::vector<NodeFormula> children;

  static NodeFormula top();
  static NodeFormula negate(NodeFormula f);
  static NodeFormula conj(NodeFormula a, NodeFormula b);
  static NodeFormula eq_const(Constant c);
  static NodeFormula make_filter(scl::Filter f);
  static NodeFormula has_shape(ShapeName s);
  static NodeFormula exists(PathFormula p, NodeFormula f);
  static NodeFormula not_exists_both(PathFormula p, std::string role);
  static NodeFormula forall_iff(PathFormula p, std::string role);
  static NodeFormula pairwise_order(PathFormula p, std::string role,
                                    OrderAtom order);
  static NodeFormula at_least(std::size_t n, PathFormula p, NodeFormula f);

  friend bool operator==(const NodeFormula&, const NodeFormula&) = default;
};

enum class SentenceKind {
  Top,
  Conj,
  TargetNode,
  TargetClass,
  TargetSubjectsOf,
  TargetObjectsOf,
  ShapeDef
};

struct SclSentence {
  SentenceKind kind = SentenceKind::Top;
  Constant constant;  // TargetNode node, TargetClass class
  std::string role;   // TargetSubjectsOf / TargetObjectsOf
  ShapeName shape;
  NodeFormula body;   // ShapeDef
  std::vector<SclSentence> children;  // Conj

  static SclSentence top();
  static SclSentence conj(SclSentence a, SclSentence b);
  static SclSentence target_node(Constant c, ShapeName s);
  static SclSentence target_class(Constant c, ShapeName s);
  static SclSentence target_subjects_of(std::string role, ShapeName s);
  static SclSentence target_objects_of(std::string role, ShapeName s);
  static SclSentence shape_def(ShapeName s, NodeFormula body);

  bool is_target() const;

  friend bool operator==(const SclSentence&, const SclSentence&) = default;
};

std::set<ShapeName> free_shape_refs(const NodeFormula& f);

// Constants occurring in a sentence, shape names included.
void collect_constants(const SclSentence& s, std::set<Constant>& out);
// Role IRIs occurring in a sentence.
void collect_roles(const SclSentence& s, std::set<std::string>& out);
void collect_roles(const PathFormula& p, std::set<std::string>& out);

// Flattens Conj trees and drops Top.
std::vector<SclSentence> flatten(std::span<const SclSentence> sentences);

enum class ErrorKind {
  DuplicateDefinition,
  UndefinedShape,
  NamespaceClash,
  InvalidCardinality
};

struct WellFormednessError {
  ErrorKind kind;
  ShapeName shape;
  std::string detail;

  std::string to_string() const;
  friend bool operator==(const WellFormednessError&,
                         const WellFormednessError&) = default;
};

// Empty when the theory is well formed.
std::vector<WellFormednessError> validate_theory(
    std::span<const SclSentence> sentences);

// True for names usable as a shape relation: identifiers that do not clash
// with filter relations or the other reserved relation names.
bool is_valid_shape_relation(std::string_view name);

std::string to_text(const PathFormula& p);
std::string to_text(const NodeFormula& f, std::size_t depth = 0);
std::string to_text(const SclSentence& s);

// Inverse of to_text; throws SyntaxError (line 1, column of the offending
// token).
SclSentence parse_sentence(std::string_view text);
NodeFormula parse_node_formula(std::string_view text, std::size_t depth = 0);

}  // namespace shacl2fol::scl
