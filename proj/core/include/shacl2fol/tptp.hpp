#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shacl2fol/rdf.hpp"
#include "shacl2fol/scl.hpp"

// TPTP emission. Naming scheme of emitted formulas (stable, used by golden
// tests):
//
//   shape_<i>              one per ShapeDef, in input order
//   target_<i>             one per target axiom, in input order
//   negated_targets        containment: negation of a target conjunction
//   star_<k>_reflexive     approximate zero-or-more relation star_<k>
//   star_<k>_step
//   star_<k>_fact_<i>      grounded zero-or-more relation (validation):
//   star_<k>_closure       closure pairs plus a completeness axiom
//   order_irreflexive, order_transitive, order_leq
//   kind_disjoint_<i>      pairwise disjointness of isIRI/isLiteral/isBlank
//   kind_<i>               node-kind fact for a known constant
//   una_<i> / una_distinct unique name assumption
//   ax_g_<i>               one ground fact per data triple
//   ax_gneg_<i>            one completeness axiom per relation name
//
// Constants are single-quoted atoms holding the IRI, `_:label`, or the
// N-Triples form of a literal. Relations are `'<iri>'`, except rdf:type
// which becomes `isA`. Inside quotes `\` and `'` are backslash-escaped, and
// `%` plus any byte outside printable ASCII is percent-encoded.
namespace shacl2fol::tptp {

enum class Dialect { Fof, Tff };
enum class UnaMode { PairwiseInequality, Distinct };
enum class StarMode { ApproximateAxioms, GroundedClosure };

struct EmitOptions {
  UnaMode una = UnaMode::Distinct;
  Dialect dialect = Dialect::Tff;
  StarMode star = StarMode::ApproximateAxioms;
  std::size_t cardinality_limit = 32;
};

// Throws InvalidOptions when Distinct is combined with Fof, or when the
// cardinality limit is zero.
void check_options(const EmitOptions& opts);

struct Term {
  bool is_variable = false;
  std::string name;  // variable name or rendered (escaped) atom

  static Term variable(std::string name);
  static Term constant(const rdf::RdfTerm& c);
  static Term atom(std::string rendered);

  friend bool operator==(const Term&, const Term&) = default;
};

enum class FolKind {
  True,
  False,
  Atom,
  Eq,
  Distinct,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Forall,
  Exists
};

struct Fol {
  FolKind kind = FolKind::True;
  std::string symbol;              // Atom predicate (rendered)
  std::vector<Term> args;          // Atom, Eq, Distinct
  std::vector<std::string> vars;   // Forall, Exists
  std::vector<Fol> children;

  static Fol truth();
  static Fol falsity();
  static Fol atom(std::string symbol, std::vector<Term> args);
  static Fol eq(Term a, Term b);
  static Fol neq(Term a, Term b);
  static Fol distinct(std::vector<Term> args);
  static Fol negate(Fol f);
  // n-ary; $true children are dropped, an empty conjunction is $true.
  static Fol conj(std::vector<Fol> fs);
  // n-ary; an empty disjunction is $false.
  static Fol disj(std::vector<Fol> fs);
  static Fol implies(Fol a, Fol b);
  static Fol iff(Fol a, Fol b);
  static Fol forall(std::vector<std::string> vars, Fol body);
  static Fol exists(std::vector<std::string> vars, Fol body);

  friend bool operator==(const Fol&, const Fol&) = default;
};

enum class Role { Axiom, Conjecture };

struct TptpFormula {
  std::string name;
  Role role = Role::Axiom;
  Fol body;
};

struct TptpDocument {
  Dialect dialect = Dialect::Fof;
  std::vector<std::string> header;
  std::vector<TptpFormula> formulas;
  // Set when approximate star axioms or order axioms were emitted.
  bool approximate = false;

  void append(std::vector<TptpFormula> fs);
};

// Escaped symbol names.
std::string constant_symbol(const rdf::RdfTerm& c);
std::string role_symbol(std::string_view iri);
std::string shape_relation_symbol(std::string_view relation);
// Inverse of constant_symbol; nullopt if `symbol` is not one.
std::optional<rdf::RdfTerm> parse_constant_symbol(std::string_view symbol);

struct TheoryInput {
  std::span<const scl::SclSentence> sentences;
  // Asserted as one axiom ~(T1 & ... & Tk); only target sentences allowed.
  std::optional<std::span<const scl::SclSentence>> negated_targets;
  // Supplies constants for node-kind facts and the finite graph for
  // GroundedClosure.
  const rdf::Graph* data = nullptr;
};

// One axiom per sentence, then star, order and node-kind axioms.
// Throws CardinalityLimitExceeded or InvalidOptions.
TptpDocument emit_theory(std::span<const scl::SclSentence> sentences,
                         const EmitOptions& opts,
                         const rdf::Graph* data = nullptr);
TptpDocument emit_theory(const TheoryInput& input, const EmitOptions& opts);

// Encodes a single node formula at variable X (exposed for tests).
Fol encode_node_formula(const scl::NodeFormula& f, const EmitOptions& opts);

// Dummy strong-satisfiability constants are skipped.
std::vector<TptpFormula> emit_una(const std::set<rdf::RdfTerm>& constants,
                                  const EmitOptions& opts);

// Positive facts for every triple, then one completeness axiom per relation
// in signature united with the graph's predicates.
std::vector<TptpFormula> emit_graph_axioms(
    const rdf::Graph& g, const std::set<std::string>& signature);

std::string render(const TptpDocument& doc);
std::string render(const Fol& f);

}  // namespace shacl2fol::tptp
