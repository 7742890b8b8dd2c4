#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shacl2fol/scl.hpp"
#include "shacl2fol/shacl.hpp"

namespace shacl2fol {

inline constexpr std::string_view kDummyPrefix = "urn:shacl2fol:dummy:";

struct TranslateOptions {
  // Relation used for every shape of the graph being translated.
  std::string shape_relation{scl::kHasShape};
  // Predicates that sh:closed must rule out besides the shape graph's own
  // signature (the data graph's predicates, when validating).
  std::set<std::string> extra_signature;
};

// One ShapeDef per shape, then one target axiom per target declaration, in
// shape order.
std::vector<scl::SclSentence> translate(const shacl::ShapeGraph& sg,
                                        const TranslateOptions& opts = {});

scl::PathFormula translate_path(const shacl::PropertyPath& p);

// `signature` is the predicate set sh:closed expands over.
scl::NodeFormula translate_constraint(
    const shacl::Constraint& c, const std::set<std::string>& signature = {},
    std::string_view shape_relation = scl::kHasShape);

// Appends hasShape(d_i, s_i) for a fresh constant d_i per selected shape.
// Throws std::invalid_argument if a selected shape has no ShapeDef.
std::vector<scl::SclSentence> add_strong_satisfiability_targets(
    std::vector<scl::SclSentence> sentences,
    std::span<const scl::ShapeName> shapes);

bool is_dummy_constant(const rdf::RdfTerm& t);

}  // namespace shacl2fol
