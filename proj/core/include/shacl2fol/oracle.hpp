#pragma once

#include <set>
#include <vector>

#include "shacl2fol/rdf.hpp"
#include "shacl2fol/shacl.hpp"

// Direct evaluation of non-recursive shape graphs over a concrete data
// graph. Shares no code with the translation and emission path, so it can
// serve as the reference when checking prover verdicts.
namespace shacl2fol::oracle {

struct Violation {
  rdf::RdfTerm node;
  rdf::RdfTerm shape;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct Report {
  bool conforms = true;
  std::vector<Violation> violations;  // sorted
};

// Nodes reachable from `start` through `p`.
std::set<rdf::RdfTerm> path_eval(const shacl::PropertyPath& p,
                                 const rdf::Graph& g,
                                 const rdf::RdfTerm& start);

// Target nodes of one shape.
std::set<rdf::RdfTerm> target_nodes(const shacl::Shape& shape,
                                    const rdf::Graph& g);

bool satisfies(const shacl::ShapeGraph& sg, const rdf::Graph& g,
               const rdf::RdfTerm& node, const shacl::Constraint& c);

// Throws RecursiveShapeGraph when shape references form a cycle.
Report evaluate(const shacl::ShapeGraph& sg, const rdf::Graph& g);

}  // namespace shacl2fol::oracle
