#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace shacl2fol::rdf {

namespace vocab {
inline constexpr std::string_view kRdf =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfFirst =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
inline constexpr std::string_view kRdfRest =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
inline constexpr std::string_view kRdfNil =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
inline constexpr std::string_view kRdfLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view kRdfs =
    "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kRdfsClass =
    "http://www.w3.org/2000/01/rdf-schema#Class";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kXsdString =
    "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdInteger =
    "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kXsdDecimal =
    "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kXsdDouble =
    "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view kXsdBoolean =
    "http://www.w3.org/2001/XMLSchema#boolean";
}  // namespace vocab

enum class TermKind { Iri, Literal, BlankNode };

// An RDF term. Literals typed xsd:string are stored without a datatype, so
// "a" and "a"^^xsd:string compare equal. Equality is otherwise syntactic.
class RdfTerm {
 public:
  RdfTerm() = default;

  static RdfTerm iri(std::string value);
  static RdfTerm blank(std::string label);
  static RdfTerm literal(std::string lexical);
  static RdfTerm typed_literal(std::string lexical, std::string datatype);
  static RdfTerm lang_literal(std::string lexical, std::string lang);

  TermKind kind() const { return kind_; }
  const std::string& lexical() const { return lexical_; }
  const std::optional<std::string>& datatype() const { return datatype_; }
  const std::optional<std::string>& lang() const { return lang_; }

  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_literal() const { return kind_ == TermKind::Literal; }
  bool is_blank() const { return kind_ == TermKind::BlankNode; }

  // N-Triples rendering: <iri>, _:label, "lex", "lex"@en, "lex"^^<dt>.
  std::string to_ntriples() const;

  friend bool operator==(const RdfTerm&, const RdfTerm&) = default;
  friend std::strong_ordering operator<=>(const RdfTerm&,
                                          const RdfTerm&) = default;

 private:
  TermKind kind_ = TermKind::Iri;
  std::string lexical_;
  std::optional<std::string> datatype_;
  std::optional<std::string> lang_;
};

struct Triple {
  RdfTerm subject;
  RdfTerm predicate;
  RdfTerm object;

  // Throws std::invalid_argument unless predicate is an IRI and subject is not
  // a literal.
  Triple(RdfTerm s, RdfTerm p, RdfTerm o);

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&,
                                          const Triple&) = default;
};

class Graph {
 public:
  Graph() = default;
  Graph(std::initializer_list<Triple> triples);

  // Returns false if the triple was already present.
  bool insert(Triple t);
  bool contains(const Triple& t) const { return triples_.contains(t); }

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

  std::set<std::string> predicate_names() const;
  // Distinct subject and object terms.
  std::set<RdfTerm> constants() const;

  // Objects o with (s, p, o); subjects s with (s, p, o).
  std::vector<RdfTerm> objects(const RdfTerm& s, std::string_view p) const;
  std::vector<RdfTerm> subjects(std::string_view p, const RdfTerm& o) const;
  std::optional<RdfTerm> object(const RdfTerm& s, std::string_view p) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::set<Triple> triples_;
};

enum class Syntax { NTriples, Turtle };

// Parses a document into a graph. Blank nodes are relabelled `b<n>` in order
// of first appearance. Collections stay as rdf:first/rdf:rest triples.
Graph parse_document(std::string_view text, Syntax syntax,
                     std::optional<std::string> base_iri = std::nullopt);

// Picks the syntax from the extension (.nt -> NTriples, otherwise Turtle).
Graph parse_file(const std::string& path);

// One triple per line, lines sorted.
std::string serialize_ntriples(const Graph& g);

// Walks an rdf:first/rdf:rest list. Returns nullopt if `head` is not a
// well-formed list.
std::optional<std::vector<RdfTerm>> read_list(const Graph& g,
                                              const RdfTerm& head);

}  // namespace shacl2fol::rdf
