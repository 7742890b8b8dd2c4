#pragma once

#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shacl2fol/decide.hpp"
#include "shacl2fol/error.hpp"
#include "shacl2fol/rdf.hpp"
#include "shacl2fol/shacl.hpp"
#include "shacl2fol/tptp.hpp"

namespace testsupport {

using namespace shacl2fol;

inline constexpr std::string_view kEx = "http://example.org/";
inline constexpr std::string_view kPrefixes =
    "@prefix sh: <http://www.w3.org/ns/shacl#> .\n"
    "@prefix ex: <http://example.org/> .\n"
    "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n";

inline std::string ex(std::string_view local) {
  return std::string(kEx) + std::string(local);
}
inline rdf::RdfTerm exi(std::string_view local) {
  return rdf::RdfTerm::iri(ex(local));
}

// Parses Turtle with the usual prefixes predeclared.
inline rdf::Graph turtle(std::string_view body) {
  return rdf::parse_document(std::string(kPrefixes) + std::string(body),
                             rdf::Syntax::Turtle);
}

inline shacl::ShapeGraph shapes(std::string_view body) {
  return shacl::extract_shape_graph(turtle(body));
}

// A configured prover, or the in-tree z3 driver when neither E nor Vampire
// is installed.
inline std::optional<decide::ProverConfig> prover(unsigned timeout = 10) {
  try {
    return decide::discover_prover(std::nullopt, timeout);
  } catch (const ProverNotFound&) {
  }
#ifdef SHACL2FOL_ZTPTP
  std::string path = SHACL2FOL_ZTPTP;
  if (!path.empty() && std::filesystem::exists(path))
    return decide::ProverConfig{decide::ProverKind::E, path, timeout};
#endif
  return std::nullopt;
}

// Random graph over nodes n0..n{nodes-1}, predicates p0..p{preds-1}.
inline rdf::Graph random_graph(std::mt19937& rng, std::size_t max_triples,
                               std::size_t preds, std::size_t nodes) {
  rdf::Graph g;
  std::uniform_int_distribution<std::size_t> count(0, max_triples);
  std::uniform_int_distribution<std::size_t> node(0, nodes - 1);
  std::uniform_int_distribution<std::size_t> pred(0, preds - 1);
  std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i)
    g.insert({exi("n" + std::to_string(node(rng))),
              exi("p" + std::to_string(pred(rng))),
              exi("n" + std::to_string(node(rng)))});
  return g;
}

// Finite first-order structure for model checking emitted formulas.
// Elements are 0..size-1; constants and relations are keyed by their
// rendered TPTP symbol.
struct Structure {
  int size = 0;
  std::map<std::string, int> constants;
  std::map<std::string, std::set<std::vector<int>>> relations;

  bool holds(const tptp::Fol& f) const {
    std::map<std::string, int> env;
    return eval(f, env);
  }

 private:
  int value(const tptp::Term& t, const std::map<std::string, int>& env) const {
    if (t.is_variable) {
      auto it = env.find(t.name);
      if (it == env.end()) throw std::logic_error("unbound " + t.name);
      return it->second;
    }
    auto it = constants.find(t.name);
    if (it == constants.end())
      throw std::logic_error("uninterpreted constant " + t.name);
    return it->second;
  }

  bool eval(const tptp::Fol& f, std::map<std::string, int>& env) const {
    using K = tptp::FolKind;
    switch (f.kind) {
      case K::True: return true;
      case K::False: return false;
      case K::Atom: {
        std::vector<int> args;
        for (const auto& a : f.args) args.push_back(value(a, env));
        auto it = relations.find(f.symbol);
        return it != relations.end() && it->second.contains(args);
      }
      case K::Eq: return value(f.args[0], env) == value(f.args[1], env);
      case K::Distinct: {
        std::set<int> seen;
        for (const auto& a : f.args)
          if (!seen.insert(value(a, env)).second) return false;
        return true;
      }
      case K::Not: return !eval(f.children[0], env);
      case K::And:
        for (const auto& c : f.children)
          if (!eval(c, env)) return false;
        return true;
      case K::Or:
        for (const auto& c : f.children)
          if (eval(c, env)) return true;
        return false;
      case K::Implies:
        return !eval(f.children[0], env) || eval(f.children[1], env);
      case K::Iff:
        return eval(f.children[0], env) == eval(f.children[1], env);
      case K::Forall:
      case K::Exists:
        return quantify(f, 0, env);
    }
    return false;
  }

  bool quantify(const tptp::Fol& f, std::size_t i,
                std::map<std::string, int>& env) const {
    if (i == f.vars.size()) return eval(f.children[0], env);
    bool universal = f.kind == tptp::FolKind::Forall;
    auto saved = env.find(f.vars[i]) != env.end()
                     ? std::optional<int>(env[f.vars[i]])
                     : std::nullopt;
    bool result = universal;
    for (int d = 0; d < size; ++d) {
      env[f.vars[i]] = d;
      bool r = quantify(f, i + 1, env);
      if (universal && !r) {
        result = false;
        break;
      }
      if (!universal && r) {
        result = true;
        break;
      }
    }
    if (saved)
      env[f.vars[i]] = *saved;
    else
      env.erase(f.vars[i]);
    return result;
  }
};

}  // namespace testsupport
