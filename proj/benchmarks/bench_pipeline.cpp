#include <benchmark/benchmark.h>

#include <filesystem>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "shacl2fol/decide.hpp"
#include "shacl2fol/error.hpp"
#include "shacl2fol/oracle.hpp"
#include "shacl2fol/tptp.hpp"
#include "shacl2fol/translate.hpp"

using namespace shacl2fol;

namespace {

const std::string kPrefixes =
    "@prefix sh: <http://www.w3.org/ns/shacl#> .\n"
    "@prefix ex: <http://example.org/> .\n";

// n nodes in a ring over three predicates, plus class memberships.
std::string data_ttl(int n) {
  std::mt19937 rng(n);
  std::string out = kPrefixes;
  for (int i = 0; i < n; ++i) {
    out += "ex:n" + std::to_string(i) + " ex:p" + std::to_string(rng() % 3) +
           " ex:n" + std::to_string((i + 1) % n) + " .\n";
    if (i % 4 == 0) out += "ex:n" + std::to_string(i) + " a ex:C .\n";
  }
  return out;
}

std::string shapes_ttl(int n) {
  static const char* paths[] = {
      "ex:p0", "[ sh:inversePath ex:p1 ]", "( ex:p0 ex:p1 )",
      "[ sh:alternativePath ( ex:p1 ex:p2 ) ]", "[ sh:zeroOrMorePath ex:p2 ]"};
  std::string out = kPrefixes;
  for (int i = 0; i < n; ++i) {
    out += "ex:s" + std::to_string(i) + " a sh:NodeShape ; sh:targetClass ex:C ;\n"
           "  sh:property [ sh:path " + paths[i % 5] + " ; sh:maxCount " +
           std::to_string(1 + i % 3) + " ; sh:nodeKind sh:IRI ] .\n";
  }
  return out;
}

shacl::ShapeGraph shapes(int n) {
  return shacl::extract_shape_graph(
      rdf::parse_document(shapes_ttl(n), rdf::Syntax::Turtle));
}

rdf::Graph data(int n) {
  return rdf::parse_document(data_ttl(n), rdf::Syntax::Turtle);
}

std::optional<decide::ProverConfig> prover() {
  try {
    return decide::discover_prover(std::nullopt, 30);
  } catch (const ProverNotFound&) {
  }
#ifdef SHACL2FOL_ZTPTP
  if (std::filesystem::exists(SHACL2FOL_ZTPTP))
    return decide::ProverConfig{decide::ProverKind::E, SHACL2FOL_ZTPTP, 30};
#endif
  return std::nullopt;
}

}  // namespace

static void BM_ParseTurtle(benchmark::State& state) {
  std::string text = data_ttl(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(rdf::parse_document(text, rdf::Syntax::Turtle));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseTurtle)->RangeMultiplier(4)->Range(16, 4096);

static void BM_TranslateAndEmit(benchmark::State& state) {
  auto sg = shapes(static_cast<int>(state.range(0)));
  std::size_t bytes = 0;
  for (auto _ : state) {
    auto doc = tptp::emit_theory(translate(sg), tptp::EmitOptions{});
    bytes = tptp::render(doc).size();
    benchmark::DoNotOptimize(bytes);
  }
  state.counters["tptp_bytes"] = static_cast<double>(bytes);
}
BENCHMARK(BM_TranslateAndEmit)->RangeMultiplier(4)->Range(1, 256);

static void BM_GraphAxioms(benchmark::State& state) {
  auto g = data(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(tptp::emit_graph_axioms(g, g.predicate_names()));
}
BENCHMARK(BM_GraphAxioms)->RangeMultiplier(4)->Range(16, 4096);

// Pairwise inequalities grow quadratically; $distinct stays one formula.
static void BM_Una(benchmark::State& state) {
  const bool distinct = state.range(1) != 0;
  std::set<rdf::RdfTerm> constants;
  for (int i = 0; i < state.range(0); ++i)
    constants.insert(rdf::RdfTerm::iri("http://example.org/c" + std::to_string(i)));
  tptp::EmitOptions opts;
  opts.una = distinct ? tptp::UnaMode::Distinct : tptp::UnaMode::PairwiseInequality;
  opts.dialect = distinct ? tptp::Dialect::Tff : tptp::Dialect::Fof;
  std::size_t bytes = 0;
  for (auto _ : state) {
    tptp::TptpDocument doc;
    doc.dialect = opts.dialect;
    doc.append(tptp::emit_una(constants, opts));
    bytes = tptp::render(doc).size();
    benchmark::DoNotOptimize(bytes);
  }
  state.counters["tptp_bytes"] = static_cast<double>(bytes);
}
BENCHMARK(BM_Una)->ArgsProduct({{8, 64, 512}, {0, 1}})->ArgNames({"constants", "distinct"});

static void BM_Oracle(benchmark::State& state) {
  auto sg = shapes(8);
  auto g = data(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::evaluate(sg, g));
}
BENCHMARK(BM_Oracle)->RangeMultiplier(4)->Range(16, 1024);

// End to end through the prover, including process start-up. Undecided
// runs (the prover's time limit is 10 s) are counted rather than hidden.
static void BM_ProverValidation(benchmark::State& state) {
  auto config = prover();
  if (!config) {
    state.SkipWithError("no prover available");
    return;
  }
  config->timeout_seconds = 10;
  decide::DecisionTask task;
  task.kind = decide::TaskKind::Validation;
  task.shapes_a = shapes(static_cast<int>(state.range(0)));
  task.data = data(static_cast<int>(state.range(1)));
  task.emit.star = tptp::StarMode::GroundedClosure;
  task.prover = *config;
  const bool expected = oracle::evaluate(task.shapes_a, *task.data).conforms;
  int64_t decided = 0, wrong = 0;
  for (auto _ : state) {
    auto r = decide::decide(task);
    std::filesystem::remove(r.problem_file);
    if (r.verdict == decide::Verdict::Unknown) continue;
    ++decided;
    if ((r.verdict == decide::Verdict::Conforms) != expected) ++wrong;
  }
  state.counters["decided"] = benchmark::Counter(
      static_cast<double>(decided), benchmark::Counter::kAvgIterations);
  state.counters["wrong"] = static_cast<double>(wrong);
}
BENCHMARK(BM_ProverValidation)
    ->ArgsProduct({{1, 2, 4}, {4, 8, 16}})
    ->ArgNames({"shapes", "triples"})
    ->Iterations(2)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
