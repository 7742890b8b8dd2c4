#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "shacl2fol/decide.hpp"
#include "shacl2fol/error.hpp"
#include "shacl2fol/oracle.hpp"
#include "shacl2fol/rdf.hpp"
#include "shacl2fol/shacl.hpp"

namespace {

using namespace shacl2fol;
using nlohmann::json;

// Exit codes beyond the verdicts follow sysexits.h.
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitUnavailable = 69;
constexpr int kExitSoftware = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string una = "distinct";
  std::optional<std::string> dialect;
  std::string star = "approx";
  std::optional<std::string> prover;
  unsigned timeout = 60;
  std::string out;
  std::optional<std::string> strong_sat;
  bool json = false;
  std::size_t cardinality_limit = 32;
};

void add_common(CLI::App& cmd, Flags& f, bool decision) {
  cmd.add_option("--una", f.una, "unique name encoding")
      ->check(CLI::IsMember({"pairwise", "distinct"}))
      ->capture_default_str();
  cmd.add_option("--dialect", f.dialect,
                 "TPTP dialect (default: tff with distinct, else fof)")
      ->check(CLI::IsMember({"fof", "tff"}));
  cmd.add_option("--star", f.star, "zero-or-more path encoding")
      ->check(CLI::IsMember({"approx", "ground"}))
      ->capture_default_str();
  cmd.add_option("--cardinality-limit", f.cardinality_limit,
                 "largest count expanded into distinct witnesses")
      ->capture_default_str();
  cmd.add_option("--out", f.out, "write the TPTP problem to this file");
  if (!decision) return;
  cmd.add_option("--prover", f.prover, "theorem prover")
      ->check(CLI::IsMember({"e", "vampire", "none"}));
  cmd.add_option("--timeout", f.timeout, "prover timeout in seconds")
      ->capture_default_str();
  cmd.add_option("--strong-sat", f.strong_sat,
                 "require every listed shape (default: all) to be satisfiable")
      ->expected(0, 1)
      ->default_str("");
  cmd.add_flag("--json", f.json, "print a JSON report");
}

rdf::Graph load(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw InputMissing("cannot read " + path);
  return rdf::parse_file(path);
}

shacl::ShapeGraph load_shapes(const std::string& path) {
  return shacl::extract_shape_graph(load(path));
}

tptp::EmitOptions emit_options(const Flags& f) {
  tptp::EmitOptions o;
  o.una = f.una == "pairwise" ? tptp::UnaMode::PairwiseInequality
                              : tptp::UnaMode::Distinct;
  std::string dialect =
      f.dialect.value_or(o.una == tptp::UnaMode::Distinct ? "tff" : "fof");
  o.dialect = dialect == "tff" ? tptp::Dialect::Tff : tptp::Dialect::Fof;
  o.star = f.star == "ground" ? tptp::StarMode::GroundedClosure
                              : tptp::StarMode::ApproximateAxioms;
  o.cardinality_limit = f.cardinality_limit;
  return o;
}

decide::StrongSat strong_sat(const Flags& f) {
  decide::StrongSat s;
  if (!f.strong_sat) return s;
  s.enabled = true;
  std::string list = *f.strong_sat;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    std::string item = list.substr(start, comma - start);
    if (item.size() >= 2 && item.front() == '<' && item.back() == '>')
      item = item.substr(1, item.size() - 2);
    if (!item.empty()) s.shapes.push_back(rdf::RdfTerm::iri(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return s;
}

decide::DecisionTask make_task(decide::TaskKind kind,
                               const std::vector<std::string>& files,
                               const Flags& f) {
  std::size_t want = kind == decide::TaskKind::Satisfiability ? 1 : 2;
  if (files.size() != want)
    throw UsageError("expected " + std::to_string(want) + " input file(s)");
  decide::DecisionTask task;
  task.kind = kind;
  task.shapes_a = load_shapes(files[0]);
  if (kind == decide::TaskKind::Containment)
    task.shapes_b = load_shapes(files[1]);
  if (kind == decide::TaskKind::Validation) task.data = load(files[1]);
  task.emit = emit_options(f);
  task.strong_sat = strong_sat(f);
  task.problem_file = f.out;
  return task;
}

decide::ProverConfig prover_config(const Flags& f) {
  std::optional<decide::ProverKind> kind;
  if (f.prover == "none")
    throw UsageError("--prover none is only valid for emit and oracle");
  if (f.prover == "e") kind = decide::ProverKind::E;
  if (f.prover == "vampire") kind = decide::ProverKind::Vampire;
  return decide::discover_prover(kind, f.timeout);
}

int report(const decide::DecisionResult& r, bool as_json) {
  if (as_json) {
    json j{{"verdict", decide::to_string(r.verdict)},
           {"szsStatus", r.szs_status},
           {"approximate", r.approximate},
           {"problemFile", r.problem_file},
           {"proverTimeMs", r.prover_time_ms}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << decide::to_string(r.verdict) << "\n"
              << "szs status: " << r.szs_status << "\n"
              << "approximate: " << (r.approximate ? "true" : "false") << "\n"
              << "problem file: " << r.problem_file << "\n"
              << "prover time: " << r.prover_time_ms << " ms\n";
  }
  if (r.verdict == decide::Verdict::Unknown) return kExitUnknown;
  return decide::is_positive(r.verdict) ? 0 : 1;
}

int run_oracle(const std::vector<std::string>& files, bool as_json) {
  if (files.size() != 2) throw UsageError("expected <shapes> <data>");
  auto sg = load_shapes(files[0]);
  auto g = load(files[1]);
  oracle::Report r = oracle::evaluate(sg, g);
  const char* verdict = r.conforms ? "Conforms" : "DoesNotConform";
  if (as_json) {
    json v = json::array();
    for (const auto& x : r.violations)
      v.push_back({{"node", x.node.to_ntriples()},
                   {"shape", x.shape.to_ntriples()}});
    std::cout << json{{"verdict", verdict}, {"violations", v}}.dump(2) << "\n";
  } else {
    std::cout << verdict << "\n";
    for (const auto& x : r.violations)
      std::cout << x.node.to_ntriples() << " " << x.shape.to_ntriples()
                << "\n";
  }
  return r.conforms ? 0 : 1;
}

std::optional<decide::TaskKind> task_kind(const std::string& name) {
  if (name == "sat") return decide::TaskKind::Satisfiability;
  if (name == "contains") return decide::TaskKind::Containment;
  if (name == "validate") return decide::TaskKind::Validation;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reason about SHACL shape graphs with first-order theorem provers"};
  app.require_subcommand(1);

  Flags flags;
  std::vector<std::string> files;
  std::string emit_task;

  auto* sat = app.add_subcommand("sat", "check satisfiability of a shape graph");
  sat->add_option("shapes", files, "shape graph")->required()->expected(1);
  add_common(*sat, flags, true);

  auto* contains =
      app.add_subcommand("contains", "check whether shapesA is contained in shapesB");
  contains->add_option("shapes", files, "shapesA shapesB")
      ->required()
      ->expected(2);
  add_common(*contains, flags, true);

  auto* validate =
      app.add_subcommand("validate", "check whether a data graph conforms");
  validate->add_option("inputs", files, "shapes data")->required()->expected(2);
  add_common(*validate, flags, true);

  auto* emit = app.add_subcommand(
      "emit", "write the TPTP problem of a task without running a prover");
  emit->add_option("task", emit_task, "sat, contains or validate")
      ->required()
      ->check(CLI::IsMember({"sat", "contains", "validate"}));
  emit->add_option("inputs", files, "input files")->required()->expected(1, 2);
  add_common(*emit, flags, true);

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "evaluate a non-recursive shape graph directly");
  oracle_cmd->add_option("inputs", files, "shapes data")
      ->required()
      ->expected(2);
  oracle_cmd->add_flag("--json", flags.json, "print a JSON report");
  oracle_cmd->add_option("--prover", flags.prover, "ignored")
      ->check(CLI::IsMember({"e", "vampire", "none"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (oracle_cmd->parsed()) return run_oracle(files, flags.json);

    if (emit->parsed()) {
      auto task = make_task(*task_kind(emit_task), files, flags);
      auto doc = decide::build_problem(task);
      if (flags.out.empty()) {
        std::cout << tptp::render(doc);
      } else {
        decide::write_problem(doc, flags.out);
      }
      return 0;
    }

    decide::TaskKind kind = sat->parsed()        ? decide::TaskKind::Satisfiability
                            : contains->parsed() ? decide::TaskKind::Containment
                                                 : decide::TaskKind::Validation;
    auto task = make_task(kind, files, flags);
    decide::check_task(task);
    task.prover = prover_config(flags);
    return report(decide::decide(task), flags.json);
  } catch (const UsageError& e) {
    std::cerr << "shacl2fol: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidOptions& e) {
    std::cerr << "shacl2fol: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputMissing& e) {
    std::cerr << "shacl2fol: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const ProverNotFound& e) {
    std::cerr << "shacl2fol: " << e.what() << "\n";
    return kExitUnavailable;
  } catch (const ProverProtocolError& e) {
    std::cerr << "shacl2fol: " << e.what() << "\n";
    return kExitSoftware;
  } catch (const Error& e) {
    // Syntax errors carry file:line:column in the message.
    std::cerr << "shacl2fol: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "shacl2fol: " << e.what() << "\n";
    return kExitSoftware;
  }
}
