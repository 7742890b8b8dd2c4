#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shacl2fol/rdf.hpp"
#include "shacl2fol/shacl.hpp"
#include "shacl2fol/tptp.hpp"

namespace shacl2fol::decide {

enum class TaskKind { Satisfiability, Containment, Validation };

enum class Verdict {
  Satisfiable,
  Unsatisfiable,
  Contained,
  NotContained,
  Conforms,
  DoesNotConform,
  Unknown
};

std::string_view to_string(Verdict v);
// True for Satisfiable, Contained and Conforms.
bool is_positive(Verdict v);

enum class ProverKind { E, Vampire };

struct ProverConfig {
  ProverKind kind = ProverKind::E;
  std::string executable;
  unsigned timeout_seconds = 60;
};

// Looks up SHACL2FOL_E_PATH / SHACL2FOL_VAMPIRE_PATH, then `eprover` and
// `vampire` on PATH. Without a preference E wins over Vampire.
// Throws ProverNotFound.
ProverConfig discover_prover(std::optional<ProverKind> preferred = {},
                             unsigned timeout_seconds = 60);

// Command line used for a problem file.
std::vector<std::string> prover_command(const ProverConfig& config,
                                        const std::string& problem_file);

struct StrongSat {
  bool enabled = false;
  // Empty selects every shape.
  std::vector<rdf::RdfTerm> shapes;
};

struct DecisionTask {
  TaskKind kind = TaskKind::Satisfiability;
  shacl::ShapeGraph shapes_a;
  std::optional<shacl::ShapeGraph> shapes_b;  // Containment only
  std::optional<rdf::Graph> data;             // Validation only
  tptp::EmitOptions emit;
  StrongSat strong_sat;                       // Satisfiability only
  ProverConfig prover;
  // Where the problem is written; a fresh temporary file when empty.
  std::string problem_file;
};

struct DecisionResult {
  Verdict verdict = Verdict::Unknown;
  bool approximate = false;
  std::string szs_status;
  std::string problem_file;
  long long prover_time_ms = 0;
};

struct ProverRun {
  std::string szs_status;  // normalized
  std::string output;
  long long time_ms = 0;
};

// Maps a raw SZS word to Satisfiable, Unsatisfiable, Timeout, ResourceOut,
// Error or GaveUp.
std::string normalize_szs(std::string_view status);
// The word after the first "SZS status" in `output`.
std::optional<std::string> find_szs_status(std::string_view output);

// Throws InvalidOptions when the task's optional parts do not match its kind.
void check_task(const DecisionTask& task);

// The problem the task would send to the prover.
tptp::TptpDocument build_problem(const DecisionTask& task);

// Runs the configured prover on an existing problem file with a wall-clock
// limit; the child is killed when it runs over. A zero timeout yields
// Timeout without starting the prover. Throws ProverNotFound or
// ProverProtocolError.
ProverRun run_prover_file(const std::string& problem_file,
                          const ProverConfig& config);
ProverRun run_prover(const tptp::TptpDocument& problem,
                     const ProverConfig& config,
                     const std::string& problem_file);

std::string write_problem(const tptp::TptpDocument& problem,
                          const std::string& problem_file);

DecisionResult check_satisfiability(const DecisionTask& task);
DecisionResult check_containment(const DecisionTask& task);
DecisionResult check_validation(const DecisionTask& task);
// Dispatches on task.kind.
DecisionResult decide(const DecisionTask& task);

}  // namespace shacl2fol::decide
