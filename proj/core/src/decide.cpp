#include "shacl2fol/decide.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <set>
#include <span>

#include "shacl2fol/error.hpp"
#include "shacl2fol/translate.hpp"

namespace shacl2fol::decide {

namespace fs = std::filesystem;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Satisfiable: return "Satisfiable";
    case Verdict::Unsatisfiable: return "Unsatisfiable";
    case Verdict::Contained: return "Contained";
    case Verdict::NotContained: return "NotContained";
    case Verdict::Conforms: return "Conforms";
    case Verdict::DoesNotConform: return "DoesNotConform";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool is_positive(Verdict v) {
  return v == Verdict::Satisfiable || v == Verdict::Contained ||
         v == Verdict::Conforms;
}

namespace {

bool executable(const fs::path& p) {
  std::error_code ec;
  return fs::is_regular_file(p, ec) && ::access(p.c_str(), X_OK) == 0;
}

std::optional<std::string> search_path(std::string_view name) {
  const char* path = std::getenv("PATH");
  if (!path) return std::nullopt;
  std::string_view rest = path;
  while (!rest.empty()) {
    auto colon = rest.find(':');
    std::string_view dir = rest.substr(0, colon);
    rest = colon == std::string_view::npos ? "" : rest.substr(colon + 1);
    if (dir.empty()) continue;
    fs::path candidate = fs::path(dir) / name;
    if (executable(candidate)) return candidate.string();
  }
  return std::nullopt;
}

std::optional<std::string> locate(ProverKind kind) {
  const char* env = std::getenv(kind == ProverKind::E ? "SHACL2FOL_E_PATH"
                                                      : "SHACL2FOL_VAMPIRE_PATH");
  if (env && *env) {
    if (executable(env)) return std::string(env);
    return std::nullopt;
  }
  return search_path(kind == ProverKind::E ? "eprover" : "vampire");
}

std::string make_temp_problem() {
  std::string tmpl = (fs::temp_directory_path() / "shacl2fol-XXXXXX.p").string();
  int fd = ::mkstemps(tmpl.data(), 2);
  if (fd < 0) throw Error("cannot create temporary problem file");
  ::close(fd);
  return tmpl;
}

}  // namespace

ProverConfig discover_prover(std::optional<ProverKind> preferred,
                             unsigned timeout_seconds) {
  std::vector<ProverKind> order;
  if (preferred)
    order = {*preferred};
  else
    order = {ProverKind::E, ProverKind::Vampire};
  for (auto kind : order) {
    if (auto exe = locate(kind)) return {kind, *exe, timeout_seconds};
  }
  throw ProverNotFound(
      "no theorem prover found; install E (eprover) or Vampire, or set "
      "SHACL2FOL_E_PATH / SHACL2FOL_VAMPIRE_PATH");
}

std::vector<std::string> prover_command(const ProverConfig& config,
                                        const std::string& problem_file) {
  std::string t = std::to_string(config.timeout_seconds);
  if (config.kind == ProverKind::E)
    return {config.executable, "--auto", "--silent", "--soft-cpu-limit=" + t,
            problem_file};
  return {config.executable, "--mode", "casc_sat", "--time_limit", t,
          problem_file};
}

std::string normalize_szs(std::string_view s) {
  if (s == "Satisfiable" || s == "CounterSatisfiable" ||
      s == "FiniteSatisfiable")
    return "Satisfiable";
  if (s == "Unsatisfiable" || s == "ContradictoryAxioms")
    return "Unsatisfiable";
  if (s == "Timeout") return "Timeout";
  if (s == "ResourceOut" || s == "MemoryOut") return "ResourceOut";
  if (s == "Error" || s == "SyntaxError" || s == "InputError" ||
      s == "OSError")
    return "Error";
  return "GaveUp";
}

std::optional<std::string> find_szs_status(std::string_view output) {
  constexpr std::string_view key = "SZS status";
  auto pos = output.find(key);
  if (pos == std::string_view::npos) return std::nullopt;
  pos += key.size();
  auto start = pos;
  while (pos < output.size() && (output[pos] == ' ' || output[pos] == '\t'))
    ++pos;
  if (pos == start) return std::nullopt;
  auto end = pos;
  while (end < output.size() &&
         std::isalnum(static_cast<unsigned char>(output[end])))
    ++end;
  if (end == pos) return std::nullopt;
  return std::string(output.substr(pos, end - pos));
}

std::string write_problem(const tptp::TptpDocument& problem,
                          const std::string& problem_file) {
  std::string path = problem_file.empty() ? make_temp_problem() : problem_file;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write problem file " + path);
  out << tptp::render(problem);
  if (!out) throw Error("cannot write problem file " + path);
  return path;
}

ProverRun run_prover_file(const std::string& problem_file,
                          const ProverConfig& config) {
  if (!executable(config.executable))
    throw ProverNotFound("prover executable not found: " + config.executable);
  ProverRun run;
  if (config.timeout_seconds == 0) {
    run.szs_status = "Timeout";
    return run;
  }

  std::vector<std::string> argv_s = prover_command(config, problem_file);
  std::vector<char*> argv;
  for (auto& a : argv_s) argv.push_back(a.data());
  argv.push_back(nullptr);

  int fds[2];
  if (::pipe2(fds, O_CLOEXEC) != 0) throw Error("pipe failed");
  auto start = std::chrono::steady_clock::now();
  pid_t pid = ::fork();
  if (pid < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    throw Error("fork failed");
  }
  if (pid == 0) {
    ::dup2(fds[1], STDOUT_FILENO);
    ::dup2(fds[1], STDERR_FILENO);
    int devnull = ::open("/dev/null", O_RDONLY);
    if (devnull >= 0) ::dup2(devnull, STDIN_FILENO);
    ::execv(argv[0], argv.data());
    ::_exit(127);
  }
  ::close(fds[1]);

  // The prover gets its own limit plus a grace second to report it.
  auto deadline = start + std::chrono::seconds(config.timeout_seconds + 1);
  bool killed = false;
  char buf[4096];
  for (;;) {
    auto now = std::chrono::steady_clock::now();
    if (now >= deadline) {
      ::kill(pid, SIGKILL);
      killed = true;
      break;
    }
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - now);
    pollfd p{fds[0], POLLIN, 0};
    int r = ::poll(&p, 1, static_cast<int>(left.count()) + 1);
    if (r < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (r == 0) continue;
    ssize_t n = ::read(fds[0], buf, sizeof buf);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    run.output.append(buf, static_cast<std::size_t>(n));
  }
  ::close(fds[0]);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  run.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();

  if (auto word = find_szs_status(run.output)) {
    run.szs_status = normalize_szs(*word);
  } else if (killed) {
    run.szs_status = "Timeout";
  } else if (WIFEXITED(status) && WEXITSTATUS(status) == 127 &&
             run.output.empty()) {
    throw ProverNotFound("cannot execute " + config.executable);
  } else {
    throw ProverProtocolError("prover output has no SZS status line: " +
                              run.output.substr(0, 500));
  }
  return run;
}

ProverRun run_prover(const tptp::TptpDocument& problem,
                     const ProverConfig& config,
                     const std::string& problem_file) {
  return run_prover_file(write_problem(problem, problem_file), config);
}

void check_task(const DecisionTask& task) {
  tptp::check_options(task.emit);
  bool b = task.shapes_b.has_value();
  bool d = task.data.has_value();
  switch (task.kind) {
    case TaskKind::Satisfiability:
      if (b || d)
        throw InvalidOptions("satisfiability takes a single shape graph");
      break;
    case TaskKind::Containment:
      if (!b || d)
        throw InvalidOptions("containment takes exactly two shape graphs");
      break;
    case TaskKind::Validation:
      if (b || !d)
        throw InvalidOptions("validation takes a shape graph and a data graph");
      break;
  }
  if (task.strong_sat.enabled && task.kind != TaskKind::Satisfiability)
    throw InvalidOptions("strong satisfiability only applies to sat");
  if (task.emit.star == tptp::StarMode::GroundedClosure &&
      task.kind != TaskKind::Validation)
    throw InvalidOptions("grounded star closure is only valid for validation");
}

namespace {

std::string task_name(TaskKind k) {
  switch (k) {
    case TaskKind::Satisfiability: return "satisfiability";
    case TaskKind::Containment: return "containment";
    case TaskKind::Validation: return "validation";
  }
  return "";
}

std::vector<std::string> header(const DecisionTask& task) {
  const auto& o = task.emit;
  return {
      "shacl2fol " + task_name(task.kind) + " problem",
      std::string("una=") +
          (o.una == tptp::UnaMode::Distinct ? "distinct" : "pairwise") +
          " star=" +
          (o.star == tptp::StarMode::ApproximateAxioms ? "approx" : "ground") +
          " cardinality-limit=" + std::to_string(o.cardinality_limit),
  };
}

void collect_all_constants(std::span<const scl::SclSentence> ss,
                           std::set<rdf::RdfTerm>& out) {
  for (const auto& s : ss) scl::collect_constants(s, out);
}

}  // namespace

tptp::TptpDocument build_problem(const DecisionTask& task) {
  check_task(task);
  std::set<rdf::RdfTerm> constants;
  tptp::TptpDocument doc;

  switch (task.kind) {
    case TaskKind::Satisfiability: {
      auto sentences = translate(task.shapes_a);
      if (task.strong_sat.enabled) {
        std::vector<scl::ShapeName> selected;
        if (task.strong_sat.shapes.empty()) {
          for (const auto& s : task.shapes_a.shapes())
            selected.push_back({s.name, std::string(scl::kHasShape)});
        } else {
          for (const auto& n : task.strong_sat.shapes) {
            if (!task.shapes_a.find(n))
              throw InvalidOptions("unknown shape for strong satisfiability: " +
                                   n.to_ntriples());
            selected.push_back({n, std::string(scl::kHasShape)});
          }
        }
        sentences = add_strong_satisfiability_targets(std::move(sentences),
                                                      selected);
      }
      collect_all_constants(sentences, constants);
      doc = tptp::emit_theory(sentences, task.emit);
      break;
    }
    case TaskKind::Containment: {
      const auto& b = *task.shapes_b;
      TranslateOptions oa;
      oa.extra_signature = b.signature();
      TranslateOptions ob;
      ob.shape_relation = "hasShape_B";
      ob.extra_signature = task.shapes_a.signature();
      auto sentences = translate(task.shapes_a, oa);
      std::vector<scl::SclSentence> targets_b;
      for (auto& s : translate(b, ob)) {
        if (s.is_target())
          targets_b.push_back(std::move(s));
        else
          sentences.push_back(std::move(s));
      }
      collect_all_constants(sentences, constants);
      collect_all_constants(targets_b, constants);
      tptp::TheoryInput in;
      in.sentences = sentences;
      in.negated_targets = std::span<const scl::SclSentence>(targets_b);
      doc = tptp::emit_theory(in, task.emit);
      break;
    }
    case TaskKind::Validation: {
      const auto& g = *task.data;
      TranslateOptions oa;
      oa.extra_signature = g.predicate_names();
      auto sentences = translate(task.shapes_a, oa);
      collect_all_constants(sentences, constants);
      auto data_constants = g.constants();
      constants.insert(data_constants.begin(), data_constants.end());
      doc = tptp::emit_theory(sentences, task.emit, &g);
      std::set<std::string> signature = g.predicate_names();
      for (const auto& s : sentences) scl::collect_roles(s, signature);
      doc.append(tptp::emit_graph_axioms(g, signature));
      break;
    }
  }
  doc.append(tptp::emit_una(constants, task.emit));
  doc.header = header(task);
  return doc;
}

namespace {

DecisionResult run(const DecisionTask& task, Verdict positive,
                   Verdict negative) {
  tptp::TptpDocument doc = build_problem(task);
  DecisionResult result;
  result.approximate = doc.approximate;
  result.problem_file = write_problem(doc, task.problem_file);
  ProverRun r = run_prover_file(result.problem_file, task.prover);
  result.szs_status = r.szs_status;
  result.prover_time_ms = r.time_ms;
  if (r.szs_status == "Satisfiable")
    result.verdict = positive;
  else if (r.szs_status == "Unsatisfiable")
    result.verdict = negative;
  else
    result.verdict = Verdict::Unknown;
  return result;
}

void require_kind(const DecisionTask& task, TaskKind kind) {
  if (task.kind != kind)
    throw InvalidOptions("task kind does not match the requested check");
}

}  // namespace

DecisionResult check_satisfiability(const DecisionTask& task) {
  require_kind(task, TaskKind::Satisfiability);
  return run(task, Verdict::Satisfiable, Verdict::Unsatisfiable);
}

DecisionResult check_containment(const DecisionTask& task) {
  require_kind(task, TaskKind::Containment);
  // Unsatisfiable means no graph satisfies A while violating B.
  return run(task, Verdict::NotContained, Verdict::Contained);
}

DecisionResult check_validation(const DecisionTask& task) {
  require_kind(task, TaskKind::Validation);
  return run(task, Verdict::Conforms, Verdict::DoesNotConform);
}

DecisionResult decide(const DecisionTask& task) {
  switch (task.kind) {
    case TaskKind::Satisfiability: return check_satisfiability(task);
    case TaskKind::Containment: return check_containment(task);
    case TaskKind::Validation: return check_validation(task);
  }
  throw InvalidOptions("unknown task kind");
}

}  // namespace shacl2fol::decide
