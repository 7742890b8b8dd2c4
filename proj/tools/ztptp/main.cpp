// ztptp: a small TPTP front end over the z3 C++ API.
//
// Reads untyped first-order TPTP (fof, plus tff without type declarations
// beyond $i/$o) and reports the result as an SZS status line, the same way
// E does. The command line mirrors the subset of E's used by shacl2fol:
//
//   ztptp [--auto] [--silent] [--soft-cpu-limit=<s>] <problem.p>
//
// plus two debugging aids: --smt2 prints the problem as SMT-LIB instead of
// solving it, and --only=<phase> runs a single phase of the portfolio.
// ZTPTP_TRACE in the environment logs each phase's outcome to stderr.
//
// Formulas with the conjecture role are negated before solving, so the
// reported status follows the SZS convention (Theorem/CounterSatisfiable).
//
// Solving is a small portfolio sharing the time limit: z3 behind a
// quantifier-elimination preprocessing tactic, then a finite model search
// that grounds every quantifier over domains of growing size (it can only
// answer satisfiable, since a finite model of the axioms is a model), then
// plain z3 with whatever time is left.

#include <z3++.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstring>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Tok {
  End,
  LowerWord,
  UpperWord,
  DollarWord,
  Quoted,
  Number,
  Punct
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string src) : src_(std::move(src)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      Token t;
      t.line = line_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::islower(static_cast<unsigned char>(c)) ||
          std::isupper(static_cast<unsigned char>(c)) || c == '$') {
        std::size_t start = pos_;
        ++pos_;
        if (c == '$' && pos_ < src_.size() && src_[pos_] == '$') ++pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_'))
          ++pos_;
        t.text = src_.substr(start, pos_ - start);
        t.kind = c == '$'                                           ? Tok::DollarWord
                 : std::islower(static_cast<unsigned char>(c)) ? Tok::LowerWord
                                                                : Tok::UpperWord;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_])))
          ++pos_;
        t.kind = Tok::Number;
        t.text = src_.substr(start, pos_ - start);
      } else if (c == '\'' || c == '"') {
        t.kind = c == '\'' ? Tok::Quoted : Tok::LowerWord;
        ++pos_;
        std::string text;
        for (;;) {
          if (pos_ >= src_.size()) throw ParseError("unterminated quote");
          char d = src_[pos_++];
          if (d == c) break;
          if (d == '\\') {
            if (pos_ >= src_.size()) throw ParseError("bad escape");
            d = src_[pos_++];
            if (d != '\\' && d != c) throw ParseError("bad escape");
          } else if (static_cast<unsigned char>(d) < 32 ||
                     static_cast<unsigned char>(d) > 126) {
            throw ParseError("invalid character in quoted atom");
          }
          text += d;
        }
        if (c == '"') text = "\"" + text + "\"";  // distinct objects
        t.text = text;
      } else {
        static const char* multi[] = {"<=>", "<~>", "=>", "<=", "~|", "~&",
                                      "!="};
        t.kind = Tok::Punct;
        for (const char* m : multi) {
          if (src_.compare(pos_, std::strlen(m), m) == 0) {
            t.text = m;
            break;
          }
        }
        if (t.text.empty()) {
          if (std::string_view("()[],.:!?~&|=").find(c) ==
              std::string_view::npos)
            throw ParseError(std::string("unexpected character '") + c + "'");
          t.text = std::string(1, c);
        }
        pos_ += t.text.size();
      }
      out.push_back(t);
    }
  }

 private:
  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
        auto end = src_.find("*/", pos_ + 2);
        if (end == std::string::npos) throw ParseError("unterminated comment");
        for (std::size_t i = pos_; i < end; ++i)
          if (src_[i] == '\n') ++line_;
        pos_ = end + 2;
      } else {
        return;
      }
    }
  }

  std::string src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

class Parser {
 public:
  Parser(z3::context& ctx, std::vector<Token> toks)
      : ctx_(ctx), toks_(std::move(toks)), sort_(ctx.uninterpreted_sort("U")) {}

  // Appends the problem's formulas to `out`; conjectures are negated.
  void run(z3::solver& out, bool& has_conjecture) {
    while (peek().kind != Tok::End) {
      Token lang = next();
      if (lang.kind != Tok::LowerWord ||
          (lang.text != "fof" && lang.text != "tff" && lang.text != "cnf"))
        fail("expected fof, tff or cnf");
      expect("(");
      Token name = next();
      if (name.kind != Tok::LowerWord && name.kind != Tok::Quoted &&
          name.kind != Tok::Number)
        fail("bad formula name");
      expect(",");
      Token role = next();
      if (role.kind != Tok::LowerWord) fail("bad role");
      expect(",");
      if (role.text == "type") {
        skip_type();
      } else {
        vars_.clear();
        z3::expr f = lang.text == "cnf" ? clause() : formula();
        if (role.text == "conjecture") {
          has_conjecture = true;
          out.add(!f);
        } else if (role.text == "negated_conjecture" || role.text == "axiom" ||
                   role.text == "hypothesis" || role.text == "lemma" ||
                   role.text == "definition" || role.text == "assumption" ||
                   role.text == "theorem" || role.text == "plain") {
          out.add(f);
        } else {
          fail("unsupported role " + role.text);
        }
      }
      if (peek().text == ",") {
        // Annotations are ignored.
        int depth = 0;
        next();
        while (!(depth == 0 && peek().text == ")")) {
          if (peek().kind == Tok::End) fail("unterminated annotation");
          if (peek().text == "(" || peek().text == "[") ++depth;
          if (peek().text == ")" || peek().text == "]") --depth;
          next();
        }
      }
      expect(")");
      expect(".");
    }
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    std::size_t i = std::min(pos_ + k, toks_.size() - 1);
    return toks_[i];
  }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(peek().line) + ": " + msg +
                     " near '" + peek().text + "'");
  }
  void expect(const std::string& p) {
    if (peek().kind != Tok::Punct || peek().text != p) fail("expected " + p);
    next();
  }
  bool at(const std::string& p) const {
    return peek().kind == Tok::Punct && peek().text == p;
  }

  void skip_type() {
    int depth = 0;
    while (!(depth == 0 && at(")"))) {
      if (peek().kind == Tok::End) fail("unterminated type declaration");
      if (at("(")) ++depth;
      if (at(")")) --depth;
      next();
    }
  }

  z3::expr clause() {
    // cnf: disjunction of literals, variables implicitly universal.
    bool paren = at("(");
    if (paren) next();
    z3::expr f = literal();
    while (at("|")) {
      next();
      f = f || literal();
    }
    if (paren) expect(")");
    if (vars_.empty()) return f;
    z3::expr_vector vs(ctx_);
    for (auto& [n, v] : vars_) vs.push_back(v);
    return quantifier(true, vs, f);
  }

  z3::expr literal() {
    if (at("~")) {
      next();
      return !atomic(true);
    }
    return atomic(true);
  }

  z3::expr formula() {
    z3::expr lhs = unitary();
    if (at("&") || at("|")) {
      std::string op = peek().text;
      while (at(op)) {
        next();
        z3::expr rhs = unitary();
        lhs = op == "&" ? (lhs && rhs) : (lhs || rhs);
      }
      return lhs;
    }
    if (at("<=>") || at("=>") || at("<=") || at("<~>") || at("~|") ||
        at("~&")) {
      std::string op = next().text;
      z3::expr rhs = unitary();
      if (op == "<=>") return lhs == rhs;
      if (op == "=>") return z3::implies(lhs, rhs);
      if (op == "<=") return z3::implies(rhs, lhs);
      if (op == "<~>") return lhs != rhs;
      if (op == "~|") return !(lhs || rhs);
      return !(lhs && rhs);
    }
    return lhs;
  }

  z3::expr unitary() {
    if (at("(")) {
      next();
      z3::expr f = formula();
      expect(")");
      return f;
    }
    if (at("~")) {
      next();
      return !unitary();
    }
    if (at("!") || at("?")) {
      bool universal = next().text == "!";
      expect("[");
      std::vector<std::pair<std::string, std::optional<z3::expr>>> saved;
      z3::expr_vector bound(ctx_);
      for (;;) {
        Token v = next();
        if (v.kind != Tok::UpperWord) fail("expected variable");
        if (at(":")) {  // typed variable, only $i is supported
          next();
          Token ty = next();
          if (ty.text != "$i") fail("unsupported variable type " + ty.text);
        }
        auto it = vars_.find(v.text);
        saved.emplace_back(v.text, it == vars_.end()
                                       ? std::nullopt
                                       : std::optional<z3::expr>(it->second));
        z3::expr c = ctx_.constant(("V!" + v.text + "!" +
                                    std::to_string(++fresh_)).c_str(),
                                   sort_);
        vars_.insert_or_assign(v.text, c);
        bound.push_back(c);
        if (at(",")) {
          next();
          continue;
        }
        break;
      }
      expect("]");
      expect(":");
      z3::expr body = unitary();
      for (auto it = saved.rbegin(); it != saved.rend(); ++it) {
        if (it->second)
          vars_.insert_or_assign(it->first, *it->second);
        else
          vars_.erase(it->first);
      }
      return quantifier(universal, bound, body);
    }
    return atomic(false);
  }

  z3::expr atomic(bool cnf) {
    if (peek().kind == Tok::DollarWord) {
      std::string w = next().text;
      if (w == "$true") return ctx_.bool_val(true);
      if (w == "$false") return ctx_.bool_val(false);
      if (w == "$distinct") {
        z3::expr_vector args = arguments(cnf);
        if (args.size() < 2) return ctx_.bool_val(true);
        return z3::distinct(args);
      }
      fail("unsupported defined symbol " + w);
    }
    if (peek().kind == Tok::UpperWord) {
      z3::expr lhs = term(cnf);
      return infix(lhs, cnf);
    }
    std::string name = symbol();
    z3::expr_vector args(ctx_);
    if (at("(")) args = arguments(cnf);
    if (at("=") || at("!=")) {
      z3::expr lhs = apply(name, args, sort_);
      return infix(lhs, cnf);
    }
    return apply(name, args, ctx_.bool_sort());
  }

  z3::expr infix(const z3::expr& lhs, bool cnf) {
    if (!at("=") && !at("!=")) fail("expected = or !=");
    bool eq = next().text == "=";
    z3::expr rhs = term(cnf);
    return eq ? lhs == rhs : lhs != rhs;
  }

  std::string symbol() {
    Token t = next();
    if (t.kind == Tok::LowerWord || t.kind == Tok::Number) return t.text;
    if (t.kind == Tok::Quoted) {
      if (t.text.empty()) fail("empty quoted atom");
      return t.text;  // 'abc' and abc name the same symbol
    }
    fail("expected a symbol");
  }

  z3::expr_vector arguments(bool cnf) {
    expect("(");
    z3::expr_vector args(ctx_);
    for (;;) {
      args.push_back(term(cnf));
      if (at(",")) {
        next();
        continue;
      }
      break;
    }
    expect(")");
    return args;
  }

  z3::expr term(bool cnf) {
    if (peek().kind == Tok::UpperWord) {
      std::string v = next().text;
      auto it = vars_.find(v);
      if (it != vars_.end()) return it->second;
      if (!cnf) fail("unbound variable " + v);
      z3::expr c = ctx_.constant(("V!" + v).c_str(), sort_);
      vars_.insert_or_assign(v, c);
      return c;
    }
    std::string name = symbol();
    z3::expr_vector args(ctx_);
    if (at("(")) args = arguments(cnf);
    return apply(name, args, sort_);
  }

  // z3::forall would give the quantifier weight 0, which makes z3's
  // instantiation far less effective on these problems than the default
  // weight the SMT-LIB front end uses.
  z3::expr quantifier(bool universal, const z3::expr_vector& bound,
                      const z3::expr& body) {
    std::vector<Z3_app> vars;
    for (unsigned i = 0; i < bound.size(); ++i)
      vars.push_back(reinterpret_cast<Z3_app>(static_cast<Z3_ast>(bound[i])));
    Z3_ast q = Z3_mk_quantifier_const(ctx_, universal, 1,
                                      static_cast<unsigned>(vars.size()),
                                      vars.data(), 0, nullptr, body);
    ctx_.check_error();
    return z3::expr(ctx_, q);
  }

  z3::expr apply(const std::string& name, const z3::expr_vector& args,
                 const z3::sort& range) {
    std::string key = name + "/" + std::to_string(args.size()) + "/" +
                      (range.is_bool() ? "o" : "i");
    auto it = decls_.find(key);
    if (it == decls_.end()) {
      z3::sort_vector domain(ctx_);
      for (unsigned i = 0; i < args.size(); ++i) domain.push_back(sort_);
      // The key doubles as the z3 name, keeping overloaded names apart.
      it = decls_.emplace(key, ctx_.function(key.c_str(), domain, range))
               .first;
    }
    return it->second(args);
  }

  z3::context& ctx_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  z3::sort sort_;
  std::map<std::string, z3::expr> vars_;
  std::map<std::string, z3::func_decl> decls_;
  unsigned fresh_ = 0;
};

using Clock = std::chrono::steady_clock;

enum class Answer { Sat, Unsat, Unknown, Timeout };

Answer classify(z3::check_result r, const std::string& reason) {
  if (r == z3::sat) return Answer::Sat;
  if (r == z3::unsat) return Answer::Unsat;
  return reason.find("timeout") != std::string::npos ||
                 reason.find("canceled") != std::string::npos
             ? Answer::Timeout
             : Answer::Unknown;
}

Answer check(z3::solver& s, unsigned ms) {
  if (ms == 0) return Answer::Timeout;
  z3::params p(s.ctx());
  p.set("timeout", ms);
  s.set(p);
  auto r = s.check();
  return classify(r, r == z3::unknown ? s.reason_unknown() : "");
}

Answer preprocessed(z3::context& ctx, const z3::expr_vector& fs, unsigned ms) {
  z3::tactic t = z3::tactic(ctx, "simplify") & z3::tactic(ctx, "qe-light") &
                 z3::tactic(ctx, "simplify") & z3::tactic(ctx, "smt");
  z3::solver s = t.mk_solver();
  for (unsigned i = 0; i < fs.size(); ++i) s.add(fs[i]);
  return check(s, ms);
}

Answer plain(z3::context& ctx, const z3::expr_vector& fs, unsigned ms) {
  z3::solver s(ctx);
  for (unsigned i = 0; i < fs.size(); ++i) s.add(fs[i]);
  return check(s, ms);
}

// Expands quantifiers over a fixed list of domain elements. Results are
// memoized by AST id; z3 hash-conses terms, so shared instances are
// expanded once.
class Grounder {
 public:
  Grounder(z3::context& ctx, z3::expr_vector domain, std::size_t budget,
           Clock::time_point deadline)
      : ctx_(ctx), domain_(std::move(domain)), budget_(budget),
        deadline_(deadline) {}

  // Empty when the expansion would exceed the node budget.
  std::optional<z3::expr> run(const z3::expr& e) {
    try {
      return ground(e);
    } catch (const Exhausted&) {
      return std::nullopt;
    }
  }

 private:
  struct Exhausted {};

  z3::expr ground(const z3::expr& e) {
    unsigned id = e.id();
    if (auto it = memo_.find(id); it != memo_.end()) return it->second.second;
    z3::expr r = expand(e);
    memo_.emplace(id, std::make_pair(e, r));
    return r;
  }

  z3::expr expand(const z3::expr& e) {
    if (e.is_quantifier()) {
      unsigned k = Z3_get_quantifier_num_bound(ctx_, e);
      z3::expr body = e.body();
      std::vector<unsigned> idx(k, 0);
      z3::expr_vector parts(ctx_);
      const unsigned n = domain_.size();
      for (;;) {
        if (++spent_ > budget_) throw Exhausted{};
        if (spent_ % 4096 == 0 && Clock::now() >= deadline_) throw Exhausted{};
        // Var(0) is the innermost bound variable.
        z3::expr_vector dst(ctx_);
        for (unsigned j = 0; j < k; ++j) dst.push_back(domain_[idx[k - 1 - j]]);
        parts.push_back(ground(body.substitute(dst)));
        unsigned j = 0;
        while (j < k && ++idx[j] == n) idx[j++] = 0;
        if (j == k) break;
      }
      return e.is_forall() ? z3::mk_and(parts) : z3::mk_or(parts);
    }
    if (e.is_app() && e.is_bool() && e.num_args() > 0) {
      z3::expr_vector args(ctx_);
      bool changed = false;
      for (unsigned i = 0; i < e.num_args(); ++i) {
        z3::expr a = e.arg(i);
        if (!a.is_bool()) {
          args.push_back(a);
          continue;
        }
        z3::expr g = ground(a);
        changed = changed || !z3::eq(g, a);
        args.push_back(g);
      }
      return changed ? e.decl()(args) : e;
    }
    return e;
  }

  z3::context& ctx_;
  z3::expr_vector domain_;
  std::size_t budget_;
  Clock::time_point deadline_;
  std::size_t spent_ = 0;
  std::unordered_map<unsigned, std::pair<z3::expr, z3::expr>> memo_;
};

void collect_constants(const z3::expr& e, std::map<std::string, z3::expr>& out,
                       std::optional<z3::sort>& domain) {
  if (e.is_quantifier()) {
    if (!domain) domain = z3::sort(e.ctx(), Z3_get_quantifier_bound_sort(e.ctx(), e, 0));
    collect_constants(e.body(), out, domain);
    return;
  }
  if (!e.is_app()) return;
  if (e.is_const() && !e.is_bool() &&
      e.decl().decl_kind() == Z3_OP_UNINTERPRETED) {
    out.emplace(e.to_string(), e);
    if (!domain) domain = e.get_sort();
  }
  for (unsigned i = 0; i < e.num_args(); ++i)
    collect_constants(e.arg(i), out, domain);
}

// Smallest domain size worth trying: the number of constants the problem
// asserts to be pairwise distinct (a greedy clique for != facts).
unsigned domain_lower_bound(const z3::expr_vector& fs) {
  std::size_t best = 1;
  std::map<std::string, std::set<std::string>> neq;
  for (unsigned i = 0; i < fs.size(); ++i) {
    z3::expr f = fs[i];
    if (f.is_app() && f.decl().decl_kind() == Z3_OP_DISTINCT)
      best = std::max<std::size_t>(best, f.num_args());
    // `a != b` arrives as a two-argument distinct.
    std::optional<z3::expr> pair;
    if (f.is_app() && f.decl().decl_kind() == Z3_OP_DISTINCT && f.num_args() == 2)
      pair = f;
    else if (f.is_not() && f.arg(0).is_eq())
      pair = f.arg(0);
    if (pair) {
      std::string a = pair->arg(0).to_string(), b = pair->arg(1).to_string();
      neq[a].insert(b);
      neq[b].insert(a);
    }
  }
  std::vector<std::string> clique;
  for (const auto& [c, others] : neq) {
    bool ok = std::all_of(clique.begin(), clique.end(),
                          [&](const std::string& d) { return others.contains(d); });
    if (ok) clique.push_back(c);
  }
  return static_cast<unsigned>(std::max(best, clique.size()));
}

Answer finite_models(z3::context& ctx, const z3::expr_vector& fs,
                     Clock::time_point deadline) {
  std::map<std::string, z3::expr> constants;
  std::optional<z3::sort> sort;
  for (unsigned i = 0; i < fs.size(); ++i) collect_constants(fs[i], constants, sort);
  if (!sort) return Answer::Unknown;
  unsigned lo = domain_lower_bound(fs);
  unsigned hi = static_cast<unsigned>(constants.size()) + 8;
  for (unsigned n = std::max(lo, 1u); n <= hi; ++n) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                    deadline - Clock::now()).count();
    if (left <= 0) return Answer::Timeout;
    const auto round_start = Clock::now();
    z3::expr_vector domain(ctx);
    for (unsigned i = 0; i < n; ++i)
      domain.push_back(ctx.constant(("dom!" + std::to_string(i)).c_str(), *sort));
    z3::solver s(ctx);
    if (n > 1) s.add(z3::distinct(domain));
    for (const auto& [name, c] : constants) {
      z3::expr_vector options(ctx);
      for (unsigned i = 0; i < n; ++i) options.push_back(c == domain[i]);
      s.add(z3::mk_or(options));
    }
    Grounder g(ctx, domain, 4'000'000, deadline);
    bool complete = true;
    for (unsigned i = 0; i < fs.size() && complete; ++i) {
      auto gf = g.run(fs[i]);
      if (gf)
        s.add(*gf);
      else
        complete = false;
      if (Clock::now() >= deadline) return Answer::Timeout;
    }
    if (!complete) return Answer::Unknown;
    left = std::chrono::duration_cast<std::chrono::milliseconds>(
               deadline - Clock::now()).count();
    if (left <= 0) return Answer::Timeout;
    auto grounded = Clock::now();
    Answer a = check(s, static_cast<unsigned>(left));
    if (std::getenv("ZTPTP_TRACE")) {
      using std::chrono::duration_cast;
      using std::chrono::milliseconds;
      std::cerr << "ztptp: domain " << n << ": grounding "
                << duration_cast<milliseconds>(grounded - round_start).count()
                << " ms, solving "
                << duration_cast<milliseconds>(Clock::now() - grounded).count()
                << " ms\n";
    }
    if (a == Answer::Sat) return a;
    if (a == Answer::Timeout) return a;
  }
  return Answer::Unknown;
}

enum class Phase { Preprocessed, FiniteModels, Plain };

// Runs the enabled phases in order, each until its share of the time limit
// is used up. Only the z3 phases can answer unsatisfiable.
Answer solve(z3::context& ctx, const z3::expr_vector& fs, unsigned limit_s,
             const std::vector<Phase>& phases) {
  // Without a limit the last phase runs unbounded and the others share
  // three minutes.
  const unsigned total_ms = (limit_s ? limit_s : 180) * 1000u;
  const auto start = Clock::now();
  auto share = [](Phase p) { return p == Phase::FiniteModels ? 4u : 3u; };
  unsigned shares = 0;
  for (Phase p : phases) shares += share(p);
  const bool trace = std::getenv("ZTPTP_TRACE") != nullptr;
  bool timed_out = false;
  unsigned used = 0;
  for (std::size_t k = 0; k < phases.size(); ++k) {
    used += share(phases[k]);
    auto deadline = start + std::chrono::milliseconds(
                                static_cast<unsigned long long>(total_ms) * used / shares);
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                    deadline - Clock::now()).count();
    unsigned ms = left > 0 ? static_cast<unsigned>(left) : 0u;
    if (limit_s == 0 && k + 1 == phases.size()) ms = UINT32_MAX;
    Answer a = Answer::Timeout;
    const char* name = "";
    switch (phases[k]) {
      case Phase::Preprocessed:
        name = "preprocessed";
        a = preprocessed(ctx, fs, ms);
        break;
      case Phase::FiniteModels:
        name = "finite models";
        a = finite_models(ctx, fs, Clock::now() + std::chrono::milliseconds(ms));
        break;
      case Phase::Plain:
        name = "plain";
        a = plain(ctx, fs, ms);
        break;
    }
    if (trace) {
      static const char* names[] = {"sat", "unsat", "unknown", "timeout"};
      std::cerr << "ztptp: " << name << " " << names[static_cast<int>(a)]
                << " after "
                << std::chrono::duration_cast<std::chrono::milliseconds>(
                       Clock::now() - start).count()
                << " ms\n";
    }
    if (a == Answer::Sat || a == Answer::Unsat) return a;
    timed_out = timed_out || a == Answer::Timeout;
  }
  return timed_out ? Answer::Timeout : Answer::Unknown;
}

int usage() {
  std::cerr << "usage: ztptp [--auto] [--silent] [--smt2] "
               "[--only=preprocessed|finite|plain] [--soft-cpu-limit=<s>] "
               "<problem.p>\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  unsigned limit = 0;
  bool dump = false;
  std::vector<Phase> phases = {Phase::Preprocessed, Phase::FiniteModels,
                               Phase::Plain};
  std::string file;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--auto" || a == "--silent") continue;
    if (a == "--smt2") {
      dump = true;
      continue;
    }
    if (a.rfind("--only=", 0) == 0) {
      std::string p = a.substr(7);
      if (p == "preprocessed")
        phases = {Phase::Preprocessed};
      else if (p == "finite")
        phases = {Phase::FiniteModels};
      else if (p == "plain")
        phases = {Phase::Plain};
      else
        return usage();
      continue;
    }
    if (a.rfind("--soft-cpu-limit=", 0) == 0 ||
        a.rfind("--cpu-limit=", 0) == 0) {
      limit = static_cast<unsigned>(
          std::strtoul(a.substr(a.find('=') + 1).c_str(), nullptr, 10));
      continue;
    }
    if (a.rfind("--", 0) == 0) return usage();
    if (!file.empty()) return usage();
    file = a;
  }
  if (file.empty()) return usage();

  std::ifstream in(file, std::ios::binary);
  if (!in) {
    std::cout << "# SZS status OSError\n";
    std::cerr << "ztptp: cannot read " << file << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  z3::context ctx;
  z3::solver solver(ctx);
  bool conjecture = false;
  try {
    Parser parser(ctx, Lexer(buf.str()).run());
    parser.run(solver, conjecture);
  } catch (const ParseError& e) {
    std::cout << "# SZS status SyntaxError\n";
    std::cerr << "ztptp: " << e.what() << "\n";
    return 1;
  } catch (const z3::exception& e) {
    std::cout << "# SZS status InputError\n";
    std::cerr << "ztptp: " << e.msg() << "\n";
    return 1;
  }

  if (dump) {
    std::cout << solver.to_smt2();
    return 0;
  }
  z3::expr_vector formulas = solver.assertions();
  std::string status;
  switch (solve(ctx, formulas, limit, phases)) {
    case Answer::Sat:
      status = conjecture ? "CounterSatisfiable" : "Satisfiable";
      break;
    case Answer::Unsat:
      status = conjecture ? "Theorem" : "Unsatisfiable";
      break;
    case Answer::Timeout:
      status = "Timeout";
      break;
    case Answer::Unknown:
      status = "GaveUp";
      break;
  }
  std::cout << "# SZS status " << status << " for " << file << "\n";
  return 0;
}
