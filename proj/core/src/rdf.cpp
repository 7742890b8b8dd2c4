#include "shacl2fol/rdf.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "shacl2fol/error.hpp"

namespace shacl2fol::rdf {

RdfTerm RdfTerm::iri(std::string value) {
  RdfTerm t;
  t.kind_ = TermKind::Iri;
  t.lexical_ = std::move(value);
  return t;
}

RdfTerm RdfTerm::blank(std::string label) {
  RdfTerm t;
  t.kind_ = TermKind::BlankNode;
  t.lexical_ = std::move(label);
  return t;
}

RdfTerm RdfTerm::literal(std::string lexical) {
  RdfTerm t;
  t.kind_ = TermKind::Literal;
  t.lexical_ = std::move(lexical);
  return t;
}

RdfTerm RdfTerm::typed_literal(std::string lexical, std::string datatype) {
  RdfTerm t = literal(std::move(lexical));
  if (datatype != vocab::kXsdString) t.datatype_ = std::move(datatype);
  return t;
}

RdfTerm RdfTerm::lang_literal(std::string lexical, std::string lang) {
  RdfTerm t = literal(std::move(lexical));
  std::transform(lang.begin(), lang.end(), lang.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  t.lang_ = std::move(lang);
  return t;
}

namespace {

std::string escape_literal(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string RdfTerm::to_ntriples() const {
  switch (kind_) {
    case TermKind::Iri:
      return "<" + lexical_ + ">";
    case TermKind::BlankNode:
      return "_:" + lexical_;
    case TermKind::Literal: {
      std::string out = "\"" + escape_literal(lexical_) + "\"";
      if (lang_) out += "@" + *lang_;
      if (datatype_) out += "^^<" + *datatype_ + ">";
      return out;
    }
  }
  return {};
}

Triple::Triple(RdfTerm s, RdfTerm p, RdfTerm o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (!predicate.is_iri())
    throw std::invalid_argument("triple predicate must be an IRI");
  if (subject.is_literal())
    throw std::invalid_argument("triple subject must not be a literal");
}

Graph::Graph(std::initializer_list<Triple> triples) : triples_(triples) {}

bool Graph::insert(Triple t) { return triples_.insert(std::move(t)).second; }

std::set<std::string> Graph::predicate_names() const {
  std::set<std::string> out;
  for (const auto& t : triples_) out.insert(t.predicate.lexical());
  return out;
}

std::set<RdfTerm> Graph::constants() const {
  std::set<RdfTerm> out;
  for (const auto& t : triples_) {
    out.insert(t.subject);
    out.insert(t.object);
  }
  return out;
}

std::vector<RdfTerm> Graph::objects(const RdfTerm& s,
                                    std::string_view p) const {
  std::vector<RdfTerm> out;
  if (s.is_literal()) return out;
  Triple probe(s, RdfTerm::iri(std::string(p)), RdfTerm());
  for (auto it = triples_.lower_bound(probe);
       it != triples_.end() && it->subject == s &&
       it->predicate.lexical() == p;
       ++it) {
    out.push_back(it->object);
  }
  return out;
}

std::vector<RdfTerm> Graph::subjects(std::string_view p,
                                     const RdfTerm& o) const {
  std::vector<RdfTerm> out;
  for (const auto& t : triples_) {
    if (t.predicate.lexical() == p && t.object == o) out.push_back(t.subject);
  }
  return out;
}

std::optional<RdfTerm> Graph::object(const RdfTerm& s,
                                     std::string_view p) const {
  auto objs = objects(s, p);
  if (objs.empty()) return std::nullopt;
  return objs.front();
}

std::optional<std::vector<RdfTerm>> read_list(const Graph& g,
                                              const RdfTerm& head) {
  std::vector<RdfTerm> items;
  std::set<RdfTerm> seen;
  RdfTerm cur = head;
  while (!(cur.is_iri() && cur.lexical() == vocab::kRdfNil)) {
    if (cur.is_literal() || !seen.insert(cur).second) return std::nullopt;
    auto firsts = g.objects(cur, vocab::kRdfFirst);
    auto rests = g.objects(cur, vocab::kRdfRest);
    if (firsts.size() != 1 || rests.size() != 1) return std::nullopt;
    items.push_back(firsts.front());
    cur = rests.front();
  }
  return items;
}

namespace {

bool has_scheme(std::string_view iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0])))
    return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' &&
        c != '-' && c != '.')
      return false;
  }
  return false;
}

std::string remove_dot_segments(std::string_view in) {
  std::string out;
  while (!in.empty()) {
    if (in.starts_with("../")) {
      in.remove_prefix(3);
    } else if (in.starts_with("./")) {
      in.remove_prefix(2);
    } else if (in.starts_with("/./")) {
      in.remove_prefix(2);
    } else if (in == "/.") {
      in = "/";
    } else if (in.starts_with("/../") || in == "/..") {
      in = in.size() == 3 ? std::string_view("/") : in.substr(3);
      auto cut = out.rfind('/');
      out.erase(cut == std::string::npos ? 0 : cut);
    } else if (in == "." || in == "..") {
      in = {};
    } else {
      auto next = in.find('/', 1);
      out += in.substr(0, next);
      in = next == std::string_view::npos ? std::string_view{} : in.substr(next);
    }
  }
  return out;
}

// Reference resolution against an absolute base IRI.
std::string resolve(const std::optional<std::string>& base,
                    std::string_view ref) {
  if (!base || has_scheme(ref)) return std::string(ref);
  std::string_view b = *base;
  b = b.substr(0, b.find('#'));
  auto colon = b.find(':');
  std::string_view scheme = b.substr(0, colon + 1);
  std::string_view rest = b.substr(colon + 1);
  std::string_view authority;
  if (rest.starts_with("//")) {
    auto end = rest.find_first_of("/?", 2);
    authority = rest.substr(0, end);
    rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
  }
  auto q = rest.find('?');
  std::string_view path = rest.substr(0, q);
  std::string_view query =
      q == std::string_view::npos ? std::string_view{} : rest.substr(q);

  std::string head(scheme);
  if (ref.starts_with("//")) {
    auto end = ref.find_first_of("/?#", 2);
    head += ref.substr(0, end);
    if (end == std::string_view::npos) return head;
    ref = ref.substr(end);
    if (ref[0] != '/') return head + std::string(ref);
    std::string_view tail = ref.substr(0, ref.find_first_of("?#"));
    return head + remove_dot_segments(tail) +
           std::string(ref.substr(tail.size()));
  }
  head += authority;
  if (ref.empty()) return head + std::string(path) + std::string(query);
  if (ref[0] == '#')
    return head + std::string(path) + std::string(query) + std::string(ref);
  if (ref[0] == '?') return head + std::string(path) + std::string(ref);

  auto suffix_at = ref.find_first_of("?#");
  std::string_view ref_path = ref.substr(0, suffix_at);
  std::string suffix(suffix_at == std::string_view::npos ? std::string_view{}
                                                         : ref.substr(suffix_at));
  std::string merged;
  if (ref_path.starts_with("/")) {
    merged = ref_path;
  } else if (!authority.empty() && path.empty()) {
    merged = "/" + std::string(ref_path);
  } else {
    auto slash = path.rfind('/');
    merged = (slash == std::string_view::npos ? std::string{}
                                              : std::string(path.substr(0, slash + 1))) +
             std::string(ref_path);
  }
  return head + remove_dot_segments(merged) + suffix;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         (static_cast<unsigned char>(c) >= 0x80);
}

bool is_name_char(char c) {
  return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) ||
         c == '-' || c == '.';
}

// Recursive-descent reader shared by both syntaxes; N-Triples mode only
// accepts the flat subset.
class Reader {
 public:
  Reader(std::string_view text, Syntax syntax, std::optional<std::string> base)
      : text_(text), syntax_(syntax), base_(std::move(base)) {}

  Graph run() {
    skip_ws();
    while (!at_end()) {
      if (syntax_ == Syntax::Turtle && try_directive()) {
        skip_ws();
        continue;
      }
      statement();
      skip_ws();
    }
    return std::move(graph_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, line_, col_);
  }
  [[noreturn]] void unsupported(const std::string& msg) const {
    throw UnsupportedFeature(msg, line_, col_);
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  bool starts_with_keyword(std::string_view kw, bool case_insensitive) const {
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char a = text_[pos_ + i];
      char b = kw[i];
      if (case_insensitive) {
        a = static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
        b = static_cast<char>(std::tolower(static_cast<unsigned char>(b)));
      }
      if (a != b) return false;
    }
    char next = peek(kw.size());
    return !is_name_char(next) && next != ':';
  }

  void consume(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) get();
  }

  bool try_directive() {
    if (peek() == '@') {
      if (starts_with_keyword_at(1, "prefix")) {
        consume(7);
        prefix_decl();
        expect('.');
        return true;
      }
      if (starts_with_keyword_at(1, "base")) {
        consume(5);
        skip_ws();
        base_ = resolve(base_, iriref());
        expect('.');
        return true;
      }
      fail("unknown directive");
    }
    if (starts_with_keyword("PREFIX", true)) {
      consume(6);
      prefix_decl();
      return true;
    }
    if (starts_with_keyword("BASE", true)) {
      consume(4);
      skip_ws();
      base_ = resolve(base_, iriref());
      return true;
    }
    if (starts_with_keyword("GRAPH", true)) unsupported("named graphs");
    return false;
  }

  bool starts_with_keyword_at(std::size_t offset, std::string_view kw) const {
    if (text_.size() - pos_ < offset + kw.size()) return false;
    if (text_.substr(pos_ + offset, kw.size()) != kw) return false;
    return !is_name_char(peek(offset + kw.size()));
  }

  void prefix_decl() {
    skip_ws();
    std::string name;
    while (!at_end() && peek() != ':') {
      if (!is_name_char(peek())) fail("malformed prefix name");
      name += get();
    }
    if (at_end()) fail("expected ':' in prefix declaration");
    get();
    skip_ws();
    prefixes_[name] = resolve(base_, iriref());
  }

  void statement() {
    skip_ws();
    if (peek() == '{') unsupported("named graphs");
    if (syntax_ == Syntax::NTriples) {
      RdfTerm s = peek() == '_' ? blank_label() : RdfTerm::iri(iriref());
      skip_ws();
      if (peek() != '<') fail("expected predicate IRI");
      RdfTerm p = RdfTerm::iri(iriref());
      skip_ws();
      RdfTerm o = nt_object();
      add(s, p, o);
      expect('.');
      return;
    }
    if (peek() == '[') {
      RdfTerm s = blank_property_list();
      skip_ws();
      if (peek() != '.') predicate_object_list(s);
    } else {
      RdfTerm s = subject();
      predicate_object_list(s);
    }
    expect('.');
  }

  RdfTerm nt_object() {
    char c = peek();
    if (c == '<') {
      if (peek(1) == '<') unsupported("quoted triples");
      return RdfTerm::iri(iriref());
    }
    if (c == '_') return blank_label();
    if (c == '"') return rdf_literal();
    fail("expected object term");
  }

  RdfTerm subject() {
    skip_ws();
    char c = peek();
    if (c == '<' && peek(1) == '<') unsupported("quoted triples");
    if (c == '<') return RdfTerm::iri(resolve(base_, iriref()));
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') return collection();
    if (c == '"' || c == '\'' || c == '+' || c == '-' ||
        std::isdigit(static_cast<unsigned char>(c)))
      fail("literal in subject position");
    return prefixed_name();
  }

  void predicate_object_list(const RdfTerm& s) {
    for (;;) {
      skip_ws();
      RdfTerm p = verb();
      object_list(s, p);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        get();
        skip_ws();
      }
      char c = peek();
      if (c == '.' || c == ']' || at_end()) return;
    }
  }

  RdfTerm verb() {
    skip_ws();
    if (peek() == 'a' && !is_name_char(peek(1)) && peek(1) != ':') {
      get();
      return RdfTerm::iri(std::string(vocab::kRdfType));
    }
    if (peek() == '<') return RdfTerm::iri(resolve(base_, iriref()));
    if (peek() == '_' || peek() == '[') fail("blank node as predicate");
    return prefixed_name();
  }

  void object_list(const RdfTerm& s, const RdfTerm& p) {
    for (;;) {
      RdfTerm o = object();
      add(s, p, o);
      skip_ws();
      if (peek() != ',') return;
      get();
    }
  }

  RdfTerm object() {
    skip_ws();
    char c = peek();
    if (c == '<' && peek(1) == '<') unsupported("quoted triples");
    if (c == '<') return RdfTerm::iri(resolve(base_, iriref()));
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return blank_property_list();
    if (c == '(') return collection();
    if (c == '"' || c == '\'') return rdf_literal();
    if (c == '+' || c == '-' || c == '.' ||
        std::isdigit(static_cast<unsigned char>(c)))
      return numeric_literal();
    if (starts_with_keyword("true", false)) {
      consume(4);
      return RdfTerm::typed_literal("true", std::string(vocab::kXsdBoolean));
    }
    if (starts_with_keyword("false", false)) {
      consume(5);
      return RdfTerm::typed_literal("false", std::string(vocab::kXsdBoolean));
    }
    return prefixed_name();
  }

  RdfTerm blank_property_list() {
    expect('[');
    RdfTerm node = fresh_blank();
    skip_ws();
    if (peek() != ']') predicate_object_list(node);
    expect(']');
    return node;
  }

  RdfTerm collection() {
    expect('(');
    std::vector<RdfTerm> items;
    for (;;) {
      skip_ws();
      if (at_end()) fail("unterminated collection");
      if (peek() == ')') {
        get();
        break;
      }
      items.push_back(object());
    }
    RdfTerm nil = RdfTerm::iri(std::string(vocab::kRdfNil));
    if (items.empty()) return nil;
    std::vector<RdfTerm> cells;
    for (std::size_t i = 0; i < items.size(); ++i) cells.push_back(fresh_blank());
    RdfTerm first = RdfTerm::iri(std::string(vocab::kRdfFirst));
    RdfTerm rest = RdfTerm::iri(std::string(vocab::kRdfRest));
    for (std::size_t i = 0; i < items.size(); ++i) {
      add(cells[i], first, items[i]);
      add(cells[i], rest, i + 1 < items.size() ? cells[i + 1] : nil);
    }
    return cells.front();
  }

  std::string iriref() {
    if (peek() != '<') fail("expected IRI");
    get();
    std::string out;
    for (;;) {
      if (at_end()) fail("unterminated IRI");
      char c = get();
      if (c == '>') break;
      if (c == '\\') {
        char e = at_end() ? '\0' : get();
        if (e == 'u') {
          append_utf8(out, hex(4));
        } else if (e == 'U') {
          append_utf8(out, hex(8));
        } else {
          fail("invalid escape in IRI");
        }
        continue;
      }
      if (c == ' ' || c == '\n' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`')
        fail("invalid character in IRI");
      out += c;
    }
    return out;
  }

  unsigned long hex(int digits) {
    std::string h;
    for (int i = 0; i < digits; ++i) {
      if (at_end() || !std::isxdigit(static_cast<unsigned char>(peek())))
        fail("invalid unicode escape");
      h += get();
    }
    return std::stoul(h, nullptr, 16);
  }

  RdfTerm blank_label() {
    if (peek() != '_' || peek(1) != ':') fail("expected blank node label");
    get();
    get();
    std::string label;
    while (!at_end() && is_name_char(peek())) label += get();
    while (!label.empty() && label.back() == '.') {
      label.pop_back();
      --pos_;
      --col_;
    }
    if (label.empty()) fail("empty blank node label");
    auto it = blank_labels_.find(label);
    if (it != blank_labels_.end()) return it->second;
    RdfTerm t = fresh_blank();
    blank_labels_.emplace(label, t);
    return t;
  }

  RdfTerm fresh_blank() {
    return RdfTerm::blank("b" + std::to_string(blank_counter_++));
  }

  RdfTerm prefixed_name() {
    skip_ws();
    std::string prefix;
    while (!at_end() && peek() != ':' && is_name_char(peek())) prefix += get();
    if (peek() != ':') fail("expected prefixed name");
    get();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + "'");
    std::string local;
    while (!at_end()) {
      char c = peek();
      if (is_name_char(c) || c == ':') {
        local += get();
      } else if (c == '%') {
        local += get();
        for (int i = 0; i < 2; ++i) {
          if (!std::isxdigit(static_cast<unsigned char>(peek())))
            fail("invalid percent escape");
          local += get();
        }
      } else if (c == '\\') {
        get();
        if (at_end()) fail("dangling escape");
        local += get();
      } else {
        break;
      }
    }
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
      --col_;
    }
    return RdfTerm::iri(it->second + local);
  }

  std::string string_body() {
    char quote = get();
    bool long_form = peek() == quote && peek(1) == quote;
    if (long_form) {
      get();
      get();
    }
    std::string out;
    for (;;) {
      if (at_end()) fail("unterminated string literal");
      char c = peek();
      if (long_form) {
        if (c == quote && peek(1) == quote && peek(2) == quote) {
          consume(3);
          // A long string may end with extra quote characters.
          while (peek() == quote) out += get();
          return out;
        }
      } else if (c == quote) {
        get();
        return out;
      } else if (c == '\n' || c == '\r') {
        fail("newline in string literal");
      }
      get();
      if (c != '\\') {
        out += c;
        continue;
      }
      if (at_end()) fail("dangling escape");
      char e = get();
      switch (e) {
        case 't': out += '\t'; break;
        case 'b': out += '\b'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        case '\\': out += '\\'; break;
        case 'u': append_utf8(out, hex(4)); break;
        case 'U': append_utf8(out, hex(8)); break;
        default: fail(std::string("invalid escape \\") + e);
      }
    }
  }

  RdfTerm rdf_literal() {
    if (syntax_ == Syntax::NTriples && peek() != '"')
      fail("N-Triples literals use double quotes");
    std::string lexical = string_body();
    if (peek() == '@') {
      get();
      std::string lang;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '-'))
        lang += get();
      if (lang.empty()) fail("empty language tag");
      return RdfTerm::lang_literal(std::move(lexical), std::move(lang));
    }
    if (peek() == '^' && peek(1) == '^') {
      get();
      get();
      std::string dt;
      if (peek() == '<') {
        dt = syntax_ == Syntax::Turtle ? resolve(base_, iriref()) : iriref();
      } else if (syntax_ == Syntax::Turtle) {
        dt = prefixed_name().lexical();
      } else {
        fail("expected datatype IRI");
      }
      return RdfTerm::typed_literal(std::move(lexical), std::move(dt));
    }
    return RdfTerm::literal(std::move(lexical));
  }

  RdfTerm numeric_literal() {
    std::string lex;
    if (peek() == '+' || peek() == '-') lex += get();
    bool digits = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      lex += get();
      digits = true;
    }
    bool decimal = false;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      decimal = true;
      lex += get();
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        lex += get();
        digits = true;
      }
    }
    if (!digits) fail("malformed number");
    if (peek() == 'e' || peek() == 'E') {
      lex += get();
      if (peek() == '+' || peek() == '-') lex += get();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("malformed exponent");
      while (std::isdigit(static_cast<unsigned char>(peek()))) lex += get();
      return RdfTerm::typed_literal(lex, std::string(vocab::kXsdDouble));
    }
    return RdfTerm::typed_literal(
        lex, std::string(decimal ? vocab::kXsdDecimal : vocab::kXsdInteger));
  }

  void add(const RdfTerm& s, const RdfTerm& p, const RdfTerm& o) {
    if (s.is_literal()) fail("literal in subject position");
    graph_.insert(Triple(s, p, o));
  }

  std::string_view text_;
  Syntax syntax_;
  std::optional<std::string> base_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::map<std::string, std::string> prefixes_;
  std::map<std::string, RdfTerm> blank_labels_;
  std::size_t blank_counter_ = 0;
  Graph graph_;
};

}  // namespace

Graph parse_document(std::string_view text, Syntax syntax,
                     std::optional<std::string> base_iri) {
  return Reader(text, syntax, std::move(base_iri)).run();
}

Graph parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Syntax syntax = path.size() >= 3 && path.ends_with(".nt") ? Syntax::NTriples
                                                            : Syntax::Turtle;
  try {
    return parse_document(buf.str(), syntax);
  } catch (const UnsupportedFeature& e) {
    throw UnsupportedFeature(e.message(), e.line(), e.column(), path);
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.message(), e.line(), e.column(), path);
  }
}

std::string serialize_ntriples(const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.size());
  for (const auto& t : g) {
    lines.push_back(t.subject.to_ntriples() + " " + t.predicate.to_ntriples() +
                    " " + t.object.to_ntriples() + " .\n");
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l;
  return out;
}

}  // namespace shacl2fol::rdf
