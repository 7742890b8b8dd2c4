#include <gtest/gtest.h>

#include <random>
#include <regex>

#include "shacl2fol/error.hpp"
#include "shacl2fol/scl.hpp"
#include "support.hpp"

using namespace shacl2fol;
using namespace shacl2fol::scl;
using rdf::RdfTerm;
using testsupport::ex;
using testsupport::exi;

namespace {

ShapeName sn(const char* local, std::string rel = "hasShape") {
  return {exi(local), std::move(rel)};
}

PathFormula random_path(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 4);
  std::uniform_int_distribution<int> pick(0, 2);
  auto sub = [&] { return random_path(rng, depth - 1); };
  switch (kind(rng)) {
    case 0:
      return PathFormula::make_role(ex("r" + std::to_string(pick(rng))),
                                    pick(rng) == 0);
    case 1: return PathFormula::seq(sub(), sub());
    case 2: return PathFormula::alt(sub(), sub());
    case 3: return PathFormula::star(sub());
    default: return PathFormula::zero_or_one(sub());
  }
}

RdfTerm random_constant(std::mt19937& rng) {
  switch (rng() % 4) {
    case 0: return exi("c" + std::to_string(rng() % 3));
    case 1: return RdfTerm::literal("v \"q\" " + std::to_string(rng() % 3));
    case 2: return RdfTerm::lang_literal("hi", "en");
    default: return RdfTerm::typed_literal("5", std::string(rdf::vocab::kXsdInteger));
  }
}

NodeFormula random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 3 : 10);
  auto sub = [&] { return random_formula(rng, depth - 1); };
  std::string role = ex("r" + std::to_string(rng() % 3));
  switch (kind(rng)) {
    case 0: return NodeFormula::top();
    case 1: return NodeFormula::eq_const(random_constant(rng));
    case 2: return NodeFormula::make_filter(static_cast<Filter>(rng() % 3));
    case 3: return NodeFormula::has_shape(sn(rng() % 2 ? "s1" : "s2"));
    case 4: return NodeFormula::negate(sub());
    case 5: return NodeFormula::conj(sub(), sub());
    case 6: return NodeFormula::exists(random_path(rng, 2), sub());
    case 7: return NodeFormula::at_least(1 + rng() % 3, random_path(rng, 2), sub());
    case 8: return NodeFormula::not_exists_both(random_path(rng, 2), role);
    case 9: return NodeFormula::forall_iff(random_path(rng, 2), role);
    default:
      return NodeFormula::pairwise_order(
          random_path(rng, 2), role,
          {rng() % 2 ? OrderOp::Lt : OrderOp::Leq, rng() % 2 == 0});
  }
}

SclSentence random_sentence(std::mt19937& rng, int depth) {
  switch (rng() % 7) {
    case 0: return SclSentence::target_node(random_constant(rng), sn("s1"));
    case 1: return SclSentence::target_class(exi("C"), sn("s2"));
    case 2: return SclSentence::target_subjects_of(ex("r0"), sn("s1"));
    case 3: return SclSentence::target_objects_of(ex("r1"), sn("s1", "hasShape_B"));
    case 4:
      if (depth > 0)
        return SclSentence::conj(random_sentence(rng, depth - 1),
                                 random_sentence(rng, depth - 1));
      return SclSentence::top();
    default: return SclSentence::shape_def(sn("s1"), random_formula(rng, 3));
  }
}

}  // namespace

TEST(Text, TargetSentences) {
  EXPECT_EQ(to_text(SclSentence::target_node(exi("c"), sn("s"))),
            "hasShape(<http://example.org/c>, <http://example.org/s>)");
  EXPECT_EQ(to_text(SclSentence::target_class(exi("C"), sn("s"))),
            "forall x0. isA(x0, <http://example.org/C>) -> "
            "hasShape(x0, <http://example.org/s>)");
  EXPECT_EQ(to_text(SclSentence::target_subjects_of(ex("R"), sn("s"))),
            "forall x0, x1. [<http://example.org/R>](x0, x1) -> "
            "hasShape(x0, <http://example.org/s>)");
  EXPECT_EQ(to_text(SclSentence::target_objects_of(ex("R"), sn("s"))),
            "forall x0, x1. [^<http://example.org/R>](x0, x1) -> "
            "hasShape(x0, <http://example.org/s>)");
}

TEST(Text, ShapeDefinitionWithCount) {
  auto f = NodeFormula::at_least(2, PathFormula::make_role(ex("R")),
                                 NodeFormula::top());
  EXPECT_EQ(to_text(SclSentence::shape_def(sn("s"), f)),
            "forall x0. hasShape(x0, <http://example.org/s>) <-> "
            "exists>=2 x1. [<http://example.org/R>](x0, x1) & T");
}

TEST(Text, NegationBindsTighterThanConjunction) {
  auto a = NodeFormula::make_filter(Filter::IsIri);
  auto b = NodeFormula::make_filter(Filter::IsBlank);
  EXPECT_EQ(to_text(NodeFormula::negate(NodeFormula::conj(a, b))),
            "~(isIRI(x0) & isBlank(x0))");
  EXPECT_EQ(to_text(NodeFormula::conj(NodeFormula::negate(a), b)),
            "~isIRI(x0) & isBlank(x0)");
  EXPECT_EQ(parse_node_formula("~isIRI(x0) & isBlank(x0)"),
            NodeFormula::conj(NodeFormula::negate(a), b));
}

TEST(Text, PrintParseRoundTripOnRandomFormulas) {
  std::mt19937 rng(17);
  for (int i = 0; i < 2000; ++i) {
    NodeFormula f = random_formula(rng, 4);
    std::string text = to_text(f);
    NodeFormula back;
    ASSERT_NO_THROW(back = parse_node_formula(text)) << text;
    EXPECT_EQ(back, f) << text;
    EXPECT_EQ(to_text(back), text);
  }
}

TEST(Text, PrintParseRoundTripOnRandomSentences) {
  std::mt19937 rng(19);
  for (int i = 0; i < 1000; ++i) {
    SclSentence s = random_sentence(rng, 2);
    std::string text = to_text(s);
    SclSentence back;
    ASSERT_NO_THROW(back = parse_sentence(text)) << text;
    EXPECT_EQ(back, s) << text;
  }
}

TEST(Text, ParseErrorsReportTheColumn) {
  try {
    parse_node_formula("isIRI(x0) & & T");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 13u);
  }
  EXPECT_THROW(parse_node_formula("isIRI(x1)"), SyntaxError);
  EXPECT_THROW(parse_sentence("forall x0. bogus"), SyntaxError);
}

TEST(FreeShapeRefs, MatchesATextualScan) {
  std::mt19937 rng(23);
  std::regex ref(R"((hasShape\w*)\(x\d+, <([^>]*)>\))");
  for (int i = 0; i < 1000; ++i) {
    NodeFormula f = random_formula(rng, 4);
    std::string text = to_text(f);
    std::set<ShapeName> want;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), ref);
         it != std::sregex_iterator(); ++it)
      want.insert({RdfTerm::iri((*it)[2]), (*it)[1]});
    EXPECT_EQ(free_shape_refs(f), want) << text;
  }
}

TEST(ValidateTheory, AcceptsWellFormedTheories) {
  std::vector<SclSentence> ok = {
      SclSentence::shape_def(sn("a"), NodeFormula::has_shape(sn("b"))),
      SclSentence::shape_def(sn("b"), NodeFormula::top()),
      SclSentence::target_node(exi("n"), sn("a"))};
  EXPECT_TRUE(validate_theory(ok).empty());
  EXPECT_TRUE(validate_theory({}).empty());
}

TEST(ValidateTheory, ReportsEachDefectKind) {
  std::vector<SclSentence> bad = {
      SclSentence::shape_def(sn("a"), NodeFormula::top()),
      SclSentence::shape_def(sn("a"), NodeFormula::top()),
      SclSentence::target_node(exi("n"), sn("missing")),
      SclSentence::shape_def(sn("c", "isIRI"), NodeFormula::top()),
      SclSentence::shape_def(
          sn("d"), NodeFormula::at_least(0, PathFormula::make_role(ex("r")),
                                         NodeFormula::top()))};
  std::multiset<ErrorKind> kinds;
  for (const auto& e : validate_theory(bad)) kinds.insert(e.kind);
  EXPECT_EQ(kinds, (std::multiset<ErrorKind>{
                       ErrorKind::DuplicateDefinition, ErrorKind::UndefinedShape,
                       ErrorKind::NamespaceClash,
                       ErrorKind::InvalidCardinality}));
}

TEST(ValidateTheory, UndefinedShapesOnGeneratedReferenceGraphs) {
  // Shapes s0..s5 are defined with probability 1/2 and referenced at
  // random; the undefined set must equal referenced minus defined.
  std::mt19937 rng(29);
  for (int round = 0; round < 300; ++round) {
    std::set<ShapeName> defined;
    std::set<ShapeName> referenced;
    std::vector<SclSentence> theory;
    for (int i = 0; i < 6; ++i) {
      if (rng() % 2) continue;
      ShapeName me = sn(("s" + std::to_string(i)).c_str());
      NodeFormula body = NodeFormula::top();
      for (int j = 0; j < 6; ++j) {
        if (rng() % 3) continue;
        ShapeName other = sn(("s" + std::to_string(j)).c_str());
        referenced.insert(other);
        body = NodeFormula::conj(NodeFormula::has_shape(other), body);
      }
      defined.insert(me);
      theory.push_back(SclSentence::shape_def(me, body));
    }
    if (rng() % 2) {
      ShapeName t = sn(("s" + std::to_string(rng() % 6)).c_str());
      referenced.insert(t);
      theory.push_back(SclSentence::target_node(exi("n"), t));
    }
    std::set<ShapeName> want;
    for (const auto& r : referenced)
      if (!defined.contains(r)) want.insert(r);
    std::set<ShapeName> got;
    for (const auto& e : validate_theory(theory)) {
      EXPECT_EQ(e.kind, ErrorKind::UndefinedShape);
      got.insert(e.shape);
    }
    EXPECT_EQ(got, want);
  }
}

TEST(ShapeRelation, ReservedNamesAreRejected) {
  EXPECT_TRUE(is_valid_shape_relation("hasShape"));
  EXPECT_TRUE(is_valid_shape_relation("hasShape_B"));
  for (const char* name : {"isIRI", "isLiteral", "isBlank", "isA", "lt", "leq",
                           "star_1", "", "has shape", "1x"})
    EXPECT_FALSE(is_valid_shape_relation(name)) << name;
}

TEST(Flatten, DropsTopAndNestedConjunctions) {
  auto a = SclSentence::target_node(exi("a"), sn("s"));
  auto b = SclSentence::target_node(exi("b"), sn("s"));
  std::vector<SclSentence> in = {
      SclSentence::conj(a, SclSentence::conj(SclSentence::top(), b))};
  EXPECT_EQ(flatten(in), (std::vector<SclSentence>{a, b}));
}

TEST(Collect, ConstantsIncludeShapeNamesAndRoles) {
  auto s = SclSentence::shape_def(
      sn("s"), NodeFormula::exists(PathFormula::make_role(ex("r"), true),
                                   NodeFormula::eq_const(exi("k"))));
  std::set<RdfTerm> consts;
  collect_constants(s, consts);
  EXPECT_EQ(consts, (std::set<RdfTerm>{exi("s"), exi("k")}));
  std::set<std::string> roles;
  collect_roles(s, roles);
  EXPECT_EQ(roles, (std::set<std::string>{ex("r")}));
}
