#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "shacl2fol/error.hpp"
#include "shacl2fol/shacl.hpp"
#include "support.hpp"

using namespace shacl2fol;
using namespace shacl2fol::shacl;
using rdf::RdfTerm;
using testsupport::ex;
using testsupport::exi;
using testsupport::shapes;

namespace {

const std::string kType{rdf::vocab::kRdfType};

}  // namespace

TEST(Extract, EmptyGraphHasNoShapes) {
  EXPECT_TRUE(shapes("").empty());
  EXPECT_TRUE(shapes("ex:a ex:b ex:c .").empty());
}

TEST(Extract, AllFourTargetKinds) {
  auto sg = shapes(R"(
    ex:S a sh:NodeShape ;
      sh:targetNode ex:n ;
      sh:targetClass ex:C ;
      sh:targetSubjectsOf ex:p ;
      sh:targetObjectsOf ex:q .)");
  ASSERT_EQ(sg.size(), 1u);
  const Shape& s = sg.shapes()[0];
  std::set<std::pair<TargetKind, RdfTerm>> got;
  for (const auto& t : s.targets) got.insert({t.kind, t.argument});
  std::set<std::pair<TargetKind, RdfTerm>> want = {
      {TargetKind::Node, exi("n")},
      {TargetKind::Class, exi("C")},
      {TargetKind::SubjectsOf, exi("p")},
      {TargetKind::ObjectsOf, exi("q")}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(s.constraint, Constraint::truth());
}

TEST(Extract, ImplicitClassTarget) {
  auto sg = shapes("ex:C a sh:NodeShape , rdfs:Class .");
  ASSERT_EQ(sg.size(), 1u);
  ASSERT_EQ(sg.shapes()[0].targets.size(), 1u);
  EXPECT_EQ(sg.shapes()[0].targets[0].kind, TargetKind::Class);
  EXPECT_EQ(sg.shapes()[0].targets[0].argument, exi("C"));
}

TEST(Extract, PropertyShapeCounts) {
  auto sg = shapes(R"(
    ex:S a sh:NodeShape ; sh:property ex:P .
    ex:P sh:path ex:r ; sh:minCount 2 ; sh:maxCount 3 .)");
  const Shape* s = sg.find(exi("S"));
  const Shape* p = sg.find(exi("P"));
  ASSERT_TRUE(s && p);
  EXPECT_EQ(s->constraint, Constraint::has_shape(exi("P")));
  auto path = PropertyPath::predicate(ex("r"));
  std::vector<Constraint> want = {
      Constraint::min_count(2, path, Constraint::truth()),
      Constraint::max_count(3, path, Constraint::truth())};
  // Parameter order follows the sorted triple order of the graph.
  std::vector<Constraint> got;
  std::function<void(const Constraint&)> split = [&](const Constraint& c) {
    if (c.kind == ConstraintKind::And) {
      for (const auto& ch : c.children) split(ch);
    } else {
      got.push_back(c);
    }
  };
  split(p->constraint);
  std::sort(got.begin(), got.end(), [](const Constraint& a, const Constraint& b) {
    return a.kind < b.kind;
  });
  EXPECT_EQ(got, want);
}

TEST(Extract, ValueConstraintsOnPropertyShapesQuantifyOverValues) {
  auto sg = shapes(R"(
    ex:P a sh:PropertyShape ; sh:path ex:r ; sh:class ex:C .)");
  auto path = PropertyPath::predicate(ex("r"));
  auto is_c = Constraint::some_through(PropertyPath::predicate(kType),
                                       Constraint::eq_const(exi("C")));
  EXPECT_EQ(sg.find(exi("P"))->constraint,
            Constraint::all_through(path, is_c));
}

TEST(Extract, HasValueAndNodeKindOnNodeShapes) {
  auto sg = shapes(R"(
    ex:S a sh:NodeShape ; sh:hasValue ex:v .
    ex:T a sh:NodeShape ; sh:nodeKind sh:IRIOrLiteral .)");
  EXPECT_EQ(sg.find(exi("S"))->constraint, Constraint::eq_const(exi("v")));
  EXPECT_EQ(sg.find(exi("T"))->constraint,
            Constraint::disj({Constraint::node_kind_is(NodeKind::Iri),
                              Constraint::node_kind_is(NodeKind::Literal)}));
}

TEST(Extract, LogicalComponents) {
  auto sg = shapes(R"(
    ex:S a sh:NodeShape ; sh:or ( ex:A ex:B ) .
    ex:A a sh:NodeShape . ex:B a sh:NodeShape .
    ex:N a sh:NodeShape ; sh:not ex:A .)");
  EXPECT_EQ(sg.find(exi("S"))->constraint,
            Constraint::disj({Constraint::has_shape(exi("A")),
                              Constraint::has_shape(exi("B"))}));
  EXPECT_EQ(sg.find(exi("N"))->constraint,
            Constraint::negate(Constraint::has_shape(exi("A"))));
}

TEST(Extract, ClosedAllowsDeclaredAndIgnoredProperties) {
  auto sg = shapes(R"(
    ex:S a sh:NodeShape ; sh:closed true ;
      sh:ignoredProperties ( rdf:type ) ;
      sh:property [ sh:path ex:r ] .)");
  const auto& c = sg.find(exi("S"))->constraint;
  std::function<const Constraint*(const Constraint&)> find_closed =
      [&](const Constraint& x) -> const Constraint* {
    if (x.kind == ConstraintKind::Closed) return &x;
    for (const auto& ch : x.children)
      if (auto r = find_closed(ch)) return r;
    return nullptr;
  };
  const Constraint* closed = find_closed(c);
  ASSERT_TRUE(closed);
  EXPECT_EQ(closed->allowed, (std::set<std::string>{kType, ex("r")}));
}

TEST(Extract, DeactivatedShapesAreDropped) {
  auto sg = shapes(R"(
    ex:S a sh:NodeShape ; sh:targetNode ex:a ; sh:deactivated true .)");
  EXPECT_TRUE(sg.empty());
}

TEST(Extract, UnsupportedComponentsAreNamed) {
  for (const char* param : {"datatype xsd:string", "pattern \"a\"",
                            "minLength 1", "languageIn ( \"en\" )",
                            "minInclusive 1", "xone ( ex:A )"}) {
    try {
      shapes(std::string("ex:S a sh:NodeShape ; sh:") + param + " .");
      ADD_FAILURE() << param;
    } catch (const UnsupportedComponent& e) {
      std::string want = "sh:" + std::string(param).substr(
                                     0, std::string(param).find(' '));
      EXPECT_EQ(e.component(), want);
    }
  }
}

TEST(Extract, CountsNeedAPath) {
  EXPECT_THROW(shapes("ex:S a sh:NodeShape ; sh:minCount 1 ."),
               UnsupportedComponent);
}

TEST(Extract, MalformedValues) {
  EXPECT_THROW(shapes("ex:S a sh:NodeShape ; sh:node \"x\" ."), MalformedShape);
  EXPECT_THROW(shapes("ex:S a sh:NodeShape ; sh:closed 3 ."), MalformedShape);
  EXPECT_THROW(shapes("ex:S sh:path ex:p , ex:q ."), MalformedShape);
}

TEST(ShapeGraph, RejectsDuplicatesAndDanglingReferences) {
  Shape a{exi("A"), {}, Constraint::truth()};
  EXPECT_THROW(ShapeGraph({a, a}), MalformedShape);
  Shape b{exi("B"), {}, Constraint::has_shape(exi("Missing"))};
  EXPECT_THROW(ShapeGraph({b}), MalformedShape);
  Shape lit{RdfTerm::literal("x"), {}, Constraint::truth()};
  EXPECT_THROW(ShapeGraph({lit}), MalformedShape);
}

TEST(Paths, AllConstructorsAreRead) {
  auto sg = shapes(R"(
    ex:S sh:minCount 1 ; sh:path ( ex:a [ sh:inversePath ex:b ] ) .
    ex:T sh:minCount 1 ; sh:path [ sh:alternativePath ( ex:a ex:b ex:c ) ] .
    ex:U sh:minCount 1 ; sh:path [ sh:zeroOrMorePath ex:a ] .
    ex:V sh:minCount 1 ; sh:path [ sh:oneOrMorePath ex:a ] .
    ex:W sh:minCount 1 ; sh:path [ sh:zeroOrOnePath ex:a ] .)");
  auto a = PropertyPath::predicate(ex("a"));
  auto b = PropertyPath::predicate(ex("b"));
  auto c = PropertyPath::predicate(ex("c"));
  auto path_of = [&](const char* s) {
    const Constraint& k = sg.find(exi(s))->constraint;
    EXPECT_EQ(k.kind, ConstraintKind::MinCount);
    return k.path;
  };
  EXPECT_EQ(path_of("S"), PropertyPath::sequence(a, PropertyPath::inverse(b)));
  EXPECT_EQ(path_of("T"), PropertyPath::alternative(
                              a, PropertyPath::alternative(b, c)));
  EXPECT_EQ(path_of("U"), PropertyPath::zero_or_more(a));
  EXPECT_EQ(path_of("V"), PropertyPath::one_or_more(a));
  EXPECT_EQ(path_of("W"), PropertyPath::zero_or_one(a));
  EXPECT_EQ(sg.signature(), (std::set<std::string>{ex("a"), ex("b"), ex("c")}));
}

TEST(Paths, SingleElementListIsMalformed) {
  EXPECT_ANY_THROW(shapes("ex:S sh:minCount 1 ; sh:path ( ex:a ) ."));
}

TEST(Paths, ToStringShowsStructure) {
  auto p = PropertyPath::sequence(
      PropertyPath::predicate("p"),
      PropertyPath::inverse(PropertyPath::zero_or_more(
          PropertyPath::alternative(PropertyPath::predicate("q"),
                                    PropertyPath::predicate("r")))));
  std::string s = shacl::to_string(p);
  EXPECT_NE(s.find("p"), std::string::npos);
  EXPECT_NE(s.find("q"), std::string::npos);
  EXPECT_NE(s.find("*"), std::string::npos);
}

namespace {

PropertyPath random_path(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 6);
  std::uniform_int_distribution<int> pred(0, 2);
  auto sub = [&] { return random_path(rng, depth - 1); };
  switch (kind(rng)) {
    case 0: return PropertyPath::predicate("p" + std::to_string(pred(rng)));
    case 1: return PropertyPath::inverse(sub());
    case 2: return PropertyPath::sequence(sub(), sub());
    case 3: return PropertyPath::alternative(sub(), sub());
    case 4: return PropertyPath::zero_or_one(sub());
    case 5: return PropertyPath::zero_or_more(sub());
    default: return PropertyPath::one_or_more(sub());
  }
}

bool is_normal(const PropertyPath& p) {
  if (p.kind == PathKind::OneOrMore) return false;
  if (p.kind == PathKind::Inverse)
    return p.children[0].kind == PathKind::Predicate;
  return std::all_of(p.children.begin(), p.children.end(), is_normal);
}

}  // namespace

TEST(Normalize, IsIdempotentAndReachesNormalForm) {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    PropertyPath p = random_path(rng, 4);
    PropertyPath n = normalize(p);
    EXPECT_TRUE(is_normal(n)) << shacl::to_string(p);
    EXPECT_EQ(normalize(n), n) << shacl::to_string(p);
    std::set<std::string> before;
    std::set<std::string> after;
    collect_predicates(p, before);
    collect_predicates(n, after);
    EXPECT_EQ(before, after);
  }
}

TEST(Normalize, PushesInverseThroughSequences) {
  auto p = PropertyPath::predicate("p");
  auto q = PropertyPath::predicate("q");
  EXPECT_EQ(normalize(PropertyPath::inverse(PropertyPath::sequence(p, q))),
            PropertyPath::sequence(PropertyPath::inverse(q),
                                   PropertyPath::inverse(p)));
  EXPECT_EQ(normalize(PropertyPath::inverse(PropertyPath::inverse(p))), p);
  EXPECT_EQ(normalize(PropertyPath::one_or_more(p)),
            PropertyPath::sequence(p, PropertyPath::zero_or_more(p)));
}

namespace {

// Every elementary cycle by brute force: each ordered arrangement of each
// subset of nodes, kept when consecutive edges exist, canonically rotated.
std::vector<std::vector<int>> brute_cycles(
    int n, const std::set<std::pair<int, int>>& edges) {
  std::set<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < nodes.size() && ok; ++i)
        ok = edges.contains({nodes[i], nodes[(i + 1) % nodes.size()]});
      if (!ok) continue;
      auto rot = nodes;
      std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()),
                  rot.end());
      out.insert(rot);
    } while (std::next_permutation(nodes.begin(), nodes.end()));
  }
  return {out.begin(), out.end()};
}

}  // namespace

TEST(DetectRecursion, MatchesBruteForceCycleEnumeration) {
  std::mt19937 rng(5);
  for (int round = 0; round < 200; ++round) {
    int n = 1 + static_cast<int>(rng() % 5);
    std::set<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(0.3);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (coin(rng)) edges.insert({i, j});
    // Names sort in index order: s0 < s1 < ...
    std::vector<Shape> shapes_v;
    for (int i = 0; i < n; ++i) {
      std::vector<Constraint> refs;
      for (auto [a, b] : edges)
        if (a == i) refs.push_back(Constraint::has_shape(exi("s" + std::to_string(b))));
      shapes_v.push_back({exi("s" + std::to_string(i)), {}, Constraint::conj(refs)});
    }
    ShapeGraph sg(shapes_v);
    std::vector<std::vector<RdfTerm>> want;
    for (const auto& cyc : brute_cycles(n, edges)) {
      std::vector<RdfTerm> names;
      for (int v : cyc) names.push_back(exi("s" + std::to_string(v)));
      want.push_back(names);
    }
    std::sort(want.begin(), want.end());
    EXPECT_EQ(detect_recursion(sg), want) << "round " << round;
  }
}

TEST(DetectRecursion, SelfReferenceThroughShNode) {
  auto sg = shapes("ex:S a sh:NodeShape ; sh:node ex:S .");
  auto cycles = detect_recursion(sg);
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0], std::vector<RdfTerm>{exi("S")});
}
