#include "doctest.h"
#include "gpar/error.hpp"
#include "gpar/matcher.hpp"
#include "oracles.hpp"
#include "suites.hpp"
#include "test_util.hpp"

using namespace gpar;
using testutil::T;

namespace {

Mapping M(std::initializer_list<std::pair<const char*, const char*>> b) {
    std::vector<std::pair<Variable, Term>> out;
    for (auto [v, t] : b) out.emplace_back(Variable(v), Term(t));
    return Mapping(std::move(out));
}

}  // namespace

TEST_CASE("self-loop under hom and nra") {
    Pattern p = parse_pattern("?v1 ?v2 ?v3");
    Graph g{T("t1", "t2", "t1")};
    auto hom = evaluate(p, g, Semantics::HOM);
    REQUIRE(hom.size() == 1);
    CHECK(hom[0] == M({{"v1", "t1"}, {"v2", "t2"}, {"v3", "t1"}}));
    CHECK(evaluate(p, g, Semantics::NRA).empty());
}

TEST_CASE("coauthor antecedent has exactly the listed match") {
    Graph g = testutil::fixture_graph("fig5.graph");
    Pattern p1 = parse_pattern(testutil::fixture("fig5_p1.pattern"));
    auto nra = evaluate(p1, g, Semantics::NRA);
    REQUIRE(nra.size() == 1);
    CHECK(nra[0] == M({{"v1", "Alice"}, {"v2", "Bob"}, {"v3", "Org"}}));
    CHECK(nra[0].to_string() == "?v1=Alice ?v2=Bob ?v3=Org");
}

TEST_CASE("embedding smaller than the pattern") {
    Pattern p = parse_pattern("?v1 t2 ?v2\n?v3 t2 ?v2");
    Graph g{T("t1", "t2", "t3")};
    auto hom = evaluate(p, g, Semantics::HOM);
    REQUIRE(hom.size() == 1);
    CHECK(hom[0] == M({{"v1", "t1"}, {"v2", "t3"}, {"v3", "t1"}}));
    CHECK(evaluate(p, g, Semantics::NRA).empty());
}

TEST_CASE("variable in predicate position") {
    Rule r = testutil::fixture_rule("fig6.rules");
    Graph g = testutil::fixture_graph("fig6.graph");
    auto ms = evaluate(r.p1, g, Semantics::NRA);
    REQUIRE(ms.size() == 2);
    for (const auto& mu : ms) CHECK(mu.find(Variable("v2")) == Term("knows"));
}

TEST_CASE("nra excludes pattern terms") {
    Pattern p = parse_pattern("?x p ?y");
    Graph g{T("p", "p", "a"), T("b", "p", "c")};
    CHECK(evaluate(p, g, Semantics::HOM).size() == 2);
    auto nra = evaluate(p, g, Semantics::NRA);
    REQUIRE(nra.size() == 1);
    CHECK(nra[0] == M({{"x", "b"}, {"y", "c"}}));
}

TEST_CASE("empty pattern is rejected") {
    CHECK_THROWS_AS(evaluate(Pattern{}, Graph{T("a", "b", "c")}, Semantics::HOM), ContractError);
}

TEST_CASE("output order is sorted by bound labels") {
    Pattern p = parse_pattern("?x r ?y");
    Graph g{T("c", "r", "a"), T("a", "r", "c"), T("b", "r", "a"), T("a", "r", "b")};
    auto ms = evaluate(p, g, Semantics::NRA);
    REQUIRE(ms.size() == 4);
    CHECK(ms[0].to_string() == "?x=a ?y=b");
    CHECK(ms[1].to_string() == "?x=a ?y=c");
    CHECK(ms[2].to_string() == "?x=b ?y=a");
    CHECK(ms[3].to_string() == "?x=c ?y=a");
}

TEST_CASE("for_each_match honors fixed bindings and early exit") {
    Pattern p = parse_pattern("?x r ?y");
    Graph g{T("a", "r", "b"), T("a", "r", "c"), T("d", "r", "e")};
    int seen = 0;
    for_each_match(p, g, Semantics::NRA, M({{"x", "a"}}), [&](const Mapping& mu) {
        CHECK(mu.find(Variable("x")) == Term("a"));
        ++seen;
        return true;
    });
    CHECK(seen == 2);
    seen = 0;
    for_each_match(p, g, Semantics::NRA, Mapping{}, [&](const Mapping&) { return ++seen < 1; });
    CHECK(seen == 1);
    CHECK_THROWS_AS(for_each_match(p, g, Semantics::NRA, M({{"q", "a"}}), [](const Mapping&) { return true; }),
                    ContractError);
}

TEST_CASE("apply_mapping") {
    Graph g = testutil::fixture_graph("fig5.graph");
    Rule r = testutil::fixture_rule("fig5.rules");
    auto mu = evaluate(r.p1, g, Semantics::NRA).at(0);
    CHECK(apply_mapping(mu, r.p2).to_graph() == Graph{T("Bob", "worksAt", "Org")});

    Pattern ground = Pattern::from_graph(g);
    CHECK(apply_mapping(mu, ground) == ground);

    Rule rtp = testutil::fixture_rule("fig11.rules");
    auto mu11 = evaluate(rtp.p1, testutil::fixture_graph("fig11.graph"), Semantics::NRA);
    REQUIRE(mu11.size() == 1);
    CHECK(apply_mapping(mu11[0], rtp.p2).to_graph() == Graph{T("t3", "t8", "t7")});

    auto partial = apply_mapping(M({{"x", "a"}}), parse_pattern("?x r ?y"));
    CHECK(partial == parse_pattern("a r ?y"));
}

TEST_CASE("project") {
    Graph g = testutil::fixture_graph("fig5.graph");
    Pattern p1 = parse_pattern(testutil::fixture("fig5_p1.pattern"));
    auto ms = evaluate(p1, g, Semantics::NRA);
    std::vector<Variable> V{Variable("v2"), Variable("v3")};
    auto tuples = project(ms, V);
    REQUIRE(tuples.size() == 1);
    CHECK(tuples[0] == TermTuple{Term("Bob"), Term("Org")});
    CHECK(project({}, V).empty());
    std::vector<Mapping> two{M({{"x", "a"}, {"y", "b"}}), M({{"x", "a"}, {"y", "c"}})};
    std::vector<Variable> X{Variable("x")};
    CHECK(project(two, X).size() == 1);
    std::vector<Variable> missing{Variable("z")};
    CHECK_THROWS_AS(project(two, missing), ContractError);
}

TEST_CASE("m_g") {
    Graph g = testutil::fixture_graph("fig5.graph");
    Pattern p1 = parse_pattern(testutil::fixture("fig5_p1.pattern"));
    std::vector<Variable> V{Variable("v2"), Variable("v3")};
    std::vector<Term> bob_org{Term("Bob"), Term("Org")}, alice_org{Term("Alice"), Term("Org")};
    std::vector<Term> org_org{Term("Org"), Term("Org")};
    CHECK(m_g(g, bob_org, p1, V, Semantics::NRA));
    CHECK_FALSE(m_g(g, alice_org, p1, V, Semantics::NRA));
    CHECK_FALSE(m_g(g, org_org, p1, V, Semantics::NRA));
    std::vector<Term> one{Term("Bob")};
    CHECK_THROWS_AS(m_g(g, one, p1, V, Semantics::NRA), ContractError);
    std::vector<Variable> rep{Variable("v2"), Variable("v2")};
    CHECK_THROWS_AS(m_g(g, bob_org, p1, rep, Semantics::NRA), ContractError);
}

TEST_CASE("family graphs reproduce the hom and nra match tables") {
    GraphBag bag = parse_graph_bag(testutil::fixture("family.bag"));
    for (int i = 1; i <= 5; ++i) {
        Pattern p = parse_pattern(testutil::fixture("family_p" + std::to_string(i) + ".pattern"));
        for (int j = 1; j <= 5; ++j) {
            const Graph& g = bag.graph(j - 1);
            bool hom_expected = i == 1 || j == i || j == 5;
            CAPTURE(i);
            CAPTURE(j);
            CHECK(!evaluate(p, g, Semantics::HOM).empty() == hom_expected);
            CHECK(!evaluate(p, g, Semantics::NRA).empty() == (i == j));
            // The brute-force evaluator agrees cell by cell.
            CHECK(!oracle::evaluate(p, g, Semantics::HOM).empty() == hom_expected);
            CHECK(!oracle::evaluate(p, g, Semantics::NRA).empty() == (i == j));
        }
    }
}

TEST_CASE("evaluate and m_g agree with the brute-force evaluator") {
    auto r = suite::matcher_oracle(200, 21);
    INFO(r.summary());
    CHECK(r.cases == 400);
    CHECK(r.ok());
}
