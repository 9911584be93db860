#include <algorithm>
#include <map>

#include "doctest.h"
#include "gpar/error.hpp"
#include "gpar/reframe.hpp"
#include "suites.hpp"
#include "test_util.hpp"

using namespace gpar;
using testutil::Q;

namespace {

std::map<std::string, int> shape(const TransactionDB& db) {
    std::map<std::string, int> out;
    for (const auto& t : db.transactions()) {
        std::vector<std::string> labels;
        for (Item i : t.items()) labels.push_back(i.label());
        std::sort(labels.begin(), labels.end());
        std::string key;
        for (const auto& l : labels) key += l;
        ++out[key.empty() ? "-" : key];
    }
    return out;
}

GraphBag single(const Graph& g) {
    GraphBag bag;
    bag.add("g", g);
    return bag;
}

}  // namespace

TEST_CASE("coauthor graph becomes six transactions") {
    Rule r = testutil::fixture_rule("fig5.rules");
    auto db = generate_transaction_db(testutil::fixture_graph("fig5.graph"), r);
    CHECK(db.size() == 6);
    auto s = shape(db);
    CHECK(s["A"] == 1);
    CHECK(s["B"] == 1);
    CHECK(s["-"] == 4);

    auto ext = shape(generate_transaction_db(testutil::fixture_graph("fig5_extended.graph"), r));
    CHECK(ext["AB"] == 2);
    CHECK(ext["-"] == 4);

    GraphBag bag = parse_graph_bag(testutil::fixture("fig5_pair.bag"));
    CHECK(generate_transaction_db(bag, r).size() == 12);
}

TEST_CASE("micro metrics equal the itemset metrics of the generated database") {
    Rule r = testutil::fixture_rule("fig5.rules");
    GraphBag bag = parse_graph_bag(testutil::fixture("fig5_pair.bag"));
    auto rep = check_correspondence(bag, r);
    CHECK(rep.db_size == 12);
    REQUIRE(rep.pairs.size() == 6);
    CHECK(rep.pairs[0].metric == "support1");
    CHECK(rep.pairs[2].metric == "confidence");
    CHECK(rep.pairs[2].gpar.equals(Q(2, 3)));
    CHECK(rep.pairs[2].isar.equals(Q(2, 3)));
    for (const auto& p : rep.pairs) {
        CAPTURE(p.metric);
        CHECK(p.equal);
    }
    CHECK(rep.all_equal);
}

TEST_CASE("macro metrics equal averaged itemset metrics") {
    Rule r = testutil::fixture_rule("fig5.rules");
    auto rep = check_macro_correspondence(parse_graph_bag(testutil::fixture("fig5_pair.bag")), r);
    CHECK(rep.all_equal);
    CHECK(rep.pairs[2].isar.equals(Q(1, 2)));
    CHECK(rep.pairs[5].isar.is_infinite());
}

TEST_CASE("undefined values correspond too") {
    Rule r = testutil::fixture_rule("fig5.rules");
    Graph lonely = parse_graph("Carol worksAt Org\nDave knows Carol");
    auto rep = check_correspondence(single(lonely), r);
    CHECK(rep.pairs[2].gpar.is_undefined());
    CHECK(rep.pairs[2].isar.is_undefined());
    CHECK(rep.all_equal);
}

TEST_CASE("size cap") {
    Rule r = testutil::fixture_rule("fig5.rules");
    Graph g = testutil::fixture_graph("fig5.graph");
    CHECK_THROWS_AS(generate_transaction_db(g, r, 5), CapExceeded);
    CHECK(generate_transaction_db(g, r, 6).size() == 6);
    try {
        check_correspondence(parse_graph_bag(testutil::fixture("fig5_pair.bag")), r, 11);
        FAIL("expected the cap to be hit");
    } catch (const CapExceeded& e) {
        CHECK(e.required() == "12");
    }
}

TEST_CASE("reframing agrees on random micro inputs") {
    auto r = suite::reframe_micro(150, 81, 100000);
    INFO(r.summary());
    CHECK(r.ok());
    CHECK(r.cases == 150);
}

TEST_CASE("reframing agrees on random macro inputs") {
    auto r = suite::reframe_macro(150, 82, 100000);
    INFO(r.summary());
    CHECK(r.ok());
    CHECK(r.cases == 150);
}
