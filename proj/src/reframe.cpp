#include "gpar/reframe.hpp"

#include <functional>

#include "gpar/error.hpp"
#include "gpar/matcher.hpp"
#include "gpar/metrics.hpp"

namespace gpar {

Item item_A() { return Item("A"); }
Item item_B() { return Item("B"); }

namespace {

void check_cap(const BigInt& required, const BigInt& cap) {
    if (required > cap) throw CapExceeded(required.str(), cap.str());
}

void append_transactions(const Graph& g, const Rule& r, TransactionDB& db) {
    std::vector<Term> eligible;
    for (Term t : g.terms())
        if (!r.p1.has_term(t) && !r.p2.has_term(t)) eligible.push_back(t);
    const std::size_t n = r.n();
    std::vector<Term> tuple;
    std::vector<bool> used(eligible.size(), false);
    std::function<void()> rec = [&] {
        if (tuple.size() == n) {
            std::vector<Item> items;
            if (m_g(g, tuple, r.p1, r.V1, Semantics::NRA)) items.push_back(item_A());
            if (m_g(g, tuple, r.p2, r.V2, Semantics::NRA)) items.push_back(item_B());
            db.add(Itemset(std::move(items)));
            return;
        }
        for (std::size_t i = 0; i < eligible.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            tuple.push_back(eligible[i]);
            rec();
            tuple.pop_back();
            used[i] = false;
        }
    };
    rec();
}

struct IsarValues {
    MetricValue support1, support2, confidence, lift, leverage, conviction;
};

IsarValues isar_values(const TransactionDB& T) {
    Itemset a({item_A()}), b({item_B()});
    ISARule rule(a, b);
    return {relative_support(T, a), relative_support(T, b), confidence(T, rule),
            lift(T, rule),          leverage(T, rule),      conviction(T, rule)};
}

ReframeReport compare(const MetricReport& gpar, const IsarValues& isar, BigInt db_size) {
    ReframeReport out;
    out.db_size = std::move(db_size);
    auto add = [&](const char* name, const MetricValue& g, const MetricValue& i) {
        out.pairs.push_back(MetricPair{name, g, i, same_value(g, i)});
    };
    add("support1", gpar.support1, isar.support1);
    add("support2", gpar.support2, isar.support2);
    add("confidence", gpar.confidence, isar.confidence);
    add("lift", gpar.lift, isar.lift);
    add("leverage", gpar.leverage, isar.leverage);
    add("conviction", gpar.conviction, isar.conviction);
    out.all_equal = true;
    for (const auto& p : out.pairs) out.all_equal = out.all_equal && p.equal;
    return out;
}

BigInt required_size(const GraphBag& G, const Rule& r) {
    BigInt total = 0;
    for (const auto& [id, g] : G) total += tau_cardinality(g, r.p1, r.p2, r.n());
    return total;
}

}  // namespace

TransactionDB generate_transaction_db(const Graph& g, const Rule& r, const BigInt& cap) {
    require_valid(r);
    check_cap(tau_cardinality(g, r.p1, r.p2, r.n()), cap);
    TransactionDB db;
    append_transactions(g, r, db);
    return db;
}

TransactionDB generate_transaction_db(const GraphBag& G, const Rule& r, const BigInt& cap) {
    require_valid(r);
    check_cap(required_size(G, r), cap);
    TransactionDB db;
    for (const auto& [id, g] : G) append_transactions(g, r, db);
    return db;
}

ReframeReport check_correspondence(const GraphBag& G, const Rule& r, const BigInt& cap) {
    auto db = generate_transaction_db(G, r, cap);
    return compare(metrics_micro(G, r), isar_values(db), BigInt(db.size()));
}

ReframeReport check_macro_correspondence(const GraphBag& G, const Rule& r, const BigInt& cap) {
    require_valid(r);
    check_cap(required_size(G, r), cap);
    std::vector<IsarValues> per_graph;
    BigInt size = 0;
    for (const auto& [id, g] : G) {
        auto db = generate_transaction_db(g, r, cap);
        size += db.size();
        per_graph.push_back(isar_values(db));
    }
    // Average each metric the same way the macro regime does: undefined if any
    // database leaves it undefined, infinite if any value is infinite.
    auto average = [&](MetricValue IsarValues::*field) -> MetricValue {
        if (per_graph.empty()) return MetricValue::undefined("empty bag");
        bool any_inf = false;
        Rational sum = 0;
        for (const auto& v : per_graph) {
            const MetricValue& x = v.*field;
            if (x.is_undefined()) return x;
            if (x.is_infinite())
                any_inf = true;
            else
                sum += x.value();
        }
        if (any_inf) return MetricValue::infinity();
        return Rational(sum / BigInt(per_graph.size()));
    };
    IsarValues avg{average(&IsarValues::support1), average(&IsarValues::support2),
                   average(&IsarValues::confidence), average(&IsarValues::lift),
                   average(&IsarValues::leverage), average(&IsarValues::conviction)};
    return compare(metrics_macro(G, r), avg, size);
}

}  // namespace gpar
