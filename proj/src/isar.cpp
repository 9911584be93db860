#include "gpar/isar.hpp"

#include <algorithm>
#include <iterator>

#include "gpar/error.hpp"
#include "gpar/io.hpp"

namespace gpar {

Itemset::Itemset(std::vector<Item> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

Itemset::Itemset(std::initializer_list<std::string_view> labels) {
    for (auto l : labels) items_.emplace_back(l);
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool Itemset::subset_of(const Itemset& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

Itemset operator|(const Itemset& a, const Itemset& b) {
    std::vector<Item> out;
    std::set_union(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(), std::back_inserter(out));
    return Itemset(std::move(out));
}

Itemset operator&(const Itemset& a, const Itemset& b) {
    std::vector<Item> out;
    std::set_intersection(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                          std::back_inserter(out));
    return Itemset(std::move(out));
}

ISARule::ISARule(Itemset a, Itemset b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty() || b_.empty()) throw ContractError("rule sides must be non-empty itemsets");
}

BigInt absolute_support(const TransactionDB& T, const Itemset& S) {
    BigInt n = 0;
    for (const auto& t : T.transactions())
        if (S.subset_of(t)) ++n;
    return n;
}

MetricValue relative_support(const TransactionDB& T, const Itemset& S) {
    if (T.size() == 0) return MetricValue::undefined("empty transaction database");
    return Rational(absolute_support(T, S), BigInt(T.size()));
}

MetricValue confidence(const TransactionDB& T, const ISARule& r) {
    auto a = absolute_support(T, r.A());
    if (a == 0) return MetricValue::undefined("antecedent never occurs");
    return Rational(absolute_support(T, r.A() | r.B()), a);
}

MetricValue lift(const TransactionDB& T, const ISARule& r) {
    auto conf = confidence(T, r);
    if (conf.is_undefined()) return conf;
    auto sb = relative_support(T, r.B());
    if (sb.value() == 0) return MetricValue::undefined("consequent never occurs");
    return Rational(conf.value() / sb.value());
}

MetricValue leverage(const TransactionDB& T, const ISARule& r) {
    auto sab = relative_support(T, r.A() | r.B());
    if (sab.is_undefined()) return sab;
    return Rational(sab.value() - relative_support(T, r.A()).value() * relative_support(T, r.B()).value());
}

MetricValue conviction(const TransactionDB& T, const ISARule& r) {
    auto conf = confidence(T, r);
    if (conf.is_undefined()) return conf;
    auto sb = relative_support(T, r.B());
    if (sb.value() == 1) return MetricValue::undefined("consequent occurs everywhere");
    if (conf.value() == 1) return MetricValue::infinity();
    return Rational((1 - sb.value()) / (1 - conf.value()));
}

GarCheck gar_check(const Graph& s, const Graph& g1, const Graph& g2) {
    return {subgraph_contains(s, g1), subgraph_contains(s, g2)};
}

bool is_trivial_isar(const ISARule& r) {
    return r.B().subset_of(r.A());
}

bool is_partially_redundant(const ISARule& r) {
    return !(r.A() & r.B()).empty();
}

TransactionDB parse_transaction_db(std::string_view text) {
    TransactionDB db;
    for_each_token_line(text, [&](const std::vector<Token>& tokens, std::size_t line_no) {
        if (tokens.size() == 1 && !tokens[0].quoted && tokens[0].text == "{}") {
            db.add(Itemset{});
            return;
        }
        std::vector<Item> items;
        for (const auto& t : tokens) {
            if (!t.quoted && t.text == "{}") throw ParseError(line_no, "'{}' must stand alone");
            items.emplace_back(t.text);
        }
        db.add(Itemset(std::move(items)));
    });
    return db;
}

}  // namespace gpar
