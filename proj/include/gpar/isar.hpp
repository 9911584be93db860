#pragma once

#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gpar/graph.hpp"
#include "gpar/metric_value.hpp"
#include "gpar/term.hpp"

namespace gpar {

using Item = Term;

/// A set of items, sorted by handle.
class Itemset {
public:
    Itemset() = default;
    explicit Itemset(std::vector<Item> items);
    Itemset(std::initializer_list<std::string_view> labels);

    std::span<const Item> items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    bool subset_of(const Itemset& other) const;

    friend Itemset operator|(const Itemset& a, const Itemset& b);
    friend Itemset operator&(const Itemset& a, const Itemset& b);
    friend bool operator==(const Itemset&, const Itemset&) = default;

private:
    std::vector<Item> items_;
};

/// A bag of transactions; duplicates are kept.
class TransactionDB {
public:
    TransactionDB() = default;
    explicit TransactionDB(std::vector<Itemset> transactions) : transactions_(std::move(transactions)) {}

    void add(Itemset t) { transactions_.push_back(std::move(t)); }
    std::size_t size() const { return transactions_.size(); }
    std::span<const Itemset> transactions() const { return transactions_; }

private:
    std::vector<Itemset> transactions_;
};

/// A => B with both sides non-empty.
class ISARule {
public:
    ISARule(Itemset a, Itemset b);

    const Itemset& A() const { return a_; }
    const Itemset& B() const { return b_; }

private:
    Itemset a_, b_;
};

BigInt absolute_support(const TransactionDB& T, const Itemset& S);
MetricValue relative_support(const TransactionDB& T, const Itemset& S);
MetricValue confidence(const TransactionDB& T, const ISARule& r);
MetricValue lift(const TransactionDB& T, const ISARule& r);
MetricValue leverage(const TransactionDB& T, const ISARule& r);
MetricValue conviction(const TransactionDB& T, const ISARule& r);

struct GarCheck {
    bool antecedent_holds;
    bool consequent_holds;
};

GarCheck gar_check(const Graph& s, const Graph& g1, const Graph& g2);

/// B is a subset of A.
bool is_trivial_isar(const ISARule& r);
/// A and B share an item.
bool is_partially_redundant(const ISARule& r);

/// One transaction per line. `{}` on its own line is the empty transaction.
TransactionDB parse_transaction_db(std::string_view text);

}  // namespace gpar
