#pragma once

#include <string>
#include <vector>

#include "gpar/graph.hpp"
#include "gpar/isar.hpp"
#include "gpar/metric_value.hpp"
#include "gpar/rule.hpp"

namespace gpar {

inline constexpr unsigned long long kDefaultCap = 1'000'000;

/// The two items of the reframed database.
Item item_A();
Item item_B();

/// One transaction per tuple of the sample space: A is present when the tuple
/// corresponds to an antecedent match, B for a consequent match. Throws
/// CapExceeded when the sample space is larger than `cap`.
TransactionDB generate_transaction_db(const Graph& g, const Rule& r, const BigInt& cap = kDefaultCap);
TransactionDB generate_transaction_db(const GraphBag& G, const Rule& r, const BigInt& cap = kDefaultCap);

struct MetricPair {
    std::string metric;
    MetricValue gpar;
    MetricValue isar;
    bool equal = false;
};

struct ReframeReport {
    BigInt db_size = 0;
    std::vector<MetricPair> pairs;
    bool all_equal = false;
};

/// Micro metrics against ISAR metrics of {A} => {B} on the generated database.
ReframeReport check_correspondence(const GraphBag& G, const Rule& r, const BigInt& cap = kDefaultCap);

/// Macro metrics against the average of ISAR metrics over one database per graph.
ReframeReport check_macro_correspondence(const GraphBag& G, const Rule& r, const BigInt& cap = kDefaultCap);

}  // namespace gpar
