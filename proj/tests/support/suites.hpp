#pragma once

#include <map>
#include <string>
#include <vector>

namespace gpar::suite {

struct Result {
    int cases = 0;
    int failures = 0;
    std::vector<std::string> messages;       // first few failures
    std::map<std::string, int> coverage;     // e.g. situation counts

    void fail(const std::string& msg);
    bool ok() const { return failures == 0; }
    std::string summary() const;
};

// Matcher
Result matcher_oracle(int cases, unsigned seed);
Result nra_subset_of_hom(int cases, unsigned seed);
Result degree_preservation(int cases, unsigned seed);
Result embedding_size(int cases, unsigned seed);

// Sample space and event statistics against explicit enumeration.
Result eq1_oracle(int cases, unsigned seed);
Result absolute_support_antimonotone(int cases, unsigned seed);

// Characteristic tables plus definedness, one regime each.
Result characteristics_isar(int cases, unsigned seed);
Result characteristics_single(int cases, unsigned seed);
Result characteristics_micro(int cases, unsigned seed);
Result characteristics_macro(int cases, unsigned seed);

// Transaction-database reframing.
Result reframe_micro(int cases, unsigned seed, unsigned long long cap);
Result reframe_macro(int cases, unsigned seed, unsigned long long cap);

// Rules and generation.
Result closure_properties(int cases, unsigned seed);
Result triviality_soundness(int cases, unsigned seed);
Result simplification_preserves_stats(int cases, unsigned seed);

}  // namespace gpar::suite
