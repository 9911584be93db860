#include "doctest.h"
#include "suites.hpp"

using namespace gpar;

namespace {

void check_suite(const suite::Result& r, int cases) {
    INFO(r.summary());
    CHECK(r.cases >= cases);
    CHECK(r.ok());
}

}  // namespace

TEST_CASE("nra matches are hom matches") { check_suite(suite::nra_subset_of_hom(300, 111), 300); }

TEST_CASE("matches preserve degrees") { check_suite(suite::degree_preservation(300, 112), 300); }

TEST_CASE("embeddings are never larger than the pattern") { check_suite(suite::embedding_size(300, 113), 300); }

TEST_CASE("absolute support is anti-monotonic under pattern extension") {
    check_suite(suite::absolute_support_antimonotone(300, 114), 300);
}

TEST_CASE("closure is monotone and idempotent") { check_suite(suite::closure_properties(300, 115), 300); }

TEST_CASE("simplification keeps event counts") { check_suite(suite::simplification_preserves_stats(300, 116), 300); }

TEST_CASE("trivial rules predict nothing new") { check_suite(suite::triviality_soundness(300, 117), 300); }
