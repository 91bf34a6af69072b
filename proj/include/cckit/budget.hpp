#pragma once

#include <cstdint>

namespace cckit {

// Global budgets for the search/enumeration routines. defaults() reads the
// CCKIT_BUDGET environment variable once: a positive integer scales the
// node and element caps linearly (value 100 = stock defaults).
struct Budget {
    std::int64_t search_nodes = 50'000'000;  // backtracking node cap per search
    std::int64_t group_elements = 10'000'000; // permutation group enumeration cap
    int max_extension_degree = 40;            // n cap for the degree-n^2 extension
    int max_closure_degree = 2048;            // n cap for WL refinement inputs

    static Budget defaults();
};

} // namespace cckit
