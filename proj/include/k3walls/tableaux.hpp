#pragma once

#include "k3walls/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace k3walls {

struct TableauParams {
    int g, k, r, d;
    int rows() const { return r + 1; }
    int cols() const { return g - d + r; }
};

// Row-major, rows() x cols(), labels >= 1.
using Tableau = std::vector<std::vector<int>>;

bool is_valid(const TableauParams& p, const Tableau& t, int label_cap);

struct OmittedResult {
    bool feasible = false;
    int omitted = 0;
    Tableau witness;          // lexicographically least maximizer (row-major)
    std::uint64_t nodes = 0;  // search nodes visited
};

// Exhaustive backtracking; throws "budget_exhausted" past `budget` nodes.
OmittedResult max_omitted(const TableauParams& p, std::uint64_t budget = 50'000'000);

// Plain enumeration of every valid filling; exponential, for cross-checks only.
OmittedResult max_omitted_naive(const TableauParams& p);

struct OracleReport {
    TableauParams params;
    OmittedResult search;
    Integer rho_k;
    std::vector<int> argmax;
    bool equality;
};

// Throws "oracle_violation" if omitted > rho_k or an infeasible grid has rho_k >= 0.
OracleReport oracle_check(const TableauParams& p, std::uint64_t budget = 50'000'000);

}  // namespace k3walls
