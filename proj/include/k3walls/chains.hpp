#pragma once

#include "k3walls/numeric.hpp"

#include <string>
#include <vector>

namespace k3walls {

// 0 <= alpha_0 <= ... <= alpha_r <= d - r
using RamificationSequence = std::vector<int>;

void check_sequence(int r, int d, const RamificationSequence& s);
int weight(const RamificationSequence& s);

// rho(g,r,d) - sum of weights
Integer adjusted_rho(const Integer& g, int r, int d, const std::vector<RamificationSequence>& seqs);

// beta_j = d - r - alpha_{r-j}
RamificationSequence complement(int r, int d, const RamificationSequence& s);

struct ChainComponent {
    int a;
    RamificationSequence in;
    RamificationSequence out;
    Integer adj_rho;
};

struct ChainSeries {
    int g, k, r, d;
    std::vector<ChainComponent> components;
    std::vector<std::string> notes;
};

ChainSeries build_chain(int g, int k, int r, int d);

struct ChainCheck {
    std::vector<std::string> failures;  // each names the component or node
    Integer total_adj_rho;
    bool ok() const { return failures.empty(); }
};

ChainCheck verify_chain(const ChainSeries& c);

}  // namespace k3walls
