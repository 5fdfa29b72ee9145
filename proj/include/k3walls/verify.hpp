#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace k3walls {

struct PropertyResult {
    std::string module;
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> failures;  // first few, in canonical order
    bool ok() const { return failed == 0; }
};

// K3WALLS_THREADS, else 1.
int worker_count_from_env();

// Runs f(i, acc) for i in [0, n) on a pool and merges accumulators in index
// order, so the result never depends on the schedule.
struct Accumulator {
    std::uint64_t checked = 0;
    std::vector<std::string> failures;
    void check(bool cond, const std::string& what)
    {
        ++checked;
        if (!cond) failures.push_back(what);
    }
};

namespace props {

// lattice
PropertyResult pairing_bilinear(int samples, std::uint64_t seed, int threads);
PropertyResult discriminant_relation(int samples, std::uint64_t seed, int threads);
PropertyResult gram_signature(int g_max, int k_max, int threads);
PropertyResult spherical_line_bundles(int e_max, int g_max, int k_max, int threads);

// stability
PropertyResult slope_scaling(int samples, std::uint64_t seed, int threads);
PropertyResult rank_zero_slope(int samples, std::uint64_t seed, int threads);
PropertyResult wall_increasing_in_e(int g_max, int k_max, int threads);
PropertyResult small_degree(int g_max, int k_max, int m_max, int box, int threads);
PropertyResult spherical_monotone(int g_max, int k_max, int threads);
PropertyResult worked_walls();

// strata
PropertyResult dimension_identity(int g_max, int k_max, int r_max, int threads);
PropertyResult dimension_general(int g_max, int k_max, int r_max, int threads);
PropertyResult dimension_upper_bound(int g_max, int k_max, int r_max, int threads);
PropertyResult nonexistence(int g_max, int k_max, int r_max, int threads);
PropertyResult empty_iff_filtered(int g_max, int k_max, int r_max, int threads);
PropertyResult random_wall_sequences(int samples, std::uint64_t seed, int threads);

// hbn
PropertyResult rho_k_bounds(int g_max, int k_max, int r_max, int threads);
PropertyResult ell_roundtrip(int r_max);
PropertyResult degeneracy_identities(int g_max, int k_max, int r_max, int threads);
PropertyResult splitting_correspondence(int g_max, int k_max, int r_max, int threads);

// tableaux
PropertyResult tableaux_vs_naive(int g_max, int k_max, int cells_max, int threads);
PropertyResult tableaux_vs_formula(int g_max, int k_max, int r_max, int cells_max, int threads);

// chains
PropertyResult chains_verify(int g_max, int k_max, int threads);
PropertyResult complement_involution(int samples, std::uint64_t seed, int threads);

}  // namespace props

struct VerifyOptions {
    int max_g = 8;
    int max_k = 5;
    int threads = 1;
};

// suite: lattice, stability, strata, hbn, tableaux, chains or all.
std::vector<PropertyResult> run_verify(const std::string& suite, const VerifyOptions& opt);

}  // namespace k3walls
