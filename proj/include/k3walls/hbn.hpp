#pragma once

#include "k3walls/numeric.hpp"

#include <string>
#include <vector>

namespace k3walls {

// g - (r+1)(g-d+r); any integers accepted.
Integer rho(const Integer& g, const Integer& r, const Integer& d);

struct RhoK {
    Integer value;
    std::vector<int> argmax;  // every maximizing ell, ascending
};

// max over 0 <= ell <= r of rho(g, r-ell, d) - ell*k
RhoK rho_k(const Integer& g, const Integer& k, int r, const Integer& d);

struct EllDecomposition {
    int ell, e, m1, m2;
};

// ell = e(r+1-ell) + m1, m2 = r+1-ell-m1
EllDecomposition ell_decompose(int r, int ell);

struct DegeneracyDims {
    Integer s, rkE, rkF, expected_dim;
};

// Throws if the expected dimension differs from rho(g,r-ell,d) - ell*k.
DegeneracyDims degeneracy_dims(const Integer& g, const Integer& k, const Integer& d, int r, int ell);

// Both sides of rho(g,m1-1,d-(e+1)k) = rho(g,r-ell,d) - ell*k + (r-ell-m1+1)(g+ek-d+r-ell+m1).
struct RhoShift {
    Integer lhs, rhs;
};
RhoShift rho_shift(const Integer& g, const Integer& k, const Integer& d, int r, int ell);

// The h0 conditions cutting out the open part of the locus, as text.
std::vector<std::string> h0_conditions(int r, int ell);

// max{ak + 1 - g, a + 1}
Integer pencil_power_h0(const Integer& g, const Integer& k, const Integer& a);

struct SplitPart {
    Integer f;
    Integer n;
    bool operator==(const SplitPart&) const = default;
};
using SplittingType = std::vector<SplitPart>;

SplittingType splitting_nonneg_part(const Integer& g, const Integer& k, const Integer& d, const SplittingType& st);

struct BalancedData {
    Integer e, m1, m2;
    bool operator==(const BalancedData&) const = default;
};

BalancedData balanced_correspondence(const SplittingType& nonneg);
// Same, from a flat multiset of values such as (2,2,1).
BalancedData balanced_correspondence(const std::vector<Integer>& values);

}  // namespace k3walls
