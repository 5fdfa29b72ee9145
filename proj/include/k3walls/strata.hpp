#pragma once

#include "k3walls/stability.hpp"

#include <optional>
#include <vector>

namespace k3walls {

struct TypePair {
    int e;
    int m;
    bool operator==(const TypePair&) const = default;
};

// {(e_1,m_1),...,(e_p,m_p)} with e_1 > ... > e_p >= 0 and m_i >= 1.
using StabilityType = std::vector<TypePair>;

// Throws "ill_formed_type" on ordering or positivity violations.
void check_well_formed(const StabilityType& t);

bool validate_type(const StabilityType& t, int r, bool refined);

// r + 1 - sum m_i
int type_ell(const StabilityType& t, int r);

struct TypeFlags {
    bool refined = false;
    bool square_filtered = false;
};

struct TypeEnumeration {
    int r;
    TypeFlags flags;
    std::vector<StabilityType> items;  // sorted on (p, e_1, m_1, e_2, ...)
};

// v must have shape (r0, H - a0 E, s0 + r0) with a0 >= 0.
void check_special_shape(const MukaiVector& v);

TypeEnumeration enumerate_types(const SurfaceParams& p, const MukaiVector& v, int r, TypeFlags flags);

// v - sum_{i <= upto} m_i (1, e_i E, 1); upto = -1 means all pairs.
MukaiVector type_residual(const MukaiVector& v, const StabilityType& t, int upto = -1);
Integer type_square(const SurfaceParams& p, const MukaiVector& v, const StabilityType& t);

Integer stratum_dimension(const SurfaceParams& p, const MukaiVector& v, const StabilityType& t);

// {(e+1, m1), (e, m2)}, m1 >= 0, m2 > 0.
struct BalancedType {
    int e;
    int m1;
    int m2;
    StabilityType to_type() const;  // drops an m1 = 0 pair
};

std::optional<BalancedType> as_balanced(const StabilityType& t);

enum class Verdict { NonEmpty, EmptyByNecessity, Unknown };
enum class DegreeCase { Generic, GenusMinusOne };

const char* verdict_name(Verdict v);

struct NonemptinessVerdict {
    Verdict verdict;
    Integer square;
};

NonemptinessVerdict balanced_nonempty(const SurfaceParams& p, const MukaiVector& v, const BalancedType& t,
                                      DegreeCase dc);

std::vector<WallPoint> wall_sequence(const StabilityParams& sp, const MukaiVector& v, const StabilityType& t);

}  // namespace k3walls
