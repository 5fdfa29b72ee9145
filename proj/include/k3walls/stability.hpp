#pragma once

#include "k3walls/lattice.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace k3walls {

// Polarisation H_eps = E + eps*H.
struct StabilityParams {
    SurfaceParams params;
    Rational eps;

    StabilityParams(SurfaceParams p, Rational e);

    Rational heps2() const;                   // 2 eps k + eps^2 (2g-2)
    Rational dot(const PicClass& c) const;    // c . H_eps
};

struct StabilityPoint {
    Rational b;
    Rational w;
};

// Open region 2w > b^2.
bool in_parabola_region(const StabilityPoint& pt);

struct CentralCharge {
    Rational re;
    Rational im;
};

struct Slope {
    bool infinite = false;
    Rational value;  // meaningful only when finite

    static Slope inf() { return {true, 0}; }
    bool operator==(const Slope& o) const { return infinite == o.infinite && (infinite || value == o.value); }
};

enum class WallKind { LineBundle, RankZero, OriginRay, Numerical };

struct WallPoint {
    Rational w;
    MukaiVector destabilizer;
    WallKind kind;
    std::optional<Integer> e;  // set for LineBundle walls
};

const char* wall_kind_name(WallKind k);

CentralCharge central_charge(const StabilityParams& sp, const StabilityPoint& pt, const MukaiVector& v);
Slope slope(const StabilityParams& sp, const StabilityPoint& pt, const MukaiVector& v);

struct Projection {
    Rational b;
    Rational w;
};
Projection projection(const StabilityParams& sp, const MukaiVector& v);

// Locus nu(v1) = nu(v2) in the (b,w) plane: A*w + B*b + C = 0.
struct WallLine {
    Rational A, B, C;
};
WallLine numerical_wall_line(const StabilityParams& sp, const MukaiVector& v1, const MukaiVector& v2);

WallPoint wall_on_axis(const StabilityParams& sp, const MukaiVector& v1, const MukaiVector& v2);

// eps_m = k / (2g + m - 1)
Rational epsilon_threshold(const SurfaceParams& p, const Integer& m);
// k / (g + 1): below this no actual wall meets the region of interest.
Rational no_wall_threshold(const SurfaceParams& p);
// min(eps_M, k/(g+1)) / 2 with M = (g - 1 - a0 k)^2, for v = (r0, H - a0 E, s0 + r0).
Rational default_epsilon(const SurfaceParams& p, const MukaiVector& v);

// Smallest |Pi_eps(v)|^2 over spherical v with r != 0, v != +-v(O_X), all
// coordinates bounded by box. A bounded certificate, not the infimum.
std::optional<Rational> spherical_scan(const StabilityParams& sp, int box);

struct ChernClass {
    std::int64_t r, t, q, s;  // (r, tH + qE, s)
};

struct SmallDegreeScan {
    std::uint64_t examined = 0;             // (t,q,r,s) candidates with t outside {0,1}
    std::vector<ChernClass> violations;
};

// Every (r, tH+qE, s) with |r|,|t|,|q|,|s| <= box, -rs <= m,
// 0 <= (tH+qE).H_eps <= H.H_eps, Delta >= -2 and t not in {0,1}.
SmallDegreeScan small_degree_scan(const StabilityParams& sp, std::int64_t m, std::int64_t box);

}  // namespace k3walls
