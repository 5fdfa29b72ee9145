#include "k3walls/stability.hpp"

#include <algorithm>
#include <limits>

namespace k3walls {

StabilityParams::StabilityParams(SurfaceParams p, Rational e) : params(std::move(p)), eps(std::move(e))
{
    if (eps <= 0) throw Error("invalid_argument", "eps must be positive, got " + to_string(eps));
}

Rational StabilityParams::heps2() const { return 2 * eps * params.k + eps * eps * params.h2(); }

Rational StabilityParams::dot(const PicClass& c) const
{
    // (xH + yE).(E + eps H) = xk + eps(x(2g-2) + yk)
    return Rational(c.x * params.k) + eps * Rational(c.x * params.h2() + c.y * params.k);
}

bool in_parabola_region(const StabilityPoint& pt) { return 2 * pt.w > pt.b * pt.b; }

const char* wall_kind_name(WallKind k)
{
    switch (k) {
        case WallKind::LineBundle: return "line_bundle";
        case WallKind::RankZero: return "rank_zero";
        case WallKind::OriginRay: return "origin_ray";
        case WallKind::Numerical: return "numerical";
    }
    return "?";
}

CentralCharge central_charge(const StabilityParams& sp, const StabilityPoint& pt, const MukaiVector& v)
{
    Rational h = sp.heps2();
    return {Rational(-v.ch2()) + pt.w * Rational(v.r) * h, sp.dot(v.c1()) - pt.b * Rational(v.r) * h};
}

Slope slope(const StabilityParams& sp, const StabilityPoint& pt, const MukaiVector& v)
{
    CentralCharge z = central_charge(sp, pt, v);
    if (z.im == 0) return Slope::inf();
    return {false, -z.re / z.im};
}

Projection projection(const StabilityParams& sp, const MukaiVector& v)
{
    if (v.r == 0) throw Error("projection_rank_zero", "projection undefined for rank 0");
    Rational denom = sp.heps2() * Rational(v.r);
    return {sp.dot(v.c1()) / denom, Rational(v.ch2()) / denom};
}

WallLine numerical_wall_line(const StabilityParams& sp, const MukaiVector& v1, const MukaiVector& v2)
{
    // Cross-multiplying nu(v1) = nu(v2); the w*b terms cancel.
    Rational h = sp.heps2();
    Rational i1 = sp.dot(v1.c1()), i2 = sp.dot(v2.c1());
    Rational r1(v1.r), r2(v2.r), c1(v1.ch2()), c2(v2.ch2());
    return {h * (r2 * i1 - r1 * i2), h * (c2 * r1 - c1 * r2), c1 * i2 - c2 * i1};
}

static WallKind classify(const MukaiVector& u, std::optional<Integer>& e)
{
    if (u.r == 1 && u.x == 0 && u.s == 1 && u.y >= 1) {
        e = u.y;
        return WallKind::LineBundle;
    }
    return u.r == 0 ? WallKind::RankZero : WallKind::Numerical;
}

WallPoint wall_on_axis(const StabilityParams& sp, const MukaiVector& v1, const MukaiVector& v2)
{
    Rational i1 = sp.dot(v1.c1()), i2 = sp.dot(v2.c1());
    Rational r1(v1.r), r2(v2.r), c1(v1.ch2()), c2(v2.ch2());
    bool proportional = r1 * i2 == r2 * i1 && r1 * c2 == r2 * c1 && i1 * c2 == i2 * c1;
    if (proportional) throw Error("proportional_classes", "proportional classes, no wall");

    if (i1 == 0 || i2 == 0) {
        std::optional<Integer> e;
        if (v2 == line_bundle_vector(0)) e = Integer(0);
        return {0, v2, WallKind::OriginRay, e};
    }
    WallLine line = numerical_wall_line(sp, v1, v2);
    if (line.A == 0) throw Error("no_intersection", "no intersection on ray: slopes are parallel on b = 0");
    Rational w = -line.C / line.A;
    if (w < 0) throw Error("no_intersection", "no intersection on ray: solution w = " + to_string(w) + " < 0");

    WallPoint wp{w, v2, WallKind::Numerical, std::nullopt};
    wp.kind = classify(v2, wp.e);
    return wp;
}

Rational epsilon_threshold(const SurfaceParams& p, const Integer& m)
{
    if (m < 0) throw Error("invalid_argument", "epsilon_threshold needs m >= 0");
    return Rational(p.k, 2 * p.g + m - 1);
}

Rational no_wall_threshold(const SurfaceParams& p) { return Rational(p.k, p.g + 1); }

Rational default_epsilon(const SurfaceParams& p, const MukaiVector& v)
{
    if (v.x != 1 || v.y > 0)
        throw Error("shape_mismatch", "default eps needs v of shape (r0, H - a0 E, s0 + r0) with a0 >= 0");
    Integer a0 = -v.y;
    Integer big_m = (p.g - 1 - a0 * p.k) * (p.g - 1 - a0 * p.k);
    return std::min(epsilon_threshold(p, big_m), no_wall_threshold(p)) / 2;
}

std::optional<Rational> spherical_scan(const StabilityParams& sp, int box)
{
    if (box < 0) throw Error("invalid_argument", "box must be >= 0");
    const MukaiVector ox = line_bundle_vector(0);
    std::optional<Rational> best;
    for (int r = -box; r <= box; ++r) {
        if (r == 0) continue;
        for (int x = -box; x <= box; ++x)
            for (int y = -box; y <= box; ++y)
                for (int s = -box; s <= box; ++s) {
                    MukaiVector v{r, x, y, s};
                    if (v == ox || v == Integer(-1) * ox) continue;
                    if (mukai_pairing(sp.params, v, v) != -2) continue;
                    Projection pr = projection(sp, v);
                    Rational n2 = pr.b * pr.b + pr.w * pr.w;
                    if (!best || n2 < *best) best = n2;
                }
    }
    return best;
}

SmallDegreeScan small_degree_scan(const StabilityParams& sp, std::int64_t m, std::int64_t box)
{
    // Machine integers are exact here: every product below is bounded by
    // box^2 * (2g-2 + k) * eps_num * eps_den, which the guard keeps < 2^62.
    if (box < 0 || m < 0) throw Error("invalid_argument", "small_degree_scan needs box >= 0, m >= 0");
    const Integer g = sp.params.g, k = sp.params.k;
    const Integer a = num(sp.eps), b = den(sp.eps);
    Integer bound = Integer(box + 1) * (box + 1) * (2 * g + k + 2) * (a + 1) * (b + 1) * 4;
    if (bound > Integer(std::numeric_limits<std::int64_t>::max() / 4))
        throw Error("out_of_range", "small_degree_scan parameters too large for exact machine arithmetic");
    const auto G = g.convert_to<std::int64_t>(), K = k.convert_to<std::int64_t>();
    const auto A = a.convert_to<std::int64_t>(), B = b.convert_to<std::int64_t>();
    const std::int64_t h2 = 2 * G - 2;
    const std::int64_t upper = B * K + A * h2;  // B * H.H_eps

    SmallDegreeScan out;
    for (std::int64_t t = -box; t <= box; ++t) {
        if (t == 0 || t == 1) continue;
        for (std::int64_t q = -box; q <= box; ++q) {
            std::int64_t d = B * t * K + A * (t * h2 + q * K);  // B * (tH+qE).H_eps
            if (d < 0 || d > upper) {
                out.examined += static_cast<std::uint64_t>((2 * box + 1) * (2 * box + 1));
                continue;
            }
            const std::int64_t c1sq = t * t * h2 + 2 * t * q * K;
            for (std::int64_t r = -box; r <= box; ++r)
                for (std::int64_t s = -box; s <= box; ++s) {
                    ++out.examined;
                    if (-r * s > m) continue;
                    if (c1sq - 2 * r * s < -2) continue;
                    out.violations.push_back({r, t, q, s});
                }
        }
    }
    return out;
}

}  // namespace k3walls
