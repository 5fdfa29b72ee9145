#include "k3walls/strata.hpp"

#include <algorithm>
#include <functional>

namespace k3walls {

void check_well_formed(const StabilityType& t)
{
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].m <= 0) throw Error("ill_formed_type", "ill-formed type: multiplicities must be positive");
        if (t[i].e < 0) throw Error("ill_formed_type", "ill-formed type: e must be >= 0");
        if (i > 0 && t[i].e >= t[i - 1].e)
            throw Error("ill_formed_type", "ill-formed type: e must be strictly decreasing");
    }
}

bool validate_type(const StabilityType& t, int r, bool refined)
{
    check_well_formed(t);
    if (t.empty()) return r == -1;
    long sum_m = 0, sum_me = 0;
    for (const auto& p : t) {
        sum_m += p.m;
        sum_me += static_cast<long>(p.m) * (p.e + 1);
    }
    if (!(sum_m <= r + 1 && r + 1 <= sum_me)) return false;
    if (static_cast<long>(t[0].m) * (t[0].e + 1) > r + 1) return false;
    if (refined) {
        long lhs;
        if (t.size() == 1 && t[0].e >= 1)
            lhs = 2L * t[0].m;
        else
            lhs = 2 * (sum_m - t.back().m) + t.back().m;
        if (lhs > r + 1) return false;
    }
    return true;
}

int type_ell(const StabilityType& t, int r)
{
    int sum_m = 0;
    for (const auto& p : t) sum_m += p.m;
    return r + 1 - sum_m;
}

void check_special_shape(const MukaiVector& v)
{
    if (v.x != 1 || v.y > 0)
        throw Error("shape_mismatch", "v must have shape (r0, H - a0 E, s0 + r0) with a0 >= 0");
}

MukaiVector type_residual(const MukaiVector& v, const StabilityType& t, int upto)
{
    MukaiVector out = v;
    int last = upto < 0 ? static_cast<int>(t.size()) - 1 : upto;
    for (int i = 0; i <= last; ++i) out = out - Integer(t[i].m) * line_bundle_vector(t[i].e);
    return out;
}

Integer type_square(const SurfaceParams& p, const MukaiVector& v, const StabilityType& t)
{
    MukaiVector vp = type_residual(v, t);
    return mukai_pairing(p, vp, vp);
}

TypeEnumeration enumerate_types(const SurfaceParams& p, const MukaiVector& v, int r, TypeFlags flags)
{
    check_special_shape(v);
    if (r < -1) throw Error("invalid_argument", "r must be >= -1");
    TypeEnumeration out{r, flags, {}};
    if (r == -1) {
        out.items.push_back({});
        return out;
    }
    // e_1 <= r and sum m <= r+1 bound the search.
    StabilityType cur;
    std::function<void(int, int)> grow = [&](int max_e, int budget) {
        if (!cur.empty() && validate_type(cur, r, flags.refined)) {
            if (!flags.square_filtered || type_square(p, v, cur) >= -2) out.items.push_back(cur);
        }
        for (int e = max_e; e >= 0; --e)
            for (int m = 1; m <= budget; ++m) {
                cur.push_back({e, m});
                grow(e - 1, budget - m);
                cur.pop_back();
            }
    };
    grow(r, r + 1);
    std::sort(out.items.begin(), out.items.end(), [](const StabilityType& a, const StabilityType& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].e != b[i].e) return a[i].e < b[i].e;
            if (a[i].m != b[i].m) return a[i].m < b[i].m;
        }
        return false;
    });
    return out;
}

Integer stratum_dimension(const SurfaceParams& p, const MukaiVector& v, const StabilityType& t)
{
    check_well_formed(t);
    Integer dim = type_square(p, v, t) + 2;
    for (std::size_t j = 0; j < t.size(); ++j) {
        MukaiVector vj = type_residual(v, t, static_cast<int>(j));
        dim += t[j].m * (mukai_pairing(p, vj, line_bundle_vector(t[j].e)) - t[j].m);
    }
    return dim;
}

StabilityType BalancedType::to_type() const
{
    StabilityType t;
    if (m1 > 0) t.push_back({e + 1, m1});
    if (m2 > 0) t.push_back({e, m2});
    return t;
}

std::optional<BalancedType> as_balanced(const StabilityType& t)
{
    check_well_formed(t);
    if (t.size() == 1) return BalancedType{t[0].e, 0, t[0].m};
    if (t.size() == 2 && t[0].e == t[1].e + 1) return BalancedType{t[1].e, t[0].m, t[1].m};
    return std::nullopt;
}

const char* verdict_name(Verdict v)
{
    switch (v) {
        case Verdict::NonEmpty: return "non_empty";
        case Verdict::EmptyByNecessity: return "empty_by_necessity";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

NonemptinessVerdict balanced_nonempty(const SurfaceParams& p, const MukaiVector& v, const BalancedType& t,
                                      DegreeCase dc)
{
    if (t.e < 0 || t.m1 < 0 || t.m2 <= 0)
        throw Error("not_balanced", "balanced type needs e >= 0, m1 >= 0, m2 > 0");
    check_special_shape(v);
    Integer r0 = v.r, s0 = v.s - v.r;
    if (r0 > 0) throw Error("shape_mismatch", "balanced criterion needs r0 <= 0");
    if (dc == DegreeCase::Generic && s0 >= 0) throw Error("shape_mismatch", "generic case needs s0 < 0");
    if (dc == DegreeCase::GenusMinusOne && s0 != 0) throw Error("shape_mismatch", "d = g-1 case needs s0 = 0");

    NonemptinessVerdict out{Verdict::Unknown, type_square(p, v, t.to_type())};
    if (out.square < -2) {
        out.verdict = Verdict::EmptyByNecessity;
        return out;
    }
    Integer total = t.m1 + t.m2;
    bool sufficient = dc == DegreeCase::Generic ? total <= p.k + r0 : (r0 == 0 && total < p.k);
    if (sufficient) out.verdict = Verdict::NonEmpty;
    return out;
}

std::vector<WallPoint> wall_sequence(const StabilityParams& sp, const MukaiVector& v, const StabilityType& t)
{
    check_well_formed(t);
    check_special_shape(v);
    std::vector<WallPoint> walls;
    MukaiVector running = v;
    for (const auto& pair : t) {
        MukaiVector u = line_bundle_vector(pair.e);
        WallPoint wp = wall_on_axis(sp, running, u);
        if (!walls.empty() && !(wp.w < walls.back().w))
            throw Error("non_monotone_walls", "non-monotone wall sequence: " + to_string(wp.w) +
                                                   " after " + to_string(walls.back().w));
        walls.push_back(wp);
        running = running - Integer(pair.m) * u;
    }
    return walls;
}

}  // namespace k3walls
