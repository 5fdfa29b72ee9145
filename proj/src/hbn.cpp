#include "k3walls/hbn.hpp"

#include <algorithm>
#include <map>

namespace k3walls {

Integer rho(const Integer& g, const Integer& r, const Integer& d) { return g - (r + 1) * (g - d + r); }

RhoK rho_k(const Integer& g, const Integer& k, int r, const Integer& d)
{
    if (r < 0) throw Error("invalid_argument", "rho_k needs r >= 0");
    RhoK out;
    for (int ell = 0; ell <= r; ++ell) {
        Integer v = rho(g, r - ell, d) - ell * k;
        if (out.argmax.empty() || v > out.value) {
            out.value = v;
            out.argmax = {ell};
        } else if (v == out.value) {
            out.argmax.push_back(ell);
        }
    }
    return out;
}

EllDecomposition ell_decompose(int r, int ell)
{
    if (ell < 0 || ell > r)
        throw Error("out_of_range", "ell_decompose needs 0 <= ell <= r, got r=" + std::to_string(r) +
                                        " ell=" + std::to_string(ell));
    int free = r + 1 - ell;
    int e = ell / free;
    int m1 = ell - e * free;
    return {ell, e, m1, free - m1};
}

static void check_degeneracy_range(const Integer& g, const Integer& k, const Integer& d, int r, int ell)
{
    Integer lo = std::max(Integer(0), Integer(r + 2) - k);
    if (ell < lo || ell > r)
        throw Error("out_of_range", "need max{0, r+2-k} <= ell <= r");
    if (d > g - 1) throw Error("out_of_range", "need d <= g-1");
}

DegeneracyDims degeneracy_dims(const Integer& g, const Integer& k, const Integer& d, int r, int ell)
{
    check_degeneracy_range(g, k, d, r, ell);
    EllDecomposition dec = ell_decompose(r, ell);
    const int e = dec.e, m1 = dec.m1;
    DegeneracyDims out;
    out.s = g - d + r + e * (k - r - 1 + ell);
    out.rkE = g + m1 - 1 + (e + 1) * k - d;
    out.rkF = g + m1 + (e + 2) * k - d - 1;
    // rkF - 2 rkE + s simplifies to m1 + m2; the codimension factor that makes the
    // identity hold is m2 = r - ell - m1 + 1, so that is what is used here.
    out.expected_dim = rho(g, m1 - 1, d - (e + 1) * k) - out.s * (r - ell - m1 + 1);
    Integer target = rho(g, r - ell, d) - ell * k;
    if (out.expected_dim != target)
        throw Error("identity_violation", "expected dimension " + out.expected_dim.str() +
                                              " differs from rho(g,r-ell,d) - ell k = " + target.str());
    return out;
}

RhoShift rho_shift(const Integer& g, const Integer& k, const Integer& d, int r, int ell)
{
    EllDecomposition dec = ell_decompose(r, ell);
    const int e = dec.e, m1 = dec.m1;
    return {rho(g, m1 - 1, d - (e + 1) * k),
            rho(g, r - ell, d) - ell * k + (r - ell - m1 + 1) * (g + e * k - d + r - ell + m1)};
}

std::vector<std::string> h0_conditions(int r, int ell)
{
    EllDecomposition dec = ell_decompose(r, ell);
    auto tw = [](int a) { return a == 0 ? std::string("L") : "L(-" + std::to_string(a) + "A)"; };
    return {"h0(" + tw(dec.e + 2) + ") = 0", "h0(" + tw(dec.e + 1) + ") = " + std::to_string(dec.m1),
            "h0(" + tw(dec.e) + ") = " + std::to_string(2 * dec.m1 + dec.m2),
            "h0(L) = " + std::to_string(r + 1)};
}

Integer pencil_power_h0(const Integer& g, const Integer& k, const Integer& a)
{
    if (a < 0) throw Error("invalid_argument", "pencil_power_h0 needs a >= 0");
    return std::max(Integer(a * k + 1 - g), Integer(a + 1));
}

SplittingType splitting_nonneg_part(const Integer& g, const Integer& k, const Integer& d, const SplittingType& st)
{
    if (d > g - 1) throw Error("out_of_range", "splitting types are handled for d <= g-1");
    Integer rank = 0, degree = 0;
    for (std::size_t i = 0; i < st.size(); ++i) {
        if (st[i].n <= 0) throw Error("ill_formed_splitting", "multiplicities must be positive");
        if (i > 0 && st[i].f >= st[i - 1].f) throw Error("ill_formed_splitting", "f must be strictly decreasing");
        rank += st[i].n;
        degree += st[i].f * st[i].n;
    }
    if (rank != k) throw Error("rank_mismatch", "rank mismatch: sum n = " + rank.str() + ", k = " + k.str());
    if (degree != d + 1 - g - k)
        throw Error("degree_mismatch", "degree mismatch: sum f n = " + degree.str() + ", d+1-g-k = " +
                                           Integer(d + 1 - g - k).str());
    if (st.back().f >= 0) throw Error("no_negative_summand", "no negative summand");
    SplittingType out;
    for (const auto& p : st)
        if (p.f >= 0) out.push_back(p);
    return out;
}

BalancedData balanced_correspondence(const SplittingType& nonneg)
{
    std::map<Integer, Integer> levels;
    for (const auto& p : nonneg) {
        if (p.f < 0) throw Error("invalid_argument", "non-negative part expected");
        if (p.n <= 0) throw Error("ill_formed_splitting", "multiplicities must be positive");
        levels[p.f] += p.n;
    }
    if (levels.empty()) throw Error("not_balanced", "not balanced: empty non-negative part");
    if (levels.size() == 1) return {levels.begin()->first, 0, levels.begin()->second};
    if (levels.size() == 2) {
        auto lo = levels.begin(), hi = std::next(lo);
        if (hi->first == lo->first + 1) return {lo->first, hi->second, lo->second};
    }
    throw Error("not_balanced", "not balanced: values gap or span more than two levels");
}

BalancedData balanced_correspondence(const std::vector<Integer>& values)
{
    SplittingType st;
    for (const auto& v : values) st.push_back({v, 1});
    return balanced_correspondence(st);
}

}  // namespace k3walls
