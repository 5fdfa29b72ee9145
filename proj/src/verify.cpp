#include "k3walls/verify.hpp"

#include "k3walls/chains.hpp"
#include "k3walls/hbn.hpp"
#include "k3walls/lattice.hpp"
#include "k3walls/stability.hpp"
#include "k3walls/strata.hpp"
#include "k3walls/tableaux.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>
#include <tuple>

namespace k3walls {

int worker_count_from_env()
{
    const char* env = std::getenv("K3WALLS_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1) throw Error("invalid_argument", "K3WALLS_THREADS must be a positive integer");
    return static_cast<int>(std::min(n, 256L));
}

namespace {

constexpr std::size_t kKeptFailures = 8;

PropertyResult run_indexed(const char* module, const char* name, std::size_t n, int threads,
                           const std::function<void(std::size_t, Accumulator&)>& f)
{
    std::vector<Accumulator> acc(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                f(i, acc[i]);
            } catch (const std::exception& e) {
                acc[i].check(false, std::string("exception: ") + e.what());
            }
        }
    };
    int pool = std::max(1, std::min<int>(threads, static_cast<int>(n)));
    std::vector<std::thread> ts;
    for (int t = 1; t < pool; ++t) ts.emplace_back(worker);
    worker();
    for (auto& t : ts) t.join();

    PropertyResult out{module, name};
    for (auto& a : acc) {
        out.checked += a.checked;
        out.failed += a.failures.size();
        for (auto& f : a.failures)
            if (out.failures.size() < kKeptFailures) out.failures.push_back(std::move(f));
    }
    return out;
}

std::string tag(std::initializer_list<std::pair<const char*, long>> kv)
{
    std::string s = "(";
    for (const auto& [k, v] : kv) s += std::string(s.size() > 1 ? "," : "") + k + "=" + std::to_string(v);
    return s + ")";
}

std::string show(const MukaiVector& v)
{
    return "(" + v.r.str() + "," + v.x.str() + "," + v.y.str() + "," + v.s.str() + ")";
}

Integer rand_int(std::mt19937_64& rng, long lo, long hi)
{
    return Integer(std::uniform_int_distribution<long>(lo, hi)(rng));
}

MukaiVector rand_vector(std::mt19937_64& rng, long bound)
{
    return {rand_int(rng, -bound, bound), rand_int(rng, -bound, bound), rand_int(rng, -bound, bound),
            rand_int(rng, -bound, bound)};
}

struct GK {
    int g, k;
};

std::vector<GK> gk_grid(int g_lo, int g_max, int k_lo, int k_max)
{
    std::vector<GK> out;
    for (int g = g_lo; g <= g_max; ++g)
        for (int k = k_lo; k <= k_max; ++k) out.push_back({g, k});
    return out;
}

MukaiVector curve_vector(int g, int d) { return {0, 1, 0, 1 + d - g}; }

StabilityType balanced_from_ell(int r, int ell)
{
    EllDecomposition dec = ell_decompose(r, ell);
    return BalancedType{dec.e, dec.m1, dec.m2}.to_type();
}

Integer hbn_dim(int g, int k, int r, int ell, int d) { return g + rho(g, r - ell, d) - ell * Integer(k); }

}  // namespace

namespace props {

PropertyResult pairing_bilinear(int samples, std::uint64_t seed, int threads)
{
    struct Sample {
        int g, k;
        MukaiVector a, b, c;
        Integer x, y;
    };
    std::mt19937_64 rng(seed);
    std::vector<Sample> s;
    for (int i = 0; i < samples; ++i)
        s.push_back({static_cast<int>(rand_int(rng, 3, 60)), static_cast<int>(rand_int(rng, 2, 60)),
                     rand_vector(rng, 1000000), rand_vector(rng, 1000000), rand_vector(rng, 1000000),
                     rand_int(rng, -1000000, 1000000), rand_int(rng, -1000000, 1000000)});
    return run_indexed("lattice", "pairing symmetric and bilinear", s.size(), threads, [&](std::size_t i, Accumulator& acc) {
        const Sample& t = s[i];
        SurfaceParams p(t.g, t.k);
        acc.check(mukai_pairing(p, t.a, t.b) == mukai_pairing(p, t.b, t.a), "symmetry " + show(t.a) + show(t.b));
        acc.check(chi(p, t.a, t.b) == chi(p, t.b, t.a), "chi symmetry " + show(t.a) + show(t.b));
        MukaiVector lin = t.x * t.a + t.y * t.b;
        acc.check(mukai_pairing(p, lin, t.c) == t.x * mukai_pairing(p, t.a, t.c) + t.y * mukai_pairing(p, t.b, t.c),
                  "linearity " + show(t.a) + show(t.b) + show(t.c));
    });
}

PropertyResult discriminant_relation(int samples, std::uint64_t seed, int threads)
{
    std::mt19937_64 rng(seed);
    std::vector<std::tuple<int, int, MukaiVector>> s;
    for (int i = 0; i < samples; ++i)
        s.emplace_back(static_cast<int>(rand_int(rng, 3, 60)), static_cast<int>(rand_int(rng, 2, 60)),
                       rand_vector(rng, 1000000));
    return run_indexed("lattice", "discriminant = square + 2 r^2", s.size(), threads, [&](std::size_t i, Accumulator& acc) {
        const auto& [g, k, v] = s[i];
        SurfaceParams p(g, k);
        acc.check(discriminant(p, v) == mukai_pairing(p, v, v) + 2 * v.r * v.r, "v = " + show(v));
    });
}

PropertyResult gram_signature(int g_max, int k_max, int threads)
{
    auto grid = gk_grid(3, g_max, 2, k_max);
    return run_indexed("lattice", "Gram signature (2,2)", grid.size(), threads, [&](std::size_t i, Accumulator& acc) {
        Signature sig = k3walls::gram_signature(SurfaceParams(grid[i].g, grid[i].k));
        acc.check(sig.positive == 2 && sig.negative == 2 && sig.zero == 0, tag({{"g", grid[i].g}, {"k", grid[i].k}}));
    });
}

PropertyResult spherical_line_bundles(int e_max, int g_max, int k_max, int threads)
{
    auto grid = gk_grid(3, g_max, 2, k_max);
    return run_indexed("lattice", "v(O(eE))^2 = -2", grid.size(), threads, [&](std::size_t i, Accumulator& acc) {
        SurfaceParams p(grid[i].g, grid[i].k);
        for (int e = 0; e <= e_max; ++e) {
            MukaiVector u = line_bundle_vector(e);
            acc.check(mukai_pairing(p, u, u) == -2, tag({{"g", grid[i].g}, {"k", grid[i].k}, {"e", e}}));
        }
    });
}

namespace {

struct SlopeSample {
    int g, k;
    Rational eps, b, w;
    MukaiVector v;
    int n;
};

std::vector<SlopeSample> slope_samples(int samples, std::uint64_t seed, bool rank_zero)
{
    std::mt19937_64 rng(seed);
    std::vector<SlopeSample> s;
    auto rat = [&](long lo, long hi) { return Rational(rand_int(rng, lo, hi), rand_int(rng, 1, 30)); };
    while (static_cast<int>(s.size()) < samples) {
        SlopeSample t{static_cast<int>(rand_int(rng, 3, 20)), static_cast<int>(rand_int(rng, 2, 10)),
                      Rational(rand_int(rng, 1, 20), rand_int(rng, 1, 40)), rat(-40, 40), rat(0, 40),
                      rand_vector(rng, 30), static_cast<int>(rand_int(rng, 1, 20))};
        if (rank_zero) t.v.r = 0;
        s.push_back(t);
    }
    return s;
}

}  // namespace

PropertyResult slope_scaling(int samples, std::uint64_t seed, int threads)
{
    auto s = slope_samples(samples, seed, false);
    return run_indexed("stability", "slope invariant under scaling", s.size(), threads, [&](std::size_t i, Accumulator& acc) {
        const auto& t = s[i];
        StabilityParams sp(SurfaceParams(t.g, t.k), t.eps);
        StabilityPoint pt{t.b, t.w};
        acc.check(slope(sp, pt, Integer(t.n) * t.v) == slope(sp, pt, t.v), "v = " + show(t.v));
    });
}

PropertyResult rank_zero_slope(int samples, std::uint64_t seed, int threads)
{
    auto s = slope_samples(samples, seed, true);
    return run_indexed("stability", "rank-0 slope is s/(c1.H_eps)", s.size(), threads, [&](std::size_t i, Accumulator& acc) {
        const auto& t = s[i];
        StabilityParams sp(SurfaceParams(t.g, t.k), t.eps);
        Rational im = sp.dot(t.v.c1());
        Slope expect = im == 0 ? Slope::inf() : Slope{false, Rational(t.v.s) / im};
        acc.check(slope(sp, {t.b, t.w}, t.v) == expect, "v = " + show(t.v));
        acc.check(slope(sp, {0, 0}, t.v) == expect, "origin, v = " + show(t.v));
    });
}

PropertyResult wall_increasing_in_e(int g_max, int k_max, int threads)
{
    auto grid = gk_grid(3, g_max, 2, k_max);
    return run_indexed("stability", "wall against O(eE) increases with e", grid.size(), threads,
                       [&](std::size_t i, Accumulator& acc) {
                           SurfaceParams p(grid[i].g, grid[i].k);
                           for (int s = -6; s <= -1; ++s) {
                               MukaiVector v{0, 1, 0, s};
                               for (const Rational& eps : {default_epsilon(p, v), Rational(1, 10), Rational(1, 3)}) {
                                   StabilityParams sp(p, eps);
                                   Rational prev = -1;
                                   for (int e = 1; e <= 8; ++e) {
                                       Rational w = wall_on_axis(sp, v, line_bundle_vector(e)).w;
                                       acc.check(w > prev, tag({{"g", grid[i].g}, {"k", grid[i].k}, {"s", s}, {"e", e}}));
                                       prev = w;
                                   }
                               }
                           }
                       });
}

PropertyResult small_degree(int g_max, int k_max, int m_max, int box, int threads)
{
    struct Item {
        int g, k, m;
        Rational frac;
    };
    std::vector<Item> items;
    for (const auto& gk : gk_grid(3, g_max, 2, k_max))
        for (int m = 0; m <= m_max; ++m)
            for (const Rational& f : {Rational(1, 2), Rational(3, 4), Rational(9, 10)}) items.push_back({gk.g, gk.k, m, f});
    return run_indexed("stability", "bounded scan: t in {0,1} below eps_m", items.size(), threads,
                       [&](std::size_t i, Accumulator& acc) {
                           const Item& it = items[i];
                           SurfaceParams p(it.g, it.k);
                           StabilityParams sp(p, epsilon_threshold(p, it.m) * it.frac);
                           SmallDegreeScan scan = small_degree_scan(sp, it.m, box);
                           std::string where = tag({{"g", it.g}, {"k", it.k}, {"m", it.m}}) + " eps=" + to_string(sp.eps);
                           if (scan.violations.empty()) {
                               acc.check(true, where);
                           } else {
                               const ChernClass& c = scan.violations.front();
                               acc.check(false, where + " class (" + std::to_string(c.r) + ", " + std::to_string(c.t) +
                                                    "H+" + std::to_string(c.q) + "E, " + std::to_string(c.s) + ")");
                           }
                       });
}

PropertyResult spherical_monotone(int g_max, int k_max, int threads)
{
    auto grid = gk_grid(3, std::min(g_max, 6), 2, std::min(k_max, 4));
    return run_indexed("stability", "spherical scan monotone in box", grid.size(), threads, [&](std::size_t i, Accumulator& acc) {
        StabilityParams sp(SurfaceParams(grid[i].g, grid[i].k), Rational(1, 10));
        auto b1 = spherical_scan(sp, 1), b2 = spherical_scan(sp, 2);
        std::string where = tag({{"g", grid[i].g}, {"k", grid[i].k}});
        acc.check(b1 && b2 && *b2 <= *b1, where);
        acc.check(!spherical_scan(sp, 0), where + " box 0");
    });
}

PropertyResult worked_walls()
{
    Accumulator acc;
    SurfaceParams p(3, 2);
    StabilityParams sp(p, Rational(1, 10));
    MukaiVector v{0, 1, 0, -1};
    acc.check(wall_on_axis(sp, v, line_bundle_vector(1)).w == Rational(25, 132), "wall 25/132");
    acc.check(wall_on_axis(sp, v, line_bundle_vector(2)).w == Rational(25, 66), "wall 25/66");
    acc.check(slope(sp, {0, 7}, v) == Slope{false, Rational(-5, 12)}, "slope -5/12");
    Projection pr = projection(sp, {1, 0, 1, 1});
    acc.check(pr.b == Rational(5, 11) && pr.w == 0, "projection (5/11, 0)");
    acc.check(epsilon_threshold(p, 0) == Rational(2, 5), "eps_0 = 2/5");
    PropertyResult out{"stability", "worked wall values", acc.checked, acc.failures.size(), acc.failures};
    return out;
}

PropertyResult dimension_identity(int g_max, int k_max, int r_max, int threads)
{
    auto grid = gk_grid(3, g_max, 2, k_max);
    return run_indexed("strata", "balanced stratum dimension = g + rho(g,r-l,d) - lk", grid.size(), threads,
                       [&](std::size_t i, Accumulator& acc) {
                           const int g = grid[i].g, k = grid[i].k;
                           SurfaceParams p(g, k);
                           for (int d = 0; d <= g - 1; ++d)
                               for (int r = 0; r <= r_max; ++r)
                                   for (int ell = std::max(0, r + 1 - k); ell <= r; ++ell)
                                       acc.check(stratum_dimension(p, curve_vector(g, d), balanced_from_ell(r, ell)) ==
                                                     hbn_dim(g, k, r, ell, d),
                                                 tag({{"g", g}, {"k", k}, {"d", d}, {"r", r}, {"ell", ell}}));
                       });
}

namespace {

struct GKDR {
    int g, k, d, r;
};

std::vector<GKDR> gkdr_grid(int g_max, int k_max, int r_max)
{
    std::vector<GKDR> out;
    for (const auto& gk : gk_grid(3, g_max, 2, k_max))
        for (int d = 0; d <= gk.g - 1; ++d)
            for (int r = 0; r <= r_max; ++r) out.push_back({gk.g, gk.k, d, r});
    return out;
}

std::string gkdr_tag(const GKDR& t) { return tag({{"g", t.g}, {"k", t.k}, {"d", t.d}, {"r", t.r}}); }

long sum_me(const StabilityType& t)
{
    long s = 0;
    for (const auto& p : t) s += static_cast<long>(p.m) * (p.e + 1);
    return s;
}

}  // namespace

PropertyResult dimension_general(int g_max, int k_max, int r_max, int threads)
{
    auto grid = gkdr_grid(g_max, k_max, r_max);
    return run_indexed("strata", "dimension identity when r+1 = sum m(e+1)", grid.size(), threads,
                       [&](std::size_t i, Accumulator& acc) {
                           const GKDR& t = grid[i];
                           SurfaceParams p(t.g, t.k);
                           auto en = enumerate_types(p, curve_vector(t.g, t.d), t.r, {});
                           for (const auto& ty : en.items) {
                               if (sum_me(ty) != t.r + 1) continue;
                               int ell = type_ell(ty, t.r);
                               acc.check(stratum_dimension(p, curve_vector(t.g, t.d), ty) == hbn_dim(t.g, t.k, t.r, ell, t.d),
                                         gkdr_tag(t));
                           }
                       });
}

PropertyResult dimension_upper_bound(int g_max, int k_max, int r_max, int threads)
{
    auto grid = gkdr_grid(g_max, k_max, r_max);
    return run_indexed("strata", "stratum dimension <= g + rho(g,r-l,d) - lk", grid.size(), threads,
                       [&](std::size_t i, Accumulator& acc) {
                           const GKDR& t = grid[i];
                           SurfaceParams p(t.g, t.k);
                           auto en = enumerate_types(p, curve_vector(t.g, t.d), t.r, {});
                           for (const auto& ty : en.items) {
                               int ell = type_ell(ty, t.r);
                               acc.check(stratum_dimension(p, curve_vector(t.g, t.d), ty) <= hbn_dim(t.g, t.k, t.r, ell, t.d),
                                         gkdr_tag(t));
                           }
                       });
}

PropertyResult nonexistence(int g_max, int k_max, int r_max, int threads)
{
    auto grid = gkdr_grid(g_max, k_max, r_max);
    return run_indexed("strata", "rho_k < 0 forces every stratum empty", grid.size(), threads,
                       [&](std::size_t i, Accumulator& acc) {
                           const GKDR& t = grid[i];
                           if (rho_k(t.g, t.k, t.r, t.d).value >= 0) return;
                           SurfaceParams p(t.g, t.k);
                           MukaiVector v = curve_vector(t.g, t.d);
                           auto en = enumerate_types(p, v, t.r, {});
                           for (const auto& ty : en.items) {
                               int ell = type_ell(ty, t.r);
                               acc.check(rho(t.g, t.r - ell, t.d) - ell * Integer(t.k) < 0, gkdr_tag(t) + " enumerated type");
                           }
                           DegreeCase dc = t.d == t.g - 1 ? DegreeCase::GenusMinusOne : DegreeCase::Generic;
                           for (int ell = std::max(0, t.r + 1 - t.k); ell <= t.r; ++ell) {
                               EllDecomposition dec = ell_decompose(t.r, ell);
                               BalancedType bt{dec.e, dec.m1, dec.m2};
                               bool listed = std::find(en.items.begin(), en.items.end(), bt.to_type()) != en.items.end();
                               Verdict vd = balanced_nonempty(p, v, bt, dc).verdict;
                               acc.check(!listed || vd == Verdict::EmptyByNecessity,
                                         gkdr_tag(t) + " balanced ell=" + std::to_string(ell));
                           }
                       });
}

PropertyResult empty_iff_filtered(int g_max, int k_max, int r_max, int threads)
{
    auto grid = gkdr_grid(g_max, k_max, r_max);
    return run_indexed("strata", "EmptyByNecessity iff dropped by square filter", grid.size(), threads,
                       [&](std::size_t i, Accumulator& acc) {
                           const GKDR& t = grid[i];
                           SurfaceParams p(t.g, t.k);
                           MukaiVector v = curve_vector(t.g, t.d);
                           auto all = enumerate_types(p, v, t.r, {});
                           auto kept = enumerate_types(p, v, t.r, {false, true});
                           DegreeCase dc = t.d == t.g - 1 ? DegreeCase::GenusMinusOne : DegreeCase::Generic;
                           for (const auto& ty : all.items) {
                               auto bt = as_balanced(ty);
                               if (!bt) continue;
                               bool dropped = std::find(kept.items.begin(), kept.items.end(), ty) == kept.items.end();
                               bool empty = balanced_nonempty(p, v, *bt, dc).verdict == Verdict::EmptyByNecessity;
                               acc.check(dropped == empty, gkdr_tag(t));
                           }
                       });
}

PropertyResult random_wall_sequences(int samples, std::uint64_t seed, int threads)
{
    struct Triple {
        int g, k;
        MukaiVector v;
        StabilityType t;
        Rational eps;
    };
    std::mt19937_64 rng(seed);
    std::vector<Triple> s;
    while (static_cast<int>(s.size()) < samples) {
        int g = static_cast<int>(rand_int(rng, 3, 14)), k = static_cast<int>(rand_int(rng, 2, 7));
        int d = static_cast<int>(rand_int(rng, 0, g - 2)), r = static_cast<int>(rand_int(rng, 0, 5));
        SurfaceParams p(g, k);
        MukaiVector v = curve_vector(g, d);
        auto en = enumerate_types(p, v, r, {false, true});
        if (en.items.empty()) continue;
        const StabilityType& t = en.items[static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(en.items.size()) - 1))];
        long q = static_cast<long>(rand_int(rng, 2, 12));
        Rational frac(rand_int(rng, 1, q - 1), q);
        s.push_back({g, k, v, t, default_epsilon(p, v) * frac});
    }
    return run_indexed("strata", "wall sequences strictly decreasing", s.size(), threads, [&](std::size_t i, Accumulator& acc) {
        const Triple& t = s[i];
        StabilityParams sp(SurfaceParams(t.g, t.k), t.eps);
        auto walls = wall_sequence(sp, t.v, t.t);
        bool ok = walls.size() == t.t.size();
        for (std::size_t j = 1; j < walls.size(); ++j) ok = ok && walls[j].w < walls[j - 1].w;
        acc.check(ok, tag({{"g", t.g}, {"k", t.k}}) + " v=" + show(t.v));
    });
}

PropertyResult rho_k_bounds(int g_max, int k_max, int r_max, int threads)
{
    auto grid = gk_grid(1, g_max, 2, k_max);
    return run_indexed("hbn", "rho_k >= rho, equality iff 0 in argmax, non-increasing in r", grid.size(), threads,
                       [&](std::size_t i, Accumulator& acc) {
                           const int g = grid[i].g, k = grid[i].k;
                           for (int d = 0; d <= g - 1; ++d) {
                               RhoK prev;
                               for (int r = 0; r <= r_max; ++r) {
                                   RhoK cur = rho_k(g, k, r, d);
                                   Integer classical = rho(g, r, d);
                                   bool zero_max = !cur.argmax.empty() && cur.argmax.front() == 0;
                                   std::string where = tag({{"g", g}, {"k", k}, {"d", d}, {"r", r}});
                                   acc.check(cur.value >= classical, where + " rho_k >= rho");
                                   acc.check((cur.value == classical) == zero_max, where + " equality iff ell=0 maximal");
                                   if (r > 0) acc.check(cur.value <= prev.value, where + " monotone in r");
                                   prev = cur;
                               }
                           }
                       });
}

PropertyResult ell_roundtrip(int r_max)
{
    Accumulator acc;
    for (int r = 0; r <= r_max; ++r)
        for (int ell = 0; ell <= r; ++ell) {
            EllDecomposition dec = ell_decompose(r, ell);
            bool ok = (r + 1) - (dec.m1 + dec.m2) == ell && r + 1 == dec.m1 * (dec.e + 2) + dec.m2 * (dec.e + 1) &&
                      ell == dec.e * (r + 1 - ell) + dec.m1 && dec.m1 >= 0 && dec.m1 <= r - ell && dec.m2 > 0 && dec.e >= 0;
            acc.check(ok, tag({{"r", r}, {"ell", ell}}));
        }
    return {"hbn", "ell decomposition round trip", acc.checked, acc.failures.size(), acc.failures};
}

PropertyResult degeneracy_identities(int g_max, int k_max, int r_max, int threads)
{
    auto grid = gk_grid(3, g_max, 2, k_max);
    return run_indexed("hbn", "degeneracy and rho shift identities", grid.size(), threads, [&](std::size_t i, Accumulator& acc) {
        const int g = grid[i].g, k = grid[i].k;
        for (int d = 0; d <= g - 1; ++d)
            for (int r = 0; r <= r_max; ++r)
                for (int ell = std::max(0, r + 1 - k); ell <= r; ++ell) {
                    std::string where = tag({{"g", g}, {"k", k}, {"d", d}, {"r", r}, {"ell", ell}});
                    RhoShift id = rho_shift(g, k, d, r, ell);
                    acc.check(id.lhs == id.rhs, where + " rho shift");
                    if (ell >= r + 2 - k) {
                        DegeneracyDims dd = degeneracy_dims(g, k, d, r, ell);  // throws on mismatch
                        acc.check(dd.expected_dim == rho(g, r - ell, d) - ell * Integer(k), where + " degeneracy");
                    }
                }
    });
}

PropertyResult splitting_correspondence(int g_max, int k_max, int r_max, int threads)
{
    auto grid = gkdr_grid(g_max, k_max, r_max);
    return run_indexed("hbn", "splitting non-negative part matches balanced type", grid.size(), threads,
                       [&](std::size_t i, Accumulator& acc) {
                           const GKDR& t = grid[i];
                           for (int ell = std::max(0, t.r + 2 - t.k); ell <= t.r; ++ell) {
                               EllDecomposition dec = ell_decompose(t.r, ell);
                               SplittingType st;
                               if (dec.m1 > 0) st.push_back({dec.e + 1, dec.m1});
                               st.push_back({dec.e, dec.m2});
                               Integer q = t.k - (t.r + 1 - ell);
                               Integer total = Integer(t.d + 1 - t.g - t.k) - ell;
                               Integer base = floor_div(total, q), rem = total - base * q;
                               if (rem > 0) st.push_back({base + 1, rem});
                               if (q - rem > 0) st.push_back({base, q - rem});
                               BalancedData bd = balanced_correspondence(splitting_nonneg_part(t.g, t.k, t.d, st));
                               acc.check(bd == BalancedData{dec.e, dec.m1, dec.m2}, gkdr_tag(t) + " ell=" + std::to_string(ell));
                           }
                       });
}

namespace {

std::vector<TableauParams> tableau_grid(int g_lo, int g_max, int k_max, int r_max, int d_lo, int cells_max)
{
    std::vector<TableauParams> out;
    for (int g = g_lo; g <= g_max; ++g)
        for (int k = 2; k <= k_max; ++k)
            for (int r = 0; r <= r_max; ++r)
                for (int d = d_lo; d <= g - 1; ++d) {
                    TableauParams p{g, k, r, d};
                    if (p.cols() >= 1 && p.rows() * p.cols() <= cells_max) out.push_back(p);
                }
    return out;
}

std::string tp_tag(const TableauParams& p) { return tag({{"g", p.g}, {"k", p.k}, {"r", p.r}, {"d", p.d}}); }

}  // namespace

PropertyResult tableaux_vs_naive(int g_max, int k_max, int cells_max, int threads)
{
    auto grid = tableau_grid(2, g_max, k_max, 3, 0, cells_max);
    return run_indexed("tableaux", "pruned search equals naive enumeration", grid.size(), threads,
                       [&](std::size_t i, Accumulator& acc) {
                           OmittedResult a = max_omitted(grid[i]), b = max_omitted_naive(grid[i]);
                           acc.check(a.feasible == b.feasible && (!a.feasible || (a.omitted == b.omitted && a.witness == b.witness)),
                                     tp_tag(grid[i]));
                       });
}

PropertyResult tableaux_vs_formula(int g_max, int k_max, int r_max, int cells_max, int threads)
{
    auto grid = tableau_grid(3, g_max, k_max, r_max, 1, cells_max);
    return run_indexed("tableaux", "max omitted labels vs rho_k", grid.size(), threads, [&](std::size_t i, Accumulator& acc) {
        const TableauParams& p = grid[i];
        OmittedResult res = max_omitted(p);
        Integer rk = rho_k(p.g, p.k, p.r, p.d).value;
        std::string where = tp_tag(p);
        if (res.feasible) {
            acc.check(res.omitted <= rk, where + " omitted <= rho_k");
            acc.check(rk < 0 || res.omitted == rk, where + " equality");
            acc.check(is_valid(p, res.witness, p.g), where + " witness valid");
        } else {
            acc.check(rk < 0, where + " infeasible needs rho_k < 0");
        }
    });
}

PropertyResult chains_verify(int g_max, int k_max, int threads)
{
    struct Item {
        int g, k, r, d;
    };
    std::vector<Item> items;
    for (int g = 3; g <= g_max; ++g)
        for (int k = 2; k <= k_max; ++k)
            for (int r = 0; r + 2 <= k; ++r)
                for (int d = r; d <= g - 1; ++d)
                    if (rho(g, r, d) >= 0) items.push_back({g, k, r, d});
    return run_indexed("chains", "chain construction verifies", items.size(), threads, [&](std::size_t i, Accumulator& acc) {
        const Item& it = items[i];
        ChainCheck chk = verify_chain(build_chain(it.g, it.k, it.r, it.d));
        std::string where = tag({{"g", it.g}, {"k", it.k}, {"r", it.r}, {"d", it.d}});
        acc.check(chk.ok(), where + (chk.ok() ? "" : ": " + chk.failures.front()));
        acc.check(chk.total_adj_rho == rho(it.g, it.r, it.d), where + " total");
    });
}

PropertyResult complement_involution(int samples, std::uint64_t seed, int threads)
{
    std::mt19937_64 rng(seed);
    std::vector<std::tuple<int, int, RamificationSequence>> s;
    for (int i = 0; i < samples; ++i) {
        int r = static_cast<int>(rand_int(rng, 0, 6)), d = r + static_cast<int>(rand_int(rng, 0, 9));
        RamificationSequence a(r + 1);
        for (auto& x : a) x = static_cast<int>(rand_int(rng, 0, d - r));
        std::sort(a.begin(), a.end());
        s.emplace_back(r, d, a);
    }
    return run_indexed("chains", "complement is an involution", s.size(), threads, [&](std::size_t i, Accumulator& acc) {
        const auto& [r, d, a] = s[i];
        RamificationSequence c = complement(r, d, a);
        check_sequence(r, d, c);
        acc.check(complement(r, d, c) == a, tag({{"r", r}, {"d", d}}));
    });
}

}  // namespace props

std::vector<PropertyResult> run_verify(const std::string& suite, const VerifyOptions& opt)
{
    const int g = opt.max_g, k = opt.max_k, th = opt.threads;
    if (g < 3 || k < 2) throw Error("invalid_argument", "verify needs max-g >= 3 and max-k >= 2");
    static const std::vector<std::string> known{"lattice", "stability", "strata", "hbn", "tableaux", "chains", "all"};
    if (std::find(known.begin(), known.end(), suite) == known.end())
        throw Error("invalid_argument", "unknown suite '" + suite + "'");
    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    std::vector<PropertyResult> out;
    if (want("lattice")) {
        out.push_back(props::pairing_bilinear(1000, 11, th));
        out.push_back(props::discriminant_relation(10000, 12, th));
        out.push_back(props::gram_signature(g, k, th));
        out.push_back(props::spherical_line_bundles(100, g, k, th));
    }
    if (want("stability")) {
        out.push_back(props::slope_scaling(500, 21, th));
        out.push_back(props::rank_zero_slope(500, 22, th));
        out.push_back(props::wall_increasing_in_e(g, k, th));
        out.push_back(props::small_degree(std::min(g, 8), std::min(k, 5), 4, 12, th));
        out.push_back(props::spherical_monotone(g, k, th));
        out.push_back(props::worked_walls());
    }
    if (want("strata")) {
        out.push_back(props::dimension_identity(g, k, 6, th));
        out.push_back(props::dimension_general(g, k, 6, th));
        out.push_back(props::dimension_upper_bound(g, k, 6, th));
        out.push_back(props::nonexistence(g, k, 6, th));
        out.push_back(props::empty_iff_filtered(g, k, 6, th));
        out.push_back(props::random_wall_sequences(100, 31, th));
    }
    if (want("hbn")) {
        out.push_back(props::rho_k_bounds(g, k, 8, th));
        out.push_back(props::ell_roundtrip(40));
        out.push_back(props::degeneracy_identities(g, k, 6, th));
        out.push_back(props::splitting_correspondence(g, k, 6, th));
    }
    if (want("tableaux")) {
        out.push_back(props::tableaux_vs_naive(std::min(g, 7), k, 9, th));
        out.push_back(props::tableaux_vs_formula(g, k, 3, 12, th));
    }
    if (want("chains")) {
        out.push_back(props::chains_verify(std::min(g, 10), std::min(k, 6), th));
        out.push_back(props::complement_involution(500, 41, th));
    }
    return out;
}

}  // namespace k3walls
