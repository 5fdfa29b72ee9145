#include "k3walls/lattice.hpp"

#include <vector>

namespace k3walls {

SurfaceParams::SurfaceParams(Integer g_, Integer k_) : g(std::move(g_)), k(std::move(k_))
{
    if (g < 3) throw Error("invalid_argument", "genus must be >= 3, got " + g.str());
    if (k < 2) throw Error("invalid_argument", "pencil degree must be >= 2, got " + k.str());
}

MukaiVector operator*(const Integer& n, const MukaiVector& v) { return {n * v.r, n * v.x, n * v.y, n * v.s}; }

Integer intersection(const SurfaceParams& p, const PicClass& a, const PicClass& b)
{
    return a.x * b.x * p.h2() + (a.x * b.y + b.x * a.y) * p.k;
}

Integer mukai_pairing(const SurfaceParams& p, const MukaiVector& v1, const MukaiVector& v2)
{
    return intersection(p, v1.c1(), v2.c1()) - v1.r * v2.s - v2.r * v1.s;
}

Integer discriminant(const SurfaceParams& p, const MukaiVector& v)
{
    return intersection(p, v.c1(), v.c1()) - 2 * v.r * v.ch2();
}

Integer chi(const SurfaceParams& p, const MukaiVector& v1, const MukaiVector& v2)
{
    return -mukai_pairing(p, v1, v2);
}

MukaiVector line_bundle_vector(const Integer& e)
{
    if (e < 0) throw Error("invalid_argument", "line_bundle_vector needs e >= 0, got " + e.str());
    return {1, 0, e, 1};
}

Gram gram_matrix(const SurfaceParams& p)
{
    const std::array<MukaiVector, 4> basis{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    Gram m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = mukai_pairing(p, basis[i], basis[j]);
    return m;
}

namespace {

int sign_changes(const std::vector<Integer>& c)
{
    int changes = 0, last = 0;
    for (const auto& x : c) {
        int s = x.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

Signature gram_signature(const SurfaceParams& p)
{
    const int n = 4;
    Gram a = gram_matrix(p);
    // Faddeev-LeVerrier: c[n] = 1, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    std::array<std::array<Rational, 4>, 4> m{}, am{};
    for (int step = 1; step <= n; ++step) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational acc = 0;
                for (int t = 0; t < n; ++t) acc += Rational(a[i][t]) * m[t][j];
                am[i][j] = acc;
            }
        for (int i = 0; i < n; ++i) {
            m[i] = am[i];
            m[i][i] += c[n - step + 1];
        }
        Rational tr = 0;
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) tr += Rational(a[i][t]) * m[t][i];
        c[n - step] = -tr / step;
    }
    std::vector<Integer> coeffs, reflected;
    for (int i = 0; i <= n; ++i) {
        if (den(c[i]) != 1) throw Error("internal", "non-integral characteristic polynomial");
        coeffs.push_back(num(c[i]));
        reflected.push_back(i % 2 ? Integer(-num(c[i])) : num(c[i]));
    }
    Signature sig;
    for (int i = 0; i <= n && coeffs[i] == 0; ++i) ++sig.zero;
    sig.positive = sign_changes(coeffs);
    sig.negative = sign_changes(reflected);
    return sig;
}

}  // namespace k3walls
