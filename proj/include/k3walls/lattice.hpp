#pragma once

#include "k3walls/numeric.hpp"

#include <array>

namespace k3walls {

// Lattice Z.H + Z.E with H^2 = 2g-2, E^2 = 0, H.E = k.
struct SurfaceParams {
    Integer g;
    Integer k;

    SurfaceParams(Integer g_, Integer k_);

    Integer h2() const { return 2 * g - 2; }
};

struct PicClass {
    Integer x;  // coefficient of H
    Integer y;  // coefficient of E
};

// (r, xH + yE, s); Chern character is (r, xH + yE, s - r).
struct MukaiVector {
    Integer r, x, y, s;

    PicClass c1() const { return {x, y}; }
    Integer ch2() const { return s - r; }

    MukaiVector operator+(const MukaiVector& o) const { return {r + o.r, x + o.x, y + o.y, s + o.s}; }
    MukaiVector operator-(const MukaiVector& o) const { return {r - o.r, x - o.x, y - o.y, s - o.s}; }
    bool operator==(const MukaiVector& o) const = default;
};

MukaiVector operator*(const Integer& n, const MukaiVector& v);

Integer intersection(const SurfaceParams& p, const PicClass& a, const PicClass& b);
Integer mukai_pairing(const SurfaceParams& p, const MukaiVector& v1, const MukaiVector& v2);
Integer discriminant(const SurfaceParams& p, const MukaiVector& v);
Integer chi(const SurfaceParams& p, const MukaiVector& v1, const MukaiVector& v2);

// v(O_X(eE)) = (1, eE, 1).
MukaiVector line_bundle_vector(const Integer& e);

using Gram = std::array<std::array<Integer, 4>, 4>;
Gram gram_matrix(const SurfaceParams& p);

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

// Exact: characteristic polynomial by Faddeev-LeVerrier, then Descartes' rule
// (exact for a real-rooted polynomial).
Signature gram_signature(const SurfaceParams& p);

}  // namespace k3walls
