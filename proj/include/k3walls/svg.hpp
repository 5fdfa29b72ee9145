#pragma once

#include "k3walls/stability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3walls {

struct Viewport {
    Rational bmin, bmax, wmin, wmax;
};

// "bmin,bmax,wmin,wmax"
Viewport parse_viewport(const std::string& s);

struct PlottedWall {
    Integer e;
    WallLine line;
    bool visible;
};

struct Plot {
    std::string svg;
    std::vector<PlottedWall> walls;
    std::optional<Projection> point;
    std::vector<std::string> warnings;
};

// 12 significant digits.
std::string format_coord(const Rational& q);

// Parabola 2w = b^2, one line per wall W(v, O(eE)), and Pi_eps(v) for r != 0.
Plot plot_walls(const StabilityParams& sp, const MukaiVector& v, const std::vector<Integer>& es, const Viewport& vp);

}  // namespace k3walls
