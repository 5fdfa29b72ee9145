#include "k3walls/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace k3walls {

Viewport parse_viewport(const std::string& s)
{
    std::vector<Rational> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(parse_rational(item));
    if (parts.size() != 4) throw Error("invalid_argument", "viewport must be 'bmin,bmax,wmin,wmax'");
    Viewport vp{parts[0], parts[1], parts[2], parts[3]};
    if (vp.bmin >= vp.bmax || vp.wmin >= vp.wmax) throw Error("invalid_argument", "viewport ranges must be non-empty");
    return vp;
}

std::string format_coord(const Rational& q)
{
    if (q == 0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(q));
    return buf;
}

namespace {

struct Pt {
    Rational b, w;
};

// Segment of A w + B b + C = 0 inside the viewport, if any.
std::optional<std::pair<Pt, Pt>> clip(const WallLine& l, const Viewport& vp)
{
    std::vector<Pt> pts;
    if (l.A != 0)
        for (const Rational& b : {vp.bmin, vp.bmax}) {
            Rational w = -(l.B * b + l.C) / l.A;
            if (w >= vp.wmin && w <= vp.wmax) pts.push_back({b, w});
        }
    if (l.B != 0)
        for (const Rational& w : {vp.wmin, vp.wmax}) {
            Rational b = -(l.A * w + l.C) / l.B;
            if (b >= vp.bmin && b <= vp.bmax) pts.push_back({b, w});
        }
    std::sort(pts.begin(), pts.end(), [](const Pt& x, const Pt& y) { return x.b < y.b || (x.b == y.b && x.w < y.w); });
    if (pts.size() < 2 || (pts.front().b == pts.back().b && pts.front().w == pts.back().w)) return std::nullopt;
    return std::make_pair(pts.front(), pts.back());
}

std::string pt(const Rational& b, const Rational& w) { return format_coord(b) + "," + format_coord(-w); }

}  // namespace

Plot plot_walls(const StabilityParams& sp, const MukaiVector& v, const std::vector<Integer>& es, const Viewport& vp)
{
    Plot plot;
    const Rational width = vp.bmax - vp.bmin, height = vp.wmax - vp.wmin;
    std::ostringstream body;

    // y grows downwards in SVG, so every w is drawn as -w.
    const int samples = 200;
    body << "  <path class=\"parabola\" fill=\"none\" stroke=\"#444\" d=\"M";
    for (int i = 0; i <= samples; ++i) {
        Rational b = vp.bmin + width * Rational(i, samples);
        body << (i ? " L" : "") << ' ' << pt(b, b * b / 2);
    }
    body << "\"/>\n";

    for (const Integer& e : es) {
        MukaiVector u = line_bundle_vector(e);
        WallLine line = numerical_wall_line(sp, v, u);
        if (line.A == 0 && line.B == 0) {
            plot.warnings.push_back("no wall between v and O(" + e.str() + "E): slopes never agree or always agree");
            continue;
        }
        auto seg = clip(line, vp);
        plot.walls.push_back({e, line, seg.has_value()});
        if (!seg) {
            plot.warnings.push_back("wall against O(" + e.str() + "E) misses the viewport");
            continue;
        }
        body << "  <line class=\"wall\" data-e=\"" << e << "\" stroke=\"#c22\" x1=\"" << format_coord(seg->first.b)
             << "\" y1=\"" << format_coord(-seg->first.w) << "\" x2=\"" << format_coord(seg->second.b) << "\" y2=\""
             << format_coord(-seg->second.w) << "\"/>\n";
    }
    if (es.empty()) plot.warnings.push_back("no walls requested; diagram shows the parabola only");

    if (v.r != 0) {
        plot.point = projection(sp, v);
        body << "  <circle class=\"projection\" fill=\"#16c\" cx=\"" << format_coord(plot.point->b) << "\" cy=\""
             << format_coord(-plot.point->w) << "\" r=\"" << format_coord(width / 100) << "\"/>\n";
    }

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\""
        << format_coord(Rational(600) * height / width) << "\" viewBox=\"" << format_coord(vp.bmin) << ' '
        << format_coord(-vp.wmax) << ' ' << format_coord(width) << ' ' << format_coord(height) << "\">\n"
        << "  <g stroke-width=\"" << format_coord(width / 300) << "\">\n"
        << "  <path class=\"axis\" fill=\"none\" stroke=\"#999\" d=\"M 0," << format_coord(-vp.wmin) << " L 0,"
        << format_coord(-vp.wmax) << "\"/>\n"
        << body.str() << "  </g>\n</svg>\n";
    plot.svg = svg.str();
    return plot;
}

}  // namespace k3walls
