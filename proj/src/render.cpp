#include "wpat/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace wpat {

namespace {

constexpr double kScale = 24.0; // user units per lattice unit
const double kSqrt3Half = std::sqrt(3.0) / 2.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v + 0.0); // normalize -0
    return buf;
}

// Projected, scaled, y-flipped canvas coordinates of a lattice point.
std::pair<double, double> canvas(Int a1, Int a2) {
    const double x = static_cast<double>(a1) + static_cast<double>(a2) / 2.0;
    const double y = static_cast<double>(a2) * kSqrt3Half;
    return {kScale * x, -kScale * y};
}

std::pair<double, double> canvas(const DominantWeight& w) {
    return canvas(w.coeff(1), w.coeff(2));
}

struct Box {
    Int lo1, hi1, lo2, hi2; // lattice-coordinate bounds, margin included
};

void line(std::ostringstream& os, std::pair<double, double> a, std::pair<double, double> b,
          const char* style) {
    os << "  <line x1=\"" << fmt(a.first) << "\" y1=\"" << fmt(a.second) << "\" x2=\""
       << fmt(b.first) << "\" y2=\"" << fmt(b.second) << "\" " << style << "/>\n";
}

Int ceil_div(Int a, Int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

void grid_lines(std::ostringstream& os, const Box& box, Int e) {
    const char* style = "stroke=\"#c8c8c8\" stroke-width=\"0.8\"";
    // alpha_1 walls: a1 = ke
    for (Int k = ceil_div(box.lo1, e); k * e <= box.hi1; ++k)
        line(os, canvas(k * e, box.lo2), canvas(k * e, box.hi2), style);
    // theta walls: a1 + a2 = ke
    const Int slo = box.lo1 + box.lo2, shi = box.hi1 + box.hi2;
    for (Int k = ceil_div(slo, e); k * e <= shi; ++k) {
        const Int c = k * e;
        const Int t0 = std::max(box.lo1, c - box.hi2);
        const Int t1 = std::min(box.hi1, c - box.lo2);
        if (t0 > t1) continue;
        line(os, canvas(t0, c - t0), canvas(t1, c - t1), style);
    }
    // alpha_2 walls: a2 = ke
    for (Int k = ceil_div(box.lo2, e); k * e <= box.hi2; ++k)
        line(os, canvas(box.lo1, k * e), canvas(box.hi1, k * e), style);
}

void ring(std::ostringstream& os, const DominantWeight& w, double radius, const char* color,
          double width) {
    const auto [cx, cy] = canvas(w);
    os << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(radius)
       << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << fmt(width) << "\"/>\n";
}

void overlay(std::ostringstream& os, const GenericTriple& t, const BlockWeightSet& data,
             Highlight what, double r) {
    switch (what) {
        case Highlight::vertices:
            for (const auto& v : boundary_affine_vertices(t)) ring(os, v, r + 3.0, "#000000", 1.6);
            for (const auto& v : interior_affine_vertices(t)) ring(os, v, r + 3.0, "#777777", 1.2);
            break;
        case Highlight::pairs:
            for (const auto& pair : classify_pairs(t)) {
                const char* color = pair.kind == PairKind::bad ? "#8b0000" : "#00008b";
                line(os, canvas(pair.v1), canvas(pair.v2),
                     pair.kind == PairKind::bad
                         ? "stroke=\"#8b0000\" stroke-width=\"1.2\" stroke-dasharray=\"3,2\""
                         : "stroke=\"#00008b\" stroke-width=\"1.2\" stroke-dasharray=\"3,2\"");
                ring(os, pair.v1, r + 3.0, color, 1.6);
                ring(os, pair.v2, r + 3.0, color, 1.6);
            }
            break;
        case Highlight::stingray: {
            const auto weights = data.weight_set();
            for (const auto& pair : classify_pairs(t)) {
                if (pair.kind != PairKind::bad) continue;
                const auto region = stingray(t, pair, weights);
                for (const auto& p : region.tail) ring(os, p, r + 2.0, "#8b0000", 1.4);
                for (const auto& p : region.body) ring(os, p, r + 2.0, "#e07070", 1.0);
            }
            break;
        }
        case Highlight::regular:
            for (const auto& pair : classify_pairs(t)) {
                if (pair.kind != PairKind::good) continue;
                for (const auto& p : cell_points(pair.v1, t.e, /*open=*/true))
                    if (data.contains(p)) ring(os, p, r + 2.0, "#2040c0", 1.2);
            }
            break;
    }
}

} // namespace

RenderOptions RenderOptions::defaults() {
    RenderOptions opts;
    opts.palette = {
        {Composition({1, 1, 1}), "#2e8b57"},
        {Composition({3}), "#d0342c"},
        {Composition({2, 1}), "#e8861a"},
        {Composition({1, 2}), "#2563c9"},
    };
    return opts;
}

std::pair<double, double> project(const DominantWeight& w) {
    if (w.rank() != 3) throw std::invalid_argument("projection is defined for rank 3");
    return {static_cast<double>(w.coeff(1)) + static_cast<double>(w.coeff(2)) / 2.0,
            static_cast<double>(w.coeff(2)) * kSqrt3Half};
}

std::string render_svg(const GenericTriple& t, const BlockWeightSet& data,
                       const RenderOptions& opts) {
    if (t.r != 3) throw std::invalid_argument("rendering is defined for rank 3");
    for (const auto& mu : compositions_of(3))
        if (!opts.palette.count(mu))
            throw std::invalid_argument("palette must cover all four compositions of 3");

    Box box{0, 0, 0, 0};
    bool first = true;
    for (const auto& [w, key] : data.entries()) {
        if (first) {
            box = {w.coeff(1), w.coeff(1), w.coeff(2), w.coeff(2)};
            first = false;
        } else {
            box.lo1 = std::min(box.lo1, w.coeff(1));
            box.hi1 = std::max(box.hi1, w.coeff(1));
            box.lo2 = std::min(box.lo2, w.coeff(2));
            box.hi2 = std::max(box.hi2, w.coeff(2));
        }
    }
    box.lo1 -= t.e;
    box.hi1 += t.e;
    box.lo2 -= t.e;
    box.hi2 += t.e;

    // Canvas bounding box of the four lattice-box corners.
    double min_x = 1e18, max_x = -1e18, min_y = 1e18, max_y = -1e18;
    for (Int a1 : {box.lo1, box.hi1})
        for (Int a2 : {box.lo2, box.hi2}) {
            const auto [x, y] = canvas(a1, a2);
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    const double pad = opts.point_radius + 8.0;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
       << fmt(min_x - pad) << ' ' << fmt(min_y - pad) << ' ' << fmt(max_x - min_x + 2 * pad)
       << ' ' << fmt(max_y - min_y + 2 * pad) << "\">\n";

    if (opts.show_hyperplanes) grid_lines(os, box, t.e);

    for (const auto& [w, key] : data.entries()) {
        const auto [cx, cy] = canvas(w);
        os << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\""
           << fmt(opts.point_radius) << "\" fill=\"" << opts.palette.at(key.mu) << "\"/>\n";
    }

    if (opts.show_alcove_labels) {
        // Barycenter label of each (1,1,1) copy, keyed by quotient sizes.
        const Composition ones({1, 1, 1});
        std::map<std::vector<Int>, std::pair<std::pair<double, double>, int>> groups;
        for (const auto& [w, key] : data.entries()) {
            if (key.mu != ones) continue;
            std::vector<Int> sizes;
            for (const auto& comp : key.quotient.components()) sizes.push_back(comp.size());
            const auto [cx, cy] = canvas(w);
            auto& [acc, n] = groups[sizes];
            acc.first += cx;
            acc.second += cy;
            ++n;
        }
        for (const auto& [sizes, acc] : groups) {
            std::ostringstream label;
            label << '(';
            for (size_t i = 0; i < sizes.size(); ++i) {
                if (i) label << ',';
                label << sizes[i];
            }
            label << ')';
            os << "  <text x=\"" << fmt(acc.first.first / acc.second) << "\" y=\""
               << fmt(acc.first.second / acc.second)
               << "\" font-size=\"9\" text-anchor=\"middle\" fill=\"#333333\">" << label.str()
               << "</text>\n";
        }
    }

    if (opts.highlight) overlay(os, t, data, *opts.highlight, opts.point_radius);

    os << "</svg>\n";
    return os.str();
}

} // namespace wpat
