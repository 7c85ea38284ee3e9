#include "parking/render.hpp"

#include "parking/bijections.hpp"
#include "parking/region.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

namespace parking {

namespace {

constexpr double kScale = 100.0;

struct Vec2 {
    double a;
    double b;
};

// Orthonormal coordinates on the sum-zero plane: u = (1,-1,0)/sqrt2, v = (1,1,-2)/sqrt6.
const std::array<double, 3> kU{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
const std::array<double, 3> kV{1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0)};

Vec2 plane_coordinates(const RationalPoint& p) {
    const RationalPoint centred = project_to_sum_zero(p);
    Vec2 out{0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
        const double x = static_cast<double>(centred.coords()[i]);
        out.a += x * kU[i];
        out.b += x * kV[i];
    }
    return out;
}

std::string fixed(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", value == 0.0 ? 0.0 : value);
    return buf;
}

struct Box {
    double min_a, max_a, min_b, max_b;
};

// Segment of {q : q.a * na + q.b * nb = c} inside the box, if any.
bool clip_line(double na, double nb, double c, const Box& box, Vec2& from, Vec2& to) {
    std::vector<Vec2> hits;
    constexpr double tol = 1e-12;
    if (std::abs(nb) > tol) {
        for (double a : {box.min_a, box.max_a}) {
            const double b = (c - na * a) / nb;
            if (b >= box.min_b - tol && b <= box.max_b + tol) hits.push_back({a, b});
        }
    }
    if (std::abs(na) > tol) {
        for (double b : {box.min_b, box.max_b}) {
            const double a = (c - nb * b) / na;
            if (a >= box.min_a - tol && a <= box.max_a + tol) hits.push_back({a, b});
        }
    }
    if (hits.size() < 2) return false;
    std::sort(hits.begin(), hits.end(), [](const Vec2& x, const Vec2& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    from = hits.front();
    to = hits.back();
    return true;
}

}  // namespace

std::string render_shi3_svg(int jobs) {
    const auto regions = enumerate_regions(3, kDefaultRegionCap, jobs);

    struct Label {
        Vec2 at;
        std::string text;
    };
    std::vector<Label> labels;
    Box box{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest(),
            std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()};
    for (const auto& r : regions) {
        const Vec2 q = plane_coordinates(r.witness.point());
        const auto pf = pak_stanley_label(r.signs);
        std::string text;
        for (int e : pf.entries()) text += std::to_string(e);
        labels.push_back({q, text});
        box.min_a = std::min(box.min_a, q.a);
        box.max_a = std::max(box.max_a, q.a);
        box.min_b = std::min(box.min_b, q.b);
        box.max_b = std::max(box.max_b, q.b);
    }
    box.min_a -= 1.0;
    box.max_a += 1.0;
    box.min_b -= 1.0;
    box.max_b += 1.0;

    // SVG y grows downward, so plane b maps to -b.
    const double x0 = box.min_a * kScale;
    const double y0 = -box.max_b * kScale;
    const double width = (box.max_a - box.min_a) * kScale;
    const double height = (box.max_b - box.min_b) * kScale;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fixed(x0) << ' ' << fixed(y0)
        << ' ' << fixed(width) << ' ' << fixed(height) << "\" width=\"" << fixed(width)
        << "\" height=\"" << fixed(height) << "\">\n"
        << "<rect x=\"" << fixed(x0) << "\" y=\"" << fixed(y0) << "\" width=\"" << fixed(width)
        << "\" height=\"" << fixed(height) << "\" fill=\"white\"/>\n";

    for (const auto& [j, k] : std::array<std::pair<int, int>, 3>{{{1, 2}, {1, 3}, {2, 3}}}) {
        const double na = kU[j - 1] - kU[k - 1];
        const double nb = kV[j - 1] - kV[k - 1];
        for (int c : {0, 1}) {
            Vec2 from{};
            Vec2 to{};
            if (!clip_line(na, nb, c, box, from, to)) continue;
            svg << "<line x1=\"" << fixed(from.a * kScale) << "\" y1=\"" << fixed(-from.b * kScale)
                << "\" x2=\"" << fixed(to.a * kScale) << "\" y2=\"" << fixed(-to.b * kScale)
                << "\" stroke=\"" << (c == 0 ? "black" : "steelblue")
                << "\" stroke-width=\"2\" data-hyperplane=\"x" << j << "-x" << k << "=" << c
                << "\"/>\n";
        }
    }
    for (const auto& label : labels) {
        svg << "<text x=\"" << fixed(label.at.a * kScale) << "\" y=\"" << fixed(-label.at.b * kScale)
            << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
            << label.text << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace parking
