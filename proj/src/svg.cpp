#include "okb/svg.hpp"

#include <iomanip>
#include <sstream>

namespace okb {

namespace {

constexpr int kSize = 600;
constexpr double kMargin = 50.0;

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                          "#b07aa1", "#76b7b2", "#edc948", "#9c755f"};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    return os.str();
}

}  // namespace

std::string plot_svg(const std::vector<Polytope>& polytopes,
                     const std::vector<std::string>& labels) {
    for (const auto& P : polytopes)
        if (P.dim != 2) throw PreconditionError("SVG plots are 2-dimensional only");

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
        << kSize << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";

    bool any = false;
    Rational min_x, max_x, min_y, max_y;
    for (const auto& P : polytopes) {
        for (const auto& v : P.vertices) {
            if (!any) {
                min_x = max_x = v[0];
                min_y = max_y = v[1];
                any = true;
            }
            if (v[0] < min_x) min_x = v[0];
            if (v[0] > max_x) max_x = v[0];
            if (v[1] < min_y) min_y = v[1];
            if (v[1] > max_y) max_y = v[1];
        }
    }
    if (!any) {
        svg << "  <text x=\"300\" y=\"300\" text-anchor=\"middle\" font-size=\"20\">"
               "empty body</text>\n</svg>\n";
        return svg.str();
    }

    double lo_x = (double)min_x, hi_x = (double)max_x;
    double lo_y = (double)min_y, hi_y = (double)max_y;
    double span = std::max(hi_x - lo_x, hi_y - lo_y);
    if (span <= 0) span = 1.0;
    double scale = (kSize - 2 * kMargin) / span;
    auto px = [&](const RatVec& v) {
        double x = kMargin + ((double)v[0] - lo_x) * scale;
        double y = kSize - kMargin - ((double)v[1] - lo_y) * scale;
        return std::pair<double, double>(x, y);
    };

    for (std::size_t i = 0; i < polytopes.size(); ++i) {
        const Polytope& P = polytopes[i];
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        if (P.empty()) continue;
        if (P.affine_dim == 2) {
            svg << "  <polygon points=\"";
            for (const auto& v : boundary_cycle(P)) {
                auto [x, y] = px(v);
                svg << fmt(x) << "," << fmt(y) << " ";
            }
            svg << "\" fill=\"" << color << "\" fill-opacity=\"0.35\" stroke=\"" << color
                << "\" stroke-width=\"1.5\"/>\n";
        } else if (P.affine_dim == 1) {
            auto [x1, y1] = px(P.vertices.front());
            auto [x2, y2] = px(P.vertices.back());
            svg << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
                << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        }
        for (const auto& v : P.vertices) {
            auto [x, y] = px(v);
            svg << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
                << "\" r=\"3\" fill=\"#333\"/>\n";
            svg << "  <text x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y - 6)
                << "\" font-size=\"12\">(" << rational_str(v[0]) << ", " << rational_str(v[1])
                << ")</text>\n";
        }
        if (i < labels.size() && !labels[i].empty() && !P.vertices.empty()) {
            RatVec c = zero_vec(2);
            for (const auto& v : P.vertices) c = c + v;
            c = (Rational(1) / Rational((long)P.vertices.size())) * c;
            auto [x, y] = px(c);
            svg << "  <text x=\"" << fmt(x) << "\" y=\"" << fmt(y)
                << "\" text-anchor=\"middle\" font-size=\"14\">" << labels[i] << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace okb
