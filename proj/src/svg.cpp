#include "harmonic/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "harmonic/geometry.hpp"

namespace harmonic {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::string render_plot_svg(const HarmonicMap& f, const PlotSpec& spec) {
    if (spec.circles.empty()) throw DomainError("plot spec contains no circles");
    if (spec.samples_per_circle < 16) throw DomainError("need at least 16 samples per circle");
    if (spec.width < 16 || spec.height < 16) throw DomainError("canvas too small");

    for (const auto& c : spec.circles) {
        if (!(c.radius > 0.0) || std::abs(c.center) + c.radius > 1.0 - 1e-9)
            throw DomainError("plot circle must satisfy |center| + radius <= 1 - 1e-9");
    }

    std::vector<std::vector<Cx>> curves;
    std::vector<bool> convex_flags;
    for (const auto& c : spec.circles) {
        std::vector<Cx> pts(spec.samples_per_circle);
        for (int k = 0; k < spec.samples_per_circle; ++k) {
            const Cx z = c.center + std::polar(c.radius, kTwoPi * k / spec.samples_per_circle);
            pts[k] = eval(f, DiskPoint(z));
        }
        curves.push_back(std::move(pts));
        convex_flags.push_back(image_circle_convexity(
            f, DiskPoint(c.center), c.radius, std::max(64, spec.samples_per_circle)));
    }

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& curve : curves) {
        for (Cx w : curve) {
            xmin = std::min(xmin, w.real());
            xmax = std::max(xmax, w.real());
            ymin = std::min(ymin, w.imag());
            ymax = std::max(ymax, w.imag());
        }
    }
    const double spanx = std::max(xmax - xmin, 1e-12);
    const double spany = std::max(ymax - ymin, 1e-12);
    // uniform scale, 5% margin on each side
    const double scale =
        std::min(spec.width * 0.9 / spanx, spec.height * 0.9 / spany);
    const double cx = 0.5 * (xmin + xmax);
    const double cy = 0.5 * (ymin + ymax);

    auto to_px = [&](Cx w) {
        const double px = spec.width * 0.5 + (w.real() - cx) * scale;
        const double py = spec.height * 0.5 - (w.imag() - cy) * scale;  // y grows downward
        return std::make_pair(px, py);
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
       << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
    os << "<!-- scale: " << fmt(scale) << " px per unit, center: " << fmt(cx) << " "
       << fmt(cy) << " -->\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& c = spec.circles[i];
        os << "<!-- circle " << i << " center=" << fmt(c.center.real()) << "+"
           << fmt(c.center.imag()) << "i radius=" << fmt(c.radius)
           << " convex=" << (convex_flags[i] ? "true" : "false") << " -->\n";
        os << "<polyline fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\""
           << fmt(spec.stroke_width) << "\" points=\"";
        for (std::size_t k = 0; k <= curves[i].size(); ++k) {
            const auto [px, py] = to_px(curves[i][k % curves[i].size()]);
            if (k) os << " ";
            os << fmt(px) << "," << fmt(py);
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace harmonic
