#pragma once

#include <string>
#include <vector>

#include "harmonic/series.hpp"

namespace harmonic {

/// Circles to trace through the map and canvas parameters. Every circle
/// must satisfy |center| + radius <= 1 - 1e-9.
struct PlotSpec {
    struct Circle {
        Cx center;
        double radius;
    };
    std::vector<Circle> circles;
    int samples_per_circle = 256;
    int width = 800;
    int height = 800;
    double stroke_width = 1.5;
};

/// Renders the image polylines of the spec's circles as an SVG document.
/// The image plane is fit with one uniform scale and a 5% margin; the
/// scale and the per-curve convexity verdicts are recorded in comments.
/// Output is byte-identical across runs for identical inputs.
std::string render_plot_svg(const HarmonicMap& f, const PlotSpec& spec);

}  // namespace harmonic
