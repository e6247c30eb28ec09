#pragma once

#include <map>
#include <optional>
#include <string>

#include "wpat/patterns.hpp"

namespace wpat {

enum class Highlight { vertices, pairs, stingray, regular };

struct RenderOptions {
    bool show_hyperplanes = true;
    bool show_alcove_labels = false;
    std::optional<Highlight> highlight;
    double point_radius = 4.0;
    /// Fill color per composition of 3; must cover all four.
    std::map<Composition, std::string> palette;

    static RenderOptions defaults();
};

/// Standard A_2 weight-lattice projection: x = a_1 + a_2/2, y = a_2*sqrt(3)/2.
/// Injective on the weight lattice. Rank must be 3.
std::pair<double, double> project(const DominantWeight& w);

/// Static SVG picture of a block weight set: level-e grid lines over the
/// data's bounding box plus one e-margin, one circle per weight colored by
/// its component, optional alcove labels at the barycenters of the (1,1,1)
/// copies, optional structural overlays. Byte-identical output for
/// identical inputs.
std::string render_svg(const GenericTriple& t, const BlockWeightSet& data,
                       const RenderOptions& opts);

} // namespace wpat
