#pragma once

#include <map>
#include <string>
#include <utility>

#include "tricircle/crossing_calculus.hpp"

namespace tricircle::cli {

struct RenderSpec {
    enum class Layout { cyclic, nested };
    Layout layout = Layout::cyclic;
    /// Stroke color per unordered circle pair, keyed with the smaller circle first.
    std::map<std::pair<Circle, Circle>, std::string> colors{
        {{Circle::M, Circle::P}, "orange"},
        {{Circle::N, Circle::P}, "green"},
        {{Circle::M, Circle::N}, "red"},
    };
    int width = 600;
    int height = 600;
};

/// Schematic drawing of K_{m,n,p}: one <circle> per part, one <rect> marker per vertex and
/// one <path> per edge. Presentation only; nothing here feeds back into counting.
/// In the nested layout P is the outer circle.
std::string render_svg(const TripartiteSpec& spec, const RenderSpec& render);

}  // namespace tricircle::cli
