#ifndef TRICIRCLE_CONSTRUCTIONS_HPP
#define TRICIRCLE_CONSTRUCTIONS_HPP

#include <array>

#include "tricircle/crossing_calculus.hpp"
#include "tricircle/stripe_oracle.hpp"

namespace tricircle {

/// Labels of the linear-description drawing: every family is constant; for a target of
/// size b the preceding source sits at label b, the other source at ⌈b/2⌉.
DrawingLabels linear_labels(const TripartiteSpec& spec);

/// Six-stripe model of the linear-description drawing, ⌈size/2⌉ vertices in each top half.
StripeDrawing linear_stripe_model(const TripartiteSpec& spec);

/// Position of vertex q (numbered clockwise from the west end of the top half) in the
/// arrival order of the linear drawing. Exposed for rendering and tests.
int linear_arrival_label(int size, int q);

/// A drawing of K_{2,2,n} reduced to its K_{2,2,0} type and eight labels on the n-circle.
struct K22nDrawing {
    int n = 3;
    int type = 1;
    std::array<int, 4> x{1, 1, 1, 1};  // x_1..x_4
    std::array<int, 4> y{1, 1, 1, 1};  // y_1..y_4
};

void validate(const K22nDrawing& d);

/// The type-1 drawing with x1=y1=1, x2=⌊n/2⌋+2, y2=n, x3=n-1, y3=⌊n/2⌋+1, x4=y4=⌊n/2⌋.
K22nDrawing k22n_construction(int n);

count_t k22n_red_count(const K22nDrawing& d);
count_t k22n_green_count(const K22nDrawing& d);
count_t k22n_total(const K22nDrawing& d);

}  // namespace tricircle

#endif  // TRICIRCLE_CONSTRUCTIONS_HPP
