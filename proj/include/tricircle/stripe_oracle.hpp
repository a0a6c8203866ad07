#ifndef TRICIRCLE_STRIPE_ORACLE_HPP
#define TRICIRCLE_STRIPE_ORACLE_HPP

#include <array>
#include <stdexcept>
#include <variant>
#include <vector>

#include "tricircle/crossing_calculus.hpp"

namespace tricircle {

/// Malformed stripe model (an edge without exactly one position per side, unknown vertex, ...).
class structure_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Edge between vertex `source_vertex` of `source` and `target_vertex` of `target`.
/// Edges always run from a circle to its cyclic successor, so (source, source_vertex,
/// target_vertex) identifies the edge.
struct EdgeId {
    Circle source = Circle::M;
    int source_vertex = 1;
    Circle target = Circle::N;
    int target_vertex = 1;
    friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

struct VertexId {
    Circle circle = Circle::M;
    int vertex = 1;
    friend bool operator==(const VertexId&, const VertexId&) = default;
};

/// A boundary position: an edge passing through the boundary, or a vertex whose incident
/// edges terminate there.
using BoundaryPoint = std::variant<EdgeId, VertexId>;

struct Stripe {
    enum class Kind { circle, bundle };
    Kind kind = Kind::bundle;
    /// The circle a circle-stripe contains; for a bundle-stripe, the circle the bundle leaves.
    Circle circle = Circle::M;
    std::vector<BoundaryPoint> left;   // top to bottom
    std::vector<BoundaryPoint> right;  // top to bottom
};

/// Six stripes in cyclic order: circle M, bundle MN, circle N, bundle NP, circle P, bundle PM.
struct StripeDrawing {
    TripartiteSpec spec;
    std::array<Stripe, 6> stripes;
};

/// Throws structure_error if some stripe does not give every edge it contains exactly
/// one position per side (vertex positions count for every edge at that vertex).
void validate(const StripeDrawing& d);

/// Crossings counted purely from boundary orders. Inside a stripe every edge is monotone,
/// so two edges cross there iff their endpoints interleave around the stripe boundary;
/// for stripes holding only passages this is plain left/right inversion counting.
/// Pairs sharing a vertex inside the stripe are skipped.
count_t stripe_oracle(const StripeDrawing& d);

/// Same count, split into the six crossing types.
CrossingBreakdown stripe_breakdown(const StripeDrawing& d);

}  // namespace tricircle

#endif  // TRICIRCLE_STRIPE_ORACLE_HPP
