#ifndef TRICIRCLE_CROSSING_CALCULUS_HPP
#define TRICIRCLE_CROSSING_CALCULUS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricircle {

/// Exact crossing counts. Counts grow as n^4, so 64 bits cover circle sizes up to 10^4.
using count_t = std::int64_t;

/// Raised for arguments outside an operation's documented domain.
class input_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The three circles. The cyclic order M -> N -> P -> M fixes every "preceding" relation.
enum class Circle : std::uint8_t { M = 0, N = 1, P = 2 };

inline constexpr std::array<Circle, 3> all_circles{Circle::M, Circle::N, Circle::P};

constexpr std::size_t index_of(Circle c) { return static_cast<std::size_t>(c); }
constexpr Circle next(Circle c) { return static_cast<Circle>((index_of(c) + 1) % 3); }
constexpr Circle prev(Circle c) { return static_cast<Circle>((index_of(c) + 2) % 3); }
constexpr Circle third(Circle a, Circle b) { return static_cast<Circle>(3 - index_of(a) - index_of(b)); }
char circle_name(Circle c);

/// Vertex counts of the circles M, N, P of a drawing of K_{m,n,p}.
struct TripartiteSpec {
    int m = 1;
    int n = 1;
    int p = 1;

    TripartiteSpec() = default;
    /// Throws input_error unless all three counts are positive.
    TripartiteSpec(int m_, int n_, int p_);

    int size(Circle c) const;
    bool balanced() const { return m == n && n == p; }
    friend bool operator==(const TripartiteSpec&, const TripartiteSpec&) = default;
};

/// Labels x_i(A,B) or y_i(A,B): for every vertex i of `source`, a vertex of `target` (1-based).
struct LabelVector {
    Circle source = Circle::M;
    Circle target = Circle::N;
    std::vector<int> values;
};

void validate(const LabelVector& labels, const TripartiteSpec& spec);

/// The label families that determine the crossing count of a tripartite-circle drawing.
/// x-families exist for the cyclic pairs (M,N), (N,P), (P,M); y-families for all six ordered pairs.
struct DrawingLabels {
    TripartiteSpec spec;
    std::array<LabelVector, 3> x;  // indexed by source circle
    std::array<LabelVector, 6> y;  // indexed by y_slot(source, target)

    static constexpr std::size_t y_slot(Circle source, Circle target) {
        return 2 * index_of(source) + (target == next(source) ? 0 : 1);
    }

    const LabelVector& x_family(Circle source) const { return x[index_of(source)]; }
    const LabelVector& y_family(Circle source, Circle target) const;
};

void validate(const DrawingLabels& labels);

/// Per-type crossing counts.
/// mono[k]: crossings among edges of the cyclic pair starting at circle k (MN/MN, NP/NP, PM/PM).
/// bi[k]:   crossings counted by the cyclic triple (A,B,C) starting at circle k, i.e. AC/BC
///          crossings (MP/NP, NM/PM, PN/MN).
struct CrossingBreakdown {
    std::array<count_t, 3> mono{};
    std::array<count_t, 3> bi{};
    count_t total = 0;

    void recompute_total();
    friend bool operator==(const CrossingBreakdown&, const CrossingBreakdown&) = default;
};

/// C(n, k); zero when k > n. Throws std::overflow_error if the value does not fit count_t.
count_t binom(count_t n, count_t k);

/// d_n(k, l) = (l - k) mod n for labels k, l in 1..n.
int cyclic_distance(int n, int k, int l);

/// f_n(u, v) = C(d, 2) + C(n - d, 2) with d = d_n(u, v): crossings induced by two label positions.
count_t pair_crossings(int n, int u, int v);

/// Unchecked variant for inner loops; labels must already be in 1..n.
inline count_t pair_crossings_unchecked(int n, int u, int v) {
    const count_t d = ((v - u) % n + n) % n;
    const count_t e = n - d;
    return d * (d - 1) / 2 + e * (e - 1) / 2;
}

struct PairCrossingsMin {
    count_t value = 0;
    std::vector<int> optimal_offsets;  // the |u - v| values attaining the minimum
    count_t gap = 0;                   // second-smallest value minus the minimum
};

/// Minimum of f_n over all label pairs, in closed form. Requires n >= 2.
PairCrossingsMin pair_crossings_min(int n);

/// Monochromatic crossings of a bipartite-circle drawing: sum over i < j of f_target(x_i, x_j).
count_t mono_count(int target_size, std::span<const int> x);
count_t mono_count(int target_size, const LabelVector& x);

/// AC/BC crossings: sum over i in A, j in B of f_c(y_i(A,C), y_j(B,C)).
count_t bi_count(int third_size, std::span<const int> y_a, std::span<const int> y_b);
count_t bi_count(int third_size, const LabelVector& y_a, const LabelVector& y_b);

/// Total crossing count of a tripartite-circle drawing from its labels, split by type.
CrossingBreakdown total_count(const DrawingLabels& labels);

}  // namespace tricircle

#endif  // TRICIRCLE_CROSSING_CALCULUS_HPP
