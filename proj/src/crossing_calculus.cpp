#include "tricircle/crossing_calculus.hpp"

#include <limits>
#include <stdexcept>

namespace tricircle {

__extension__ typedef __int128 wide_t;

char circle_name(Circle c) {
    switch (c) {
        case Circle::M: return 'M';
        case Circle::N: return 'N';
        case Circle::P: return 'P';
    }
    return '?';
}

TripartiteSpec::TripartiteSpec(int m_, int n_, int p_) : m(m_), n(n_), p(p_) {
    if (m < 1 || n < 1 || p < 1) {
        throw input_error("circle sizes must be positive, got (" + std::to_string(m) + "," +
                          std::to_string(n) + "," + std::to_string(p) + ")");
    }
}

int TripartiteSpec::size(Circle c) const {
    switch (c) {
        case Circle::M: return m;
        case Circle::N: return n;
        case Circle::P: return p;
    }
    return 0;
}

void validate(const LabelVector& labels, const TripartiteSpec& spec) {
    if (labels.source == labels.target) {
        throw input_error("label family must join two distinct circles");
    }
    const int a = spec.size(labels.source);
    const int b = spec.size(labels.target);
    if (static_cast<int>(labels.values.size()) != a) {
        throw input_error(std::string("label family ") + circle_name(labels.source) +
                          circle_name(labels.target) + " has " + std::to_string(labels.values.size()) +
                          " entries, expected " + std::to_string(a));
    }
    for (int v : labels.values) {
        if (v < 1 || v > b) {
            throw input_error("label " + std::to_string(v) + " outside 1.." + std::to_string(b));
        }
    }
}

const LabelVector& DrawingLabels::y_family(Circle source, Circle target) const {
    if (source == target) throw input_error("y-family needs two distinct circles");
    return y[y_slot(source, target)];
}

void validate(const DrawingLabels& labels) {
    for (Circle a : all_circles) {
        const LabelVector& x = labels.x[index_of(a)];
        if (x.source != a || x.target != next(a)) {
            throw input_error("x-families must be (M,N), (N,P), (P,M) in that order");
        }
        validate(x, labels.spec);
        for (Circle b : all_circles) {
            if (a == b) continue;
            const LabelVector& y = labels.y[DrawingLabels::y_slot(a, b)];
            if (y.source != a || y.target != b) {
                throw input_error("y-family slot does not match its circles");
            }
            validate(y, labels.spec);
        }
    }
}

void CrossingBreakdown::recompute_total() {
    total = 0;
    for (count_t v : mono) total += v;
    for (count_t v : bi) total += v;
}

count_t binom(count_t n, count_t k) {
    if (n < 0 || k < 0) throw input_error("binom needs nonnegative arguments");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    wide_t r = 1;
    for (count_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i stays integral at every step
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<count_t>::max()) throw std::overflow_error("binom overflow");
    }
    return static_cast<count_t>(r);
}

namespace {

void check_label(int n, int v) {
    if (n < 1) throw input_error("circle size must be positive");
    if (v < 1 || v > n) {
        throw input_error("label " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
}

}  // namespace

int cyclic_distance(int n, int k, int l) {
    check_label(n, k);
    check_label(n, l);
    return ((l - k) % n + n) % n;
}

count_t pair_crossings(int n, int u, int v) {
    check_label(n, u);
    check_label(n, v);
    return pair_crossings_unchecked(n, u, v);
}

PairCrossingsMin pair_crossings_min(int n) {
    if (n < 2) throw input_error("f_min needs n >= 2");
    PairCrossingsMin r;
    r.value = static_cast<count_t>(n / 2) * ((n - 1) / 2);
    r.optimal_offsets.push_back(n / 2);
    if (n % 2 == 1) r.optimal_offsets.push_back(n / 2 + 1);
    r.gap = n % 2 == 0 ? 1 : 2;
    return r;
}

count_t mono_count(int target_size, std::span<const int> x) {
    for (int v : x) check_label(target_size, v);
    count_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            s += pair_crossings_unchecked(target_size, x[i], x[j]);
        }
    }
    return s;
}

count_t mono_count(int target_size, const LabelVector& x) { return mono_count(target_size, std::span<const int>(x.values)); }

count_t bi_count(int third_size, std::span<const int> y_a, std::span<const int> y_b) {
    for (int v : y_a) check_label(third_size, v);
    for (int v : y_b) check_label(third_size, v);
    // Histogram over the target circle keeps this O(c^2 + a + b).
    std::vector<count_t> ha(third_size, 0), hb(third_size, 0);
    for (int v : y_a) ++ha[v - 1];
    for (int v : y_b) ++hb[v - 1];
    count_t s = 0;
    for (int u = 1; u <= third_size; ++u) {
        if (ha[u - 1] == 0) continue;
        for (int v = 1; v <= third_size; ++v) {
            if (hb[v - 1] == 0) continue;
            s += ha[u - 1] * hb[v - 1] * pair_crossings_unchecked(third_size, u, v);
        }
    }
    return s;
}

count_t bi_count(int third_size, const LabelVector& y_a, const LabelVector& y_b) {
    if (y_a.target != y_b.target) throw input_error("bi_count needs two families with a common target circle");
    if (y_a.source == y_b.source) throw input_error("bi_count needs families from two different circles");
    return bi_count(third_size, std::span<const int>(y_a.values), std::span<const int>(y_b.values));
}

CrossingBreakdown total_count(const DrawingLabels& labels) {
    validate(labels);
    const TripartiteSpec& s = labels.spec;
    CrossingBreakdown out;
    for (Circle a : all_circles) {
        const Circle b = next(a);
        const Circle c = next(b);
        const std::size_t k = index_of(a);
        out.mono[k] = mono_count(s.size(b), labels.x_family(a));
        out.bi[k] = bi_count(s.size(c), labels.y_family(a, c), labels.y_family(b, c));
    }
    out.recompute_total();
    return out;
}

}  // namespace tricircle
