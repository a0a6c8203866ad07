#include "tricircle/closed_forms.hpp"

#include <algorithm>

#include "tricircle/constructions.hpp"

namespace tricircle {

namespace {

struct Rotation {
    int a, b, c;
};

std::array<Rotation, 3> rotations(const TripartiteSpec& s) {
    return {Rotation{s.m, s.n, s.p}, Rotation{s.n, s.p, s.m}, Rotation{s.p, s.m, s.n}};
}

template <class Method>
void pick(Bound<Method>& b, bool maximize) {
    // candidates are in enum order, so the first strict improvement wins ties
    b.value = b.candidates.front().second;
    b.method = b.candidates.front().first;
    for (const auto& [m, v] : b.candidates) {
        if (maximize ? v > b.value : v < b.value) {
            b.value = v;
            b.method = m;
        }
    }
}

std::array<int, 3> sorted_sizes(const TripartiteSpec& s) {
    std::array<int, 3> v{s.m, s.n, s.p};
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

count_t f_floor_product(count_t n) { return (n / 2) * ((n - 1) / 2); }

count_t cr2_balanced(int n) {
    if (n < 1) throw input_error("cr2_balanced needs n >= 1");
    return n * binom(n, 3);
}

count_t cr2(int m, int n) {
    if (m < 1 || n < 1) throw input_error("cr2 needs positive sizes");
    if (m > n) std::swap(m, n);
    count_t sq = 0;
    count_t lin = 0;
    for (count_t i = 1; i <= m; ++i) {
        for (count_t j = i + 1; j <= m; ++j) {
            const count_t d = (n * (j - 1)) / m - (n * (i - 1)) / m;
            sq += d * d;
            lin += d;
        }
    }
    return binom(n, 2) * binom(m, 2) + sq - n * lin;
}

count_t lower_general(const TripartiteSpec& spec) {
    count_t s = 0;
    for (const Rotation& t : rotations(spec)) {
        s += cr2(t.a, t.b) + static_cast<count_t>(t.a) * t.b * f_floor_product(t.c);
    }
    return s;
}

count_t lower_improved(const TripartiteSpec& spec) {
    const bool big = std::min({spec.m, spec.n, spec.p}) >= 3;
    return lower_general(spec) + (big ? 2 : 0);
}

count_t upper_general(const TripartiteSpec& spec) {
    count_t s = 0;
    for (const Rotation& t : rotations(spec)) {
        s += binom(t.a, 2) * binom(t.b, 2) + static_cast<count_t>(t.a) * t.b * f_floor_product(t.c);
    }
    return s;
}

BalancedBounds balanced_bounds(int n) {
    if (n < 3) throw input_error("balanced_bounds needs n >= 3");
    const count_t nn = n;
    const count_t tail = 3 * nn * nn * f_floor_product(nn);
    return {3 * nn * binom(nn, 3) + tail + 2, 3 * binom(nn, 2) * binom(nn, 2) + tail};
}

count_t k22n_exact(int n) {
    if (n < 2) throw input_error("k22n_exact needs n >= 2");
    if (n == 2) return 3;
    return 6 * f_floor_product(n) + 2 * static_cast<count_t>(n) - 3;
}

ImprovedUpper improved_upper_balanced(int n) {
    if (n < 3) throw input_error("improved_upper_balanced needs n >= 3");
    const count_t nn = n;
    const count_t sq = nn * nn;
    ImprovedUpper r;
    if (n % 2 == 1) {
        const count_t halves = binom(nn / 2, 2) + binom((nn + 1) / 2, 2);
        r.mono_per_pair = binom(nn - 1, 2) * binom(nn, 2) + (nn - 1) * halves;
        r.bi_per_triple = sq * halves;
    } else {
        const count_t h = nn / 2;
        r.mono_per_pair = 2 * (binom(h - 1, 2) * sq + (nn - 2) / 2 * sq + sq / 4);
        r.bi_per_triple = binom(nn - 1, 2) * binom(nn - 1, 2) + 2 * (nn - 1) * (binom(h - 1, 2) + binom(h, 2)) +
                          h * h + (h - 1) * (h - 1);
    }
    r.total = 3 * (r.mono_per_pair + r.bi_per_triple);
    r.saved = upper_general(TripartiteSpec(n, n, n)) - r.total;
    return r;
}

count_t harary_hill(int n) {
    if (n < 1) throw input_error("harary_hill needs n >= 1");
    const count_t a = n / 2, b = (n - 1) / 2, c = (n - 2) / 2, d = (n - 3) / 2;
    return a * b * c * d / 4;
}

KnownValueRegistry::KnownValueRegistry() {
    const count_t known[] = {0, 0, 1, 3, 9, 18, 36, 60, 100, 150};
    for (int n = 3; n <= 12; ++n) cr_complete_[n] = known[n - 3];
    bespoke_[3] = 42;
    bespoke_[4] = 175;
    exact_[2] = 3;
}

const KnownValueRegistry& KnownValueRegistry::instance() {
    static const KnownValueRegistry registry;
    return registry;
}

std::optional<count_t> KnownValueRegistry::cr_complete(int n) const {
    auto it = cr_complete_.find(n);
    if (it == cr_complete_.end()) return std::nullopt;
    return it->second;
}

std::optional<count_t> KnownValueRegistry::bespoke_upper(const TripartiteSpec& spec) const {
    if (!spec.balanced()) return std::nullopt;
    auto it = bespoke_.find(spec.m);
    if (it == bespoke_.end()) return std::nullopt;
    return it->second;
}

std::optional<count_t> KnownValueRegistry::exact_small(const TripartiteSpec& spec) const {
    if (!spec.balanced()) return std::nullopt;
    auto it = exact_.find(spec.m);
    if (it == exact_.end()) return std::nullopt;
    return it->second;
}

std::optional<count_t> lower_via_complete(const TripartiteSpec& spec) {
    const auto total = KnownValueRegistry::instance().cr_complete(spec.m + spec.n + spec.p);
    if (!total) return std::nullopt;
    return *total - binom(spec.m, 4) - binom(spec.n, 4) - binom(spec.p, 4);
}

std::string_view method_name(LowerMethod m) {
    switch (m) {
        case LowerMethod::theorem_general: return "theorem_general";
        case LowerMethod::theorem_general_plus2: return "theorem_general_plus2";
        case LowerMethod::complete_graph_decomposition: return "complete_graph_decomposition";
        case LowerMethod::exact_k22n: return "exact_k22n";
    }
    return "unknown";
}

std::string_view method_name(UpperMethod m) {
    switch (m) {
        case UpperMethod::theorem_general: return "theorem_general";
        case UpperMethod::linear_construction: return "linear_construction";
        case UpperMethod::improved_remark: return "improved_remark";
        case UpperMethod::exact_k22n: return "exact_k22n";
        case UpperMethod::registered_constant: return "registered_constant";
    }
    return "unknown";
}

BoundsReport best_bounds(const TripartiteSpec& spec) {
    const KnownValueRegistry& reg = KnownValueRegistry::instance();
    const auto sorted = sorted_sizes(spec);
    const bool k22n = sorted[0] == 2 && sorted[1] == 2;
    const bool plus2 = sorted[0] >= 3;

    BoundsReport r{spec, {}, {}};

    auto& lc = r.lower.candidates;
    lc.emplace_back(LowerMethod::theorem_general, lower_general(spec));
    if (plus2) lc.emplace_back(LowerMethod::theorem_general_plus2, lower_improved(spec));
    if (auto v = lower_via_complete(spec)) lc.emplace_back(LowerMethod::complete_graph_decomposition, *v);
    if (k22n) lc.emplace_back(LowerMethod::exact_k22n, k22n_exact(sorted[2]));

    auto& uc = r.upper.candidates;
    uc.emplace_back(UpperMethod::theorem_general, upper_general(spec));
    uc.emplace_back(UpperMethod::linear_construction, total_count(linear_labels(spec)).total);
    if (spec.balanced() && spec.m >= 3) uc.emplace_back(UpperMethod::improved_remark, improved_upper_balanced(spec.m).total);
    if (k22n) uc.emplace_back(UpperMethod::exact_k22n, k22n_exact(sorted[2]));
    std::optional<count_t> constant = reg.bespoke_upper(spec);
    if (!constant) constant = reg.exact_small(spec);
    if (constant) uc.emplace_back(UpperMethod::registered_constant, *constant);

    pick(r.lower, true);
    pick(r.upper, false);
    return r;
}

BalancedLowerHH bcr3_balanced_lower(int N) {
    if (N < 6) throw input_error("bcr3_balanced_lower needs N >= 6");
    BalancedLowerHH r;
    r.N = N;
    r.q = (N + 1) / 3;
    r.r = N - 3 * r.q;
    const TripartiteSpec spec(r.q, r.q, r.q + r.r);
    const count_t extra = 2 * binom(r.q, 4) + binom(r.q + r.r, 4);
    r.value = best_bounds(spec).lower.value + extra;
    r.general_theorem_value = lower_general(spec) + extra;
    r.harary_hill = harary_hill(N);
    r.exceeds_hh = r.value > r.harary_hill;
    return r;
}

}  // namespace tricircle
