#include "tricircle/constructions.hpp"

#include <string>

namespace tricircle {

DrawingLabels linear_labels(const TripartiteSpec& spec) {
    DrawingLabels d;
    d.spec = spec;
    for (Circle a : all_circles) {
        const Circle b = next(a);
        d.x[index_of(a)] = LabelVector{a, b, std::vector<int>(spec.size(a), spec.size(b))};
        for (Circle t : all_circles) {
            if (t == a) continue;
            const int size = spec.size(t);
            const int anchor = (a == prev(t)) ? size : (size + 1) / 2;
            d.y[DrawingLabels::y_slot(a, t)] = LabelVector{a, t, std::vector<int>(spec.size(a), anchor)};
        }
    }
    return d;
}

int linear_arrival_label(int size, int q) {
    if (q < 1 || q > size) throw input_error("vertex outside its circle");
    const int top = (size + 1) / 2;
    return q <= top ? top + 1 - q : top + size + 1 - q;
}

namespace {

// The arrival relabelling is an involution, so it also maps arrival labels back to vertices.
int vertex_of_arrival(int size, int j) { return linear_arrival_label(size, j); }

// Edges A -> next(A) in the order of the first marked line: by source vertex, then arrival label.
std::vector<BoundaryPoint> departure_order(const TripartiteSpec& s, Circle a) {
    const Circle b = next(a);
    std::vector<BoundaryPoint> out;
    for (int i = 1; i <= s.size(a); ++i)
        for (int j = 1; j <= s.size(b); ++j) out.emplace_back(EdgeId{a, i, b, vertex_of_arrival(s.size(b), j)});
    return out;
}

// Same edges in the order of the second marked line: by arrival label, then source vertex.
std::vector<BoundaryPoint> arrival_order(const TripartiteSpec& s, Circle a) {
    const Circle b = next(a);
    std::vector<BoundaryPoint> out;
    for (int j = 1; j <= s.size(b); ++j)
        for (int i = 1; i <= s.size(a); ++i) out.emplace_back(EdgeId{a, i, b, vertex_of_arrival(s.size(b), j)});
    return out;
}

Stripe circle_stripe(const TripartiteSpec& s, Circle c) {
    const int size = s.size(c);
    const int top = (size + 1) / 2;
    const int from = s.size(prev(c));
    const int to = s.size(next(c));
    Stripe st;
    st.kind = Stripe::Kind::circle;
    st.circle = c;

    const std::vector<BoundaryPoint> in = arrival_order(s, prev(c));
    const auto split_in = in.begin() + static_cast<std::ptrdiff_t>(top) * from;
    st.left.assign(in.begin(), split_in);
    for (int q = 1; q <= top; ++q) st.left.emplace_back(VertexId{c, q});
    st.left.insert(st.left.end(), split_in, in.end());

    const std::vector<BoundaryPoint> out = departure_order(s, c);
    const auto split_out = out.begin() + static_cast<std::ptrdiff_t>(top) * to;
    st.right.assign(out.begin(), split_out);
    for (int q = size; q > top; --q) st.right.emplace_back(VertexId{c, q});
    st.right.insert(st.right.end(), split_out, out.end());
    return st;
}

Stripe bundle_stripe(const TripartiteSpec& s, Circle a) {
    Stripe st;
    st.kind = Stripe::Kind::bundle;
    st.circle = a;
    st.left = departure_order(s, a);
    st.right = arrival_order(s, a);
    return st;
}

}  // namespace

StripeDrawing linear_stripe_model(const TripartiteSpec& spec) {
    StripeDrawing d;
    d.spec = spec;
    for (Circle a : all_circles) {
        d.stripes[2 * index_of(a)] = circle_stripe(spec, a);
        d.stripes[2 * index_of(a) + 1] = bundle_stripe(spec, a);
    }
    return d;
}

void validate(const K22nDrawing& d) {
    if (d.n < 3) throw input_error("K_{2,2,n} drawing needs n >= 3");
    if (d.type < 1 || d.type > 4) throw input_error("K_{2,2,0} type must be 1..4, got " + std::to_string(d.type));
    for (int v : d.x)
        if (v < 1 || v > d.n) throw input_error("x label outside 1..n");
    for (int v : d.y)
        if (v < 1 || v > d.n) throw input_error("y label outside 1..n");
}

K22nDrawing k22n_construction(int n) {
    if (n < 3) throw input_error("k22n_construction needs n >= 3");
    const int h = n / 2;
    K22nDrawing d;
    d.n = n;
    d.type = 1;
    d.x = {1, h + 2, n - 1, h};
    d.y = {1, n, h + 1, h};
    return d;
}

count_t k22n_red_count(const K22nDrawing& d) {
    validate(d);
    const int n = d.n;
    const auto& x = d.x;
    const auto& y = d.y;
    const auto dist = [n](int k, int l) -> count_t { return cyclic_distance(n, k, l); };
    switch (d.type) {
        case 1: return 2 * (dist(y[0], x[0]) + dist(x[1], y[1]) + dist(y[2], x[2]) + dist(x[3], y[3])) + 1;
        case 2:
        case 3: return 2 * static_cast<count_t>(n) + 1;
        default: return 2 * (dist(y[0], x[0]) + dist(x[1], y[1])) + n;
    }
}

count_t k22n_green_count(const K22nDrawing& d) {
    validate(d);
    const int n = d.n;
    const auto& x = d.x;
    const auto& y = d.y;
    return pair_crossings(n, x[0], x[1]) + pair_crossings(n, x[2], x[3]) + pair_crossings(n, y[0], y[2]) +
           pair_crossings(n, y[0], y[3]) + pair_crossings(n, y[1], y[2]) + pair_crossings(n, y[1], y[3]);
}

count_t k22n_total(const K22nDrawing& d) { return k22n_red_count(d) + k22n_green_count(d); }

}  // namespace tricircle
