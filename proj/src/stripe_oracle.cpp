#include "tricircle/stripe_oracle.hpp"

#include <algorithm>
#include <string>

namespace tricircle {

namespace {

// Dense numbering of all edges of K_{m,n,p} oriented along the cyclic order.
class EdgeIndex {
   public:
    explicit EdgeIndex(const TripartiteSpec& s) : spec_(s) {
        int off = 0;
        for (Circle a : all_circles) {
            offset_[index_of(a)] = off;
            off += s.size(a) * s.size(next(a));
        }
        count_ = off;
    }

    int count() const { return count_; }

    int id(const EdgeId& e) const {
        if (e.target != next(e.source)) throw structure_error("edge must run from a circle to its successor");
        const int a = spec_.size(e.source);
        const int b = spec_.size(e.target);
        if (e.source_vertex < 1 || e.source_vertex > a || e.target_vertex < 1 || e.target_vertex > b) {
            throw structure_error("edge endpoint outside its circle");
        }
        return offset_[index_of(e.source)] + (e.source_vertex - 1) * b + (e.target_vertex - 1);
    }

    Circle source_of(int id) const {
        Circle c = Circle::M;
        for (Circle a : all_circles) {
            if (id >= offset_[index_of(a)]) c = a;
        }
        return c;
    }

    EdgeId edge(int id) const {
        const Circle a = source_of(id);
        const int b = spec_.size(next(a));
        const int local = id - offset_[index_of(a)];
        return EdgeId{a, local / b + 1, next(a), local % b + 1};
    }

    bool incident(int id, const VertexId& v) const {
        const EdgeId e = edge(id);
        return (e.source == v.circle && e.source_vertex == v.vertex) ||
               (e.target == v.circle && e.target_vertex == v.vertex);
    }

   private:
    TripartiteSpec spec_;
    std::array<int, 3> offset_{};
    int count_ = 0;
};

struct Chord {
    int edge;
    int lo, hi;
    VertexId vertex;  // endpoint inside the stripe, valid if has_vertex
    bool has_vertex = false;
};

// Positions of every edge on the boundary cycle of one stripe.
std::vector<Chord> chords_of(const Stripe& s, const EdgeIndex& idx, const TripartiteSpec& spec, int stripe_no) {
    std::vector<BoundaryPoint> cycle(s.left);
    cycle.insert(cycle.end(), s.right.rbegin(), s.right.rend());

    const auto fail = [&](const std::string& what) {
        throw structure_error("stripe " + std::to_string(stripe_no) + ": " + what);
    };

    std::vector<std::vector<int>> pos(idx.count());
    std::vector<int> left_hits(idx.count(), 0), right_hits(idx.count(), 0);
    std::vector<VertexId> vertices;
    const int nleft = static_cast<int>(s.left.size());
    for (int k = 0; k < static_cast<int>(cycle.size()); ++k) {
        if (const auto* e = std::get_if<EdgeId>(&cycle[k])) {
            const int id = idx.id(*e);
            pos[id].push_back(k);
            ++(k < nleft ? left_hits : right_hits)[id];
        } else {
            const VertexId& v = std::get<VertexId>(cycle[k]);
            if (s.kind != Stripe::Kind::circle || v.circle != s.circle) fail("vertex token outside its circle stripe");
            if (v.vertex < 1 || v.vertex > spec.size(v.circle)) fail("vertex token outside its circle");
            vertices.push_back(v);
        }
    }

    std::vector<Chord> out;
    for (int id = 0; id < idx.count(); ++id) {
        if (pos[id].empty()) continue;
        if (left_hits[id] > 1 || right_hits[id] > 1) fail("edge listed twice on one side");
        Chord c{id, 0, 0, {}, false};
        for (int k = 0; k < static_cast<int>(cycle.size()); ++k) {
            const auto* v = std::get_if<VertexId>(&cycle[k]);
            if (v && idx.incident(id, *v)) {
                if (c.has_vertex) fail("edge meets two vertices inside one stripe");
                pos[id].push_back(k);
                c.vertex = *v;
                c.has_vertex = true;
            }
        }
        if (pos[id].size() != 2) fail("edge does not have exactly two positions");
        c.lo = std::min(pos[id][0], pos[id][1]);
        c.hi = std::max(pos[id][0], pos[id][1]);
        out.push_back(c);
    }
    for (const VertexId& v : vertices) {
        if (std::count(vertices.begin(), vertices.end(), v) != 1) fail("vertex listed twice");
    }
    return out;
}

bool strictly_inside(int x, int lo, int hi) { return lo < x && x < hi; }

bool alternate(const Chord& a, const Chord& b) {
    if (a.lo == b.lo || a.lo == b.hi || a.hi == b.lo || a.hi == b.hi) return false;
    return strictly_inside(b.lo, a.lo, a.hi) != strictly_inside(b.hi, a.lo, a.hi);
}

void classify(CrossingBreakdown& out, const EdgeIndex& idx, int e, int f) {
    const Circle a = idx.source_of(e);
    const Circle b = idx.source_of(f);
    if (a == b) {
        ++out.mono[index_of(a)];
        return;
    }
    // Pairs {a, next(a)} and {b, next(b)} share exactly one circle.
    const Circle shared = (next(a) == b) ? b : a;
    ++out.bi[index_of(next(shared))];
}

}  // namespace

void validate(const StripeDrawing& d) {
    const EdgeIndex idx(d.spec);
    std::vector<int> stripe_count(idx.count(), 0);
    for (int s = 0; s < 6; ++s) {
        for (const Chord& c : chords_of(d.stripes[s], idx, d.spec, s)) ++stripe_count[c.edge];
    }
    for (int id = 0; id < idx.count(); ++id) {
        if (stripe_count[id] != 3) {
            throw structure_error("edge present in " + std::to_string(stripe_count[id]) + " stripes, expected 3");
        }
    }
}

CrossingBreakdown stripe_breakdown(const StripeDrawing& d) {
    validate(d);
    const EdgeIndex idx(d.spec);
    const std::size_t e = static_cast<std::size_t>(idx.count());
    std::vector<bool> seen(e * e, false);
    CrossingBreakdown out;
    for (int s = 0; s < 6; ++s) {
        const std::vector<Chord> chords = chords_of(d.stripes[s], idx, d.spec, s);
        for (std::size_t i = 0; i < chords.size(); ++i) {
            for (std::size_t j = i + 1; j < chords.size(); ++j) {
                const Chord& a = chords[i];
                const Chord& b = chords[j];
                if (a.has_vertex && b.has_vertex && a.vertex == b.vertex) continue;
                if (!alternate(a, b)) continue;
                const std::size_t key = static_cast<std::size_t>(a.edge) * e + static_cast<std::size_t>(b.edge);
                if (seen[key]) throw structure_error("edge pair crosses in two stripes");
                seen[key] = true;
                classify(out, idx, a.edge, b.edge);
            }
        }
    }
    out.recompute_total();
    return out;
}

count_t stripe_oracle(const StripeDrawing& d) { return stripe_breakdown(d).total; }

}  // namespace tricircle
