#include "cli/json_io.hpp"

#include <string>

namespace tricircle::cli {

namespace {

std::string pair_key(Circle a, Circle b) { return {circle_name(a), circle_name(b)}; }

// "MP/NP" style key for the bichromatic component of the triple starting at a.
std::string triple_key(Circle a) {
    const Circle b = next(a), c = next(b);
    return pair_key(a, c) + "/" + pair_key(b, c);
}

json to_json(const BoundaryPoint& p) {
    if (const auto* e = std::get_if<EdgeId>(&p)) {
        return json{{"edge", json::array({std::string(1, circle_name(e->source)), e->source_vertex,
                                          std::string(1, circle_name(e->target)), e->target_vertex})}};
    }
    const auto& v = std::get<VertexId>(p);
    return json{{"vertex", json::array({std::string(1, circle_name(v.circle)), v.vertex})}};
}

}  // namespace

json to_json(const TripartiteSpec& s) { return json{{"m", s.m}, {"n", s.n}, {"p", s.p}}; }

json to_json(const BoundsReport& r) {
    json lower_c = json::object(), upper_c = json::object();
    for (const auto& [m, v] : r.lower.candidates) lower_c[std::string(method_name(m))] = v;
    for (const auto& [m, v] : r.upper.candidates) upper_c[std::string(method_name(m))] = v;
    return json{
        {"spec", to_json(r.spec)},
        {"lower", {{"value", r.lower.value}, {"method", std::string(method_name(r.lower.method))}, {"candidates", lower_c}}},
        {"upper", {{"value", r.upper.value}, {"method", std::string(method_name(r.upper.method))}, {"candidates", upper_c}}},
    };
}

json to_json(const CrossingBreakdown& b) {
    json mono = json::object(), bi = json::object();
    for (Circle a : all_circles) {
        mono[pair_key(a, next(a))] = b.mono[index_of(a)];
        bi[triple_key(a)] = b.bi[index_of(a)];
    }
    return json{{"mono", mono}, {"bi", bi}, {"total", b.total}};
}

json to_json(const DrawingLabels& d) {
    json x = json::object(), y = json::object();
    for (Circle a : all_circles) {
        x[pair_key(a, next(a))] = d.x_family(a).values;
        for (Circle b : all_circles) {
            if (a != b) y[pair_key(a, b)] = d.y_family(a, b).values;
        }
    }
    return json{{"spec", to_json(d.spec)}, {"x", x}, {"y", y}};
}

json to_json(const K22nDrawing& d) {
    return json{{"n", d.n}, {"type", d.type}, {"x", d.x}, {"y", d.y}};
}

json to_json(const StripeDrawing& d) {
    json stripes = json::array();
    for (const Stripe& s : d.stripes) {
        json left = json::array(), right = json::array();
        for (const auto& p : s.left) left.push_back(to_json(p));
        for (const auto& p : s.right) right.push_back(to_json(p));
        stripes.push_back(json{{"kind", s.kind == Stripe::Kind::circle ? "circle" : "bundle"},
                               {"circle", std::string(1, circle_name(s.circle))},
                               {"left", left},
                               {"right", right}});
    }
    return json{{"spec", to_json(d.spec)}, {"stripes", stripes}};
}

json to_json(const VerificationReport& r) {
    json j{{"target", std::string(target_name(r.target))},
           {"params", r.params},
           {"pass", r.pass},
           {"facts", r.facts},
           {"checked_count", r.checked_count},
           {"elapsed_us", std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed).count()}};
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

json to_json(const std::vector<TableRow>& rows) {
    json out = json::array();
    for (const TableRow& row : rows) {
        json j{{"n", row.n}};
        if (row.lower) j["lower"] = *row.lower;
        if (row.improved_lower) j["improved_lower"] = *row.improved_lower;
        if (row.improved_upper) j["improved_upper"] = *row.improved_upper;
        if (row.upper) j["upper"] = *row.upper;
        out.push_back(j);
    }
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tricircle::cli
