#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "cli/json_io.hpp"
#include "cli/svg.hpp"
#include "tricircle/closed_forms.hpp"
#include "tricircle/constructions.hpp"
#include "tricircle/stripe_oracle.hpp"
#include "tricircle/verifiers.hpp"

namespace tricircle::cli {

namespace {

struct io_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<int> sizes;
    bool json = false;
    bool csv = false;
    bool labels = false;
    bool dump = false;
    bool allow_large = false;
    int max_n = -1;
    int table_max_n = 10;
    int n = -1;
    int a = 2, b = 2, c = 4;
    std::string kind;
    std::string target;
    std::string svg_path;
    int width = 600, height = 600;
};

std::string cell(const std::optional<count_t>& v, const char* dash) { return v ? std::to_string(*v) : dash; }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_failure("cannot open " + path + " for writing");
    f << text;
    f.flush();
    if (!f) throw io_failure("write to " + path + " failed");
}

std::string spec_name(const TripartiteSpec& s) {
    return "K_{" + std::to_string(s.m) + "," + std::to_string(s.n) + "," + std::to_string(s.p) + "}";
}

template <class Method>
void print_bound(std::ostream& out, const char* label, const Bound<Method>& b) {
    out << label << ' ' << b.value << " (" << method_name(b.method) << ")\n";
    for (const auto& [m, v] : b.candidates) out << "  " << std::left << std::setw(30) << method_name(m) << v << '\n';
}

void print_breakdown(std::ostream& out, const CrossingBreakdown& b) {
    const json j = to_json(b);
    for (const auto& [k, v] : j["mono"].items()) out << "  mono " << k << ": " << v << '\n';
    for (const auto& [k, v] : j["bi"].items()) out << "  bi   " << k << ": " << v << '\n';
    out << "  total: " << b.total << '\n';
}

int cmd_bounds(const Options& o, std::ostream& out) {
    const TripartiteSpec spec(o.sizes.at(0), o.sizes.at(1), o.sizes.at(2));
    const BoundsReport r = best_bounds(spec);
    if (o.json) {
        out << dump(to_json(r));
        return ok;
    }
    out << spec_name(spec) << '\n';
    print_bound(out, "lower", r.lower);
    print_bound(out, "upper", r.upper);
    return ok;
}

int cmd_table(const Options& o, std::ostream& out) {
    const auto rows = table_rows(o.table_max_n);
    if (o.json) {
        out << dump(to_json(rows));
    } else if (o.csv) {
        out << "n,lower,improved_lower,improved_upper,upper\n";
        for (const TableRow& r : rows) {
            out << r.n << ',' << cell(r.lower, "") << ',' << cell(r.improved_lower, "") << ','
                << cell(r.improved_upper, "") << ',' << cell(r.upper, "") << '\n';
        }
    } else {
        out << std::right << std::setw(3) << "n" << std::setw(8) << "lower" << std::setw(16) << "improved_lower"
            << std::setw(16) << "improved_upper" << std::setw(8) << "upper" << '\n';
        for (const TableRow& r : rows) {
            out << std::setw(3) << r.n << std::setw(8) << cell(r.lower, "--") << std::setw(16)
                << cell(r.improved_lower, "--") << std::setw(16) << cell(r.improved_upper, "--") << std::setw(8)
                << cell(r.upper, "--") << '\n';
        }
    }
    return ok;
}

void print_family(std::ostream& out, const std::string& name, const std::vector<int>& v, bool full) {
    out << "  " << name << ": ";
    const bool constant = std::all_of(v.begin(), v.end(), [&](int x) { return x == v.front(); });
    if (constant && !full) {
        out << "all " << v.front() << '\n';
        return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << '\n';
}

int cmd_construct(const Options& o, std::ostream& out) {
    RenderSpec render;
    render.width = o.width;
    render.height = o.height;
    if (o.kind == "linear") {
        if (o.sizes.size() != 3) throw input_error("construct linear takes three sizes m n p");
        const TripartiteSpec spec(o.sizes[0], o.sizes[1], o.sizes[2]);
        const DrawingLabels labels = linear_labels(spec);
        const CrossingBreakdown b = total_count(labels);
        if (!o.svg_path.empty()) {
            render.layout = RenderSpec::Layout::cyclic;
            write_file(o.svg_path, render_svg(spec, render));
        }
        if (o.json) {
            out << dump(json{{"kind", "linear"}, {"labels", to_json(labels)}, {"breakdown", to_json(b)}});
            return ok;
        }
        out << "linear construction of " << spec_name(spec) << '\n' << "x labels\n";
        for (Circle a : all_circles) {
            print_family(out, std::string{circle_name(a), circle_name(next(a))}, labels.x_family(a).values, o.labels);
        }
        out << "y labels\n";
        for (Circle a : all_circles)
            for (Circle t : all_circles)
                if (a != t) print_family(out, std::string{circle_name(a), circle_name(t)}, labels.y_family(a, t).values, o.labels);
        out << "crossings\n";
        print_breakdown(out, b);
        return ok;
    }
    if (o.kind == "k22n") {
        if (o.sizes.size() != 1) throw input_error("construct k22n takes one size n");
        const K22nDrawing d = k22n_construction(o.sizes[0]);
        if (!o.svg_path.empty()) {
            render.layout = RenderSpec::Layout::nested;
            write_file(o.svg_path, render_svg(TripartiteSpec(2, 2, d.n), render));
        }
        const count_t red = k22n_red_count(d), green = k22n_green_count(d);
        if (o.json) {
            out << dump(json{{"kind", "k22n"},
                             {"drawing", to_json(d)},
                             {"red", red},
                             {"green", green},
                             {"total", red + green},
                             {"exact", k22n_exact(d.n)}});
            return ok;
        }
        out << "K_{2,2," << d.n << "} construction, type " << d.type << '\n';
        for (int i = 0; i < 4; ++i) out << "  x" << i + 1 << " = " << d.x[i] << "   y" << i + 1 << " = " << d.y[i] << '\n';
        out << "red crossings: " << red << "\ngreen crossings: " << green << "\ntotal: " << red + green << '\n';
        return ok;
    }
    throw input_error("unknown construction '" + o.kind + "' (expected linear or k22n)");
}

void print_tuple(std::ostream& out, const char* label, const std::vector<count_t>& t) {
    out << "  " << label << ": (";
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? ", " : "") << t[i];
    out << ")\n";
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const auto target = parse_target(o.target);
    if (!target) throw input_error("unknown verify target '" + o.target + "'");
    const auto pick = [](int v, int fallback) { return v >= 0 ? v : fallback; };

    err << "verify " << target_name(*target) << ": " << worker_count() << " worker(s)\n";
    VerificationReport r;
    switch (*target) {
        case VerifyTarget::fmin: r = verify_fmin(pick(o.max_n, pick(o.n, 100))); break;
        case VerifyTarget::three_terms: r = verify_three_terms(pick(o.n, 12)); break;
        case VerifyTarget::mixed: r = verify_mixed(pick(o.n, 30)); break;
        case VerifyTarget::ys: r = verify_ys(pick(o.n, 30)); break;
        case VerifyTarget::k22n_lower: {
            const int n = pick(o.n, 6);
            if (n > 10 && o.allow_large) {
                const double states = 4.0 * std::pow(static_cast<double>(n), 8);
                err << "warning: n=" << n << " enumerates " << std::scientific << std::setprecision(2) << states
                    << std::defaultfloat << " states; this may take a long time\n";
            }
            r = verify_k22n_lower(n, VerifyOptions{o.allow_large});
            break;
        }
        case VerifyTarget::bichromatic_min: r = verify_bichromatic_min(o.a, o.b, o.c); break;
        case VerifyTarget::construction: r = verify_construction(pick(o.max_n, pick(o.n, 200))); break;
        case VerifyTarget::table: r = verify_table(pick(o.max_n, 10)); break;
        case VerifyTarget::hh: r = verify_hh(pick(o.n, 13)); break;
    }
    err << "verify " << target_name(*target) << ": done in "
        << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() << " ms\n";

    if (o.json) {
        out << dump(to_json(r));
    } else {
        out << "verify " << target_name(r.target);
        for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
        out << ": " << (r.pass ? "PASS" : "FAIL") << '\n';
        out << "  checked " << r.checked_count << " cases\n";
        for (const auto& [k, v] : r.facts) out << "  " << k << " = " << v << '\n';
        if (r.witness) print_tuple(out, "witness", *r.witness);
        if (r.counterexample) print_tuple(out, "counterexample", *r.counterexample);
    }
    return r.pass ? ok : verification_failed;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const TripartiteSpec spec(o.sizes.at(0), o.sizes.at(1), o.sizes.at(2));
    const StripeDrawing model = linear_stripe_model(spec);
    const CrossingBreakdown b = stripe_breakdown(model);
    const count_t formula = upper_general(spec);
    const bool agree = b.total == formula;
    if (o.json) {
        json j{{"spec", to_json(spec)}, {"oracle", to_json(b)}, {"formula", formula}, {"agree", agree}};
        if (o.dump) j["model"] = to_json(model);
        out << dump(j);
    } else {
        if (o.dump) out << dump(to_json(model));
        out << "stripe oracle " << b.total << " = formula " << formula << ": " << (agree ? "agree" : "DISAGREE") << '\n';
        print_breakdown(out, b);
    }
    return agree ? ok : verification_failed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Crossing numbers of tripartite-circle drawings of K_{m,n,p}", "tricircle"};
    app.require_subcommand(1);
    Options o;

    auto* bounds = app.add_subcommand("bounds", "best known lower and upper bounds for K_{m,n,p}");
    bounds->add_option("sizes", o.sizes, "m n p")->required()->expected(3)->check(CLI::Range(1, 10000));
    bounds->add_flag("--json", o.json, "emit JSON");

    auto* table = app.add_subcommand("table", "reproduce the small balanced table");
    table->add_option("--max-n", o.table_max_n, "largest n (2..10)")->capture_default_str()->check(CLI::Range(2, 10));
    table->add_flag("--csv", o.csv, "emit CSV");
    table->add_flag("--json", o.json, "emit JSON");

    auto* construct = app.add_subcommand("construct", "build a linear or K_{2,2,n} construction");
    construct->add_option("kind", o.kind, "linear or k22n")->required()->check(CLI::IsMember({"linear", "k22n"}));
    construct->add_option("sizes", o.sizes, "m n p for linear, n for k22n")->required()->check(CLI::Range(1, 10000));
    construct->add_option("--svg", o.svg_path, "write an SVG rendering to PATH");
    construct->add_flag("--labels", o.labels, "print every label instead of compressing constant families");
    construct->add_flag("--json", o.json, "emit JSON");
    construct->add_option("--width", o.width, "SVG width")->check(CLI::Range(50, 10000));
    construct->add_option("--height", o.height, "SVG height")->check(CLI::Range(50, 10000));

    auto* verify = app.add_subcommand("verify", "run an exhaustive verification");
    verify->add_option("target", o.target,
                       "fmin | three-terms | mixed | ys | k22n-lb | bichromatic-min | table | hh | construction")
        ->required();
    verify->add_option("--n", o.n, "circle size (N for hh)");
    verify->add_option("--max-n", o.max_n, "upper end of a size range");
    verify->add_option("--a", o.a, "size of A (bichromatic-min)");
    verify->add_option("--b", o.b, "size of B (bichromatic-min)");
    verify->add_option("--c", o.c, "size of C (bichromatic-min)");
    verify->add_flag("--allow-large", o.allow_large, "lift the n <= 10 cap of k22n-lb");
    verify->add_flag("--json", o.json, "emit JSON");

    auto* oracle = app.add_subcommand("oracle", "compare the stripe oracle with the closed form");
    oracle->add_option("sizes", o.sizes, "m n p (each 1..8)")->required()->expected(3)->check(CLI::Range(1, 8));
    oracle->add_flag("--dump", o.dump, "print the stripe model");
    oracle->add_flag("--json", o.json, "emit JSON");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(o, out);
        if (table->parsed()) return cmd_table(o, out);
        if (construct->parsed()) return cmd_construct(o, out);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (oracle->parsed()) return cmd_oracle(o, out);
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const io_failure& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    } catch (const structure_error& e) {
        err << "error: " << e.what() << '\n';
        return verification_failed;
    }
    return usage_error;
}

}  // namespace tricircle::cli
