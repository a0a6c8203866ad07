// Acceptance gate: one line per criterion, exit status 1 if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tricircle/closed_forms.hpp"
#include "tricircle/constructions.hpp"
#include "tricircle/stripe_oracle.hpp"
#include "tricircle/verifiers.hpp"

using namespace tricircle;

namespace {

struct Criterion {
    int id;
    std::string title;
    double limit_s;
    std::function<bool(std::string&)> check;  // fills a short detail string
};

count_t formula_k22n(count_t n) { return 6 * (n / 2) * ((n - 1) / 2) + 2 * n - 3; }

bool table_cells(std::string& detail) {
    const auto report = verify_table(10);
    const auto rows = table_rows(10);
    const count_t lower[] = {38, 146, 452, 1010, 2060, 3650, 6158, 9602};
    const count_t improved_upper[] = {3, 42, 175, 528, 1161, 2430, 4176, 7296, 11025};
    const count_t upper[] = {54, 204, 600, 1323, 2646, 4656, 7776, 12075};
    bool ok = report.pass && rows.size() == 9;
    for (int i = 0; ok && i < 8; ++i) {
        ok = rows[i + 1].lower == lower[i] && rows[i + 1].upper == upper[i];
    }
    for (int i = 0; ok && i < 9; ++i) ok = rows[i].improved_upper == improved_upper[i];
    ok = ok && rows[0].improved_lower == 3 && rows[2].improved_lower == 147;
    for (int i = 0; ok && i < 9; ++i) {
        if (i != 0 && i != 2) ok = !rows[i].improved_lower.has_value();
    }
    ok = ok && !rows[0].lower && !rows[0].upper;
    detail = std::to_string(report.facts.count("cells_matched") ? report.facts.at("cells_matched") : 0) + " cells";
    return ok;
}

bool k22n_exact_range(std::string& detail) {
    for (int n = 3; n <= 200; ++n) {
        const K22nDrawing d = k22n_construction(n);
        if (k22n_total(d) != formula_k22n(n) || k22n_red_count(d) != 4 * ((n + 1) / 2) - 7) {
            detail = "n=" + std::to_string(n);
            return false;
        }
    }
    detail = "n=3..200";
    return true;
}

bool k22n_brute(std::string& detail) {
    for (int n = 3; n <= 8; ++n) {
        const auto r = verify_k22n_lower(n);
        detail += std::to_string(n) + ":" + std::to_string(r.facts.at("minimum")) + " ";
        if (!r.pass || r.facts.at("minimum") != k22n_exact(n)) return false;
    }
    return true;
}

bool oracle_agreement(std::string& detail) {
    int specs = 0;
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n)
            for (int p = 1; p <= 6; ++p) {
                const TripartiteSpec s(m, n, p);
                if (stripe_oracle(linear_stripe_model(s)) != upper_general(s)) {
                    detail = "spec " + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p);
                    return false;
                }
                ++specs;
            }
    const bool named = stripe_oracle(linear_stripe_model({4, 5, 6})) == 576 && stripe_oracle(linear_stripe_model({2, 2, 2})) == 3;
    detail = std::to_string(specs) + " specs";
    return named;
}

bool exhaustive_sweeps(std::string& detail) {
    count_t cases = 0;
    auto take = [&](const VerificationReport& r, const std::string& what) {
        cases += r.checked_count;
        if (!r.pass) detail = what + " failed";
        return r.pass;
    };
    if (!take(verify_fmin(100), "fmin")) return false;
    for (int n = 3; n <= 15; ++n)
        if (!take(verify_three_terms(n), "three-terms n=" + std::to_string(n))) return false;
    for (int n = 3; n <= 30; ++n)
        if (!take(verify_mixed(n), "mixed n=" + std::to_string(n))) return false;
    for (int n = 3; n <= 30; ++n)
        if (!take(verify_ys(n), "ys n=" + std::to_string(n))) return false;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 8; ++c)
                if (!take(verify_bichromatic_min(a, b, c), "bichromatic")) return false;
    detail = std::to_string(cases) + " cases";
    return true;
}

bool bipartite(std::string& detail) {
    for (int n = 1; n <= 30; ++n)
        if (cr2(n, n) != n * binom(n, 3)) return false;
    for (count_t n = 1; n <= 30; ++n)
        for (count_t m = 1; m <= n; ++m)
            if (n % m == 0 && 12 * cr2(static_cast<int>(m), static_cast<int>(n)) != n * (m - 1) * (2 * m * n - 3 * m - n))
                return false;
    // cr2(K_{q,q-1}) = (q-2) C(q,3)
    for (int q = 2; q <= 30; ++q)
        if (cr2(q, q - 1) != (q - 2) * binom(q, 3)) return false;
    detail = "cr2(4,3)=" + std::to_string(cr2(4, 3)) + " cr2(5,4)=" + std::to_string(cr2(5, 4));
    return cr2(4, 3) == 8 && cr2(5, 4) == 30;
}

bool harary_hill_comparisons(std::string& detail) {
    const auto h9 = bcr3_balanced_lower(9);
    const auto h10 = bcr3_balanced_lower(10);
    const auto h13 = bcr3_balanced_lower(13);
    bool ok = h9.value == 38 && h9.harary_hill == 36 && h9.exceeds_hh;
    ok = ok && h10.value >= 62 && h10.general_theorem_value == 62 && h10.harary_hill == 60 && h10.exceeds_hh;
    ok = ok && h13.value >= 227 && h13.general_theorem_value == 227 && h13.harary_hill == 225 && h13.exceeds_hh;
    for (int N = 14; ok && N <= 60; ++N) ok = verify_hh(N).pass;
    for (int n = 8; ok && n <= 200; ++n) {
        const count_t lhs = k22n_exact(n - 4) + binom(n - 4, 4);
        ok = lhs >= harary_hill(n) && ((lhs == harary_hill(n)) == (n <= 11));
    }
    detail = "N=9:" + std::to_string(h9.value) + " N=10:" + std::to_string(h10.value) + "/" +
             std::to_string(h10.general_theorem_value) + " N=13:" + std::to_string(h13.value) + "/" +
             std::to_string(h13.general_theorem_value);
    return ok;
}

bool improved_upper(std::string& detail) {
    const std::pair<int, count_t> totals[] = {{3, 42}, {5, 528}, {6, 1161}, {7, 2430}, {8, 4176}, {9, 7296}, {10, 11025}};
    for (auto [n, v] : totals)
        if (improved_upper_balanced(n).total != v) {
            detail = "n=" + std::to_string(n);
            return false;
        }
    for (count_t n = 3; n <= 100; ++n) {
        const count_t saved = improved_upper_balanced(static_cast<int>(n)).saved;
        const bool ok = n % 2 == 1 ? 4 * saved == 3 * (n * n * n - n * n - n + 1) : 2 * saved == 3 * (n * n * n - 3 * n * n);
        if (!ok) {
            detail = "saved identity at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "totals n=3,5..10; saved n=3..100";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Table reproduction (verify table --max-n 10)", 1, table_cells},
        {2, "Exact K_{2,2,n} construction, 3 <= n <= 200", 1, k22n_exact_range},
        {3, "K_{2,2,n} lower bound by brute force, n = 3..8", 300, k22n_brute},
        {4, "Stripe oracle = upper bound, 1 <= m,n,p <= 6", 10, oracle_agreement},
        {5, "Exhaustive sweeps (fmin, three-terms, mixed, ys, bichromatic-min)", 120, exhaustive_sweeps},
        {6, "Bipartite formulas", 1, bipartite},
        {7, "Harary-Hill comparisons and equality window", 1, harary_hill_comparisons},
        {8, "Improved balanced upper bounds and saved crossings", 1, improved_upper},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_s;
        if (!in_time) detail += " (over time limit)";
        const bool pass = ok && in_time;
        failed += pass ? 0 : 1;
        std::printf("[%s] %d. %s: %s [%.3f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    detail.c_str(), secs, c.limit_s);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
