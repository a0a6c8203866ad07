#ifndef TRICIRCLE_VERIFIERS_HPP
#define TRICIRCLE_VERIFIERS_HPP

#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tricircle/crossing_calculus.hpp"

namespace tricircle {

enum class VerifyTarget { fmin, three_terms, mixed, ys, k22n_lower, bichromatic_min, construction, table, hh };

std::string_view target_name(VerifyTarget t);
/// Accepts both the CLI spelling ("three-terms", "k22n-lb") and the enum spelling.
std::optional<VerifyTarget> parse_target(std::string_view s);

struct VerificationReport {
    VerifyTarget target = VerifyTarget::fmin;
    std::map<std::string, count_t> params;
    bool pass = true;
    /// Present iff pass is false.
    std::optional<std::vector<count_t>> counterexample;
    /// Extremal tuple for minimization sweeps (lexicographically smallest minimizer).
    std::optional<std::vector<count_t>> witness;
    std::map<std::string, count_t> facts;
    count_t checked_count = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// d(a,b) + d(b,c) + d(c,d) - d(a,d); always 0, n or 2n.
count_t three_term_residue(int n, int a, int b, int c, int d);

/// Residue predicted from the cyclic order of four distinct points, read off their offsets
/// from a: 0 for order abcd, 2n for adcb, n otherwise.
count_t order_class_residue(int n, int a, int b, int c, int d);

struct MixedBounds {
    count_t lhs = 0;          // 2d(y_i,x_i) + 2d(x_{i+1},y_{i+1}) + f(x_i,x_{i+1})
    count_t general_rhs = 0;  // M + n - 1 - 2Z
    count_t strong_rhs = 0;   // general_rhs plus whichever strengthening applies (or nothing)
    count_t residue = 0;      // three_term_residue(x_{i+1}, y_{i+1}, y_i, x_i)
    int z = 0;                // Z = d(y_{i+1}, y_i)
};

MixedBounds mixed_bounds(int n, int x_i, int x_next, int y_i, int y_next);

struct YsBounds {
    count_t s = 0;  // sum of the four f terms minus 4M
    int z1 = 0;
    int z3 = 0;
    bool alternating = false;  // strict alternation of four distinct labels
    bool tied = false;         // some labels coincide
    count_t case_rhs_times4 = 0;  // case bound scaled by 4 (case (ii) has quarters)
    count_t unconditional_rhs = 0;
};

YsBounds ys_bounds(int n, int y1, int y2, int y3, int y4);

struct TableRow {
    int n = 0;
    std::optional<count_t> lower, improved_lower, improved_upper, upper;
    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Rows 2..n_max of the small-n table, computed from the closed forms and the registry.
std::vector<TableRow> table_rows(int n_max);
/// The published rows, as printed.
const std::vector<TableRow>& reference_table();

struct VerifyOptions {
    bool allow_large = false;  // lifts the n <= 10 cap of verify_k22n_lower
};

VerificationReport verify_fmin(int n_max);
VerificationReport verify_three_terms(int n);
VerificationReport verify_mixed(int n);
VerificationReport verify_ys(int n);
VerificationReport verify_k22n_lower(int n, const VerifyOptions& opts = {});
VerificationReport verify_bichromatic_min(int a, int b, int c);
VerificationReport verify_table(int n_max);
VerificationReport verify_hh(int N);
/// K_{2,2,n} construction against the exact value for 3..n_max, and linear labels,
/// stripe oracle and upper_general for all sizes up to 6.
VerificationReport verify_construction(int n_max);

/// Worker threads used by the sweeps: TRICIRCLE_WORKERS if set, else hardware concurrency.
unsigned worker_count();

}  // namespace tricircle

#endif  // TRICIRCLE_VERIFIERS_HPP
