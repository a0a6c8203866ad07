#ifndef TRICIRCLE_CLOSED_FORMS_HPP
#define TRICIRCLE_CLOSED_FORMS_HPP

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "tricircle/crossing_calculus.hpp"

namespace tricircle {

/// ⌊n/2⌋⌊(n-1)/2⌋, the minimum of f_n.
count_t f_floor_product(count_t n);

/// Bipartite-circle crossing number of K_{n,n}: n·C(n,3).
count_t cr2_balanced(int n);

/// Bipartite-circle crossing number of K_{m,n} (floor-sum formula, arguments symmetrized).
count_t cr2(int m, int n);

count_t lower_general(const TripartiteSpec& spec);
/// lower_general plus 2 when every circle has at least 3 vertices.
count_t lower_improved(const TripartiteSpec& spec);
count_t upper_general(const TripartiteSpec& spec);

struct BalancedBounds {
    count_t lower = 0;
    count_t upper = 0;
};

/// Closed forms for K_{n,n,n}; requires n >= 3.
BalancedBounds balanced_bounds(int n);

/// Exact tripartite-circle crossing number of K_{2,2,n}; requires n >= 2.
count_t k22n_exact(int n);

struct ImprovedUpper {
    count_t total = 0;
    count_t mono_per_pair = 0;
    count_t bi_per_triple = 0;
    count_t saved = 0;
};

/// Improved upper bound for K_{n,n,n} from the split-vertex drawings; requires n >= 3.
ImprovedUpper improved_upper_balanced(int n);

/// Harary–Hill value H(n) = ¼⌊n/2⌋⌊(n-1)/2⌋⌊(n-2)/2⌋⌊(n-3)/2⌋.
count_t harary_hill(int n);

/// Read-only table of verified constants.
class KnownValueRegistry {
   public:
    static const KnownValueRegistry& instance();

    /// cr(K_n) for 3 <= n <= 12, absent otherwise.
    std::optional<count_t> cr_complete(int n) const;
    /// Hand-drawn balanced upper bounds: (3,3,3) -> 42, (4,4,4) -> 175.
    std::optional<count_t> bespoke_upper(const TripartiteSpec& spec) const;
    /// Exactly known small values: (2,2,2) -> 3.
    std::optional<count_t> exact_small(const TripartiteSpec& spec) const;

    const std::map<int, count_t>& cr_complete_table() const { return cr_complete_; }

   private:
    KnownValueRegistry();
    std::map<int, count_t> cr_complete_;
    std::map<int, count_t> bespoke_;  // keyed by n of (n,n,n)
    std::map<int, count_t> exact_;    // keyed by n of (n,n,n)
};

/// cr(K_{m+n+p}) - C(m,4) - C(n,4) - C(p,4) when m+n+p <= 12, absent otherwise.
/// The value may be negative for lopsided specs; it is still a valid (weak) bound.
std::optional<count_t> lower_via_complete(const TripartiteSpec& spec);

enum class LowerMethod { theorem_general, theorem_general_plus2, complete_graph_decomposition, exact_k22n };
enum class UpperMethod { theorem_general, linear_construction, improved_remark, exact_k22n, registered_constant };

std::string_view method_name(LowerMethod m);
std::string_view method_name(UpperMethod m);

template <class Method>
struct Bound {
    count_t value = 0;
    Method method{};
    /// Every applicable producer, in enum order.
    std::vector<std::pair<Method, count_t>> candidates;
};

struct BoundsReport {
    TripartiteSpec spec;
    Bound<LowerMethod> lower;
    Bound<UpperMethod> upper;
};

BoundsReport best_bounds(const TripartiteSpec& spec);

struct BalancedLowerHH {
    int N = 0;
    int q = 0;
    int r = 0;  // N = 3q + r, r in {-1, 0, 1}; parts (q, q, q+r)
    count_t value = 0;                  // best lower bound on cr3(K_{q,q,q+r}) + 2C(q,4) + C(q+r,4)
    count_t general_theorem_value = 0;  // same, with lower_general in place of the best bound
    count_t harary_hill = 0;
    bool exceeds_hh = false;
};

/// Lower bound on the balanced restricted 3-circle crossing number of K_N; requires N >= 6.
BalancedLowerHH bcr3_balanced_lower(int N);

}  // namespace tricircle

#endif  // TRICIRCLE_CLOSED_FORMS_HPP
