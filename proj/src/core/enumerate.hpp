#pragma once

// Exhaustive generation and counting: all valid seeds, all paving and
// sparse-paving matroids via the seed construction, and all matroids of a
// given rank via brute force over basis families filtered by the exchange
// oracle. The brute-force stream is ground truth for the construction-based
// streams.

#include <functional>

#include "paving.hpp"

namespace pavemat {

class CapExceeded : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

enum class MatroidClass { paving, sparse_paving, all_matroids };
enum class CountMode { labeled, isomorphism_classes };
enum class SimplicityFilter { none, paper, standard };

/// Every family of subsets with sizes in [r, n-1] and pairwise intersections
/// <= r-2, including the empty family, each exactly once. Backtracking over
/// candidates in canonical order; deterministic. Capped at n <= 8.
void enumerate_seeds(GroundSet g, int r, const std::function<void(const PavingSeed&)>& emit);

/// construct_paving applied to every seed; distinct seeds give distinct
/// matroids. Same cap as enumerate_seeds.
void enumerate_paving(GroundSet g, int r,
                      const std::function<void(const PavingConstruction&)>& emit);

/// Brute force: every nonempty subset of binom(S,r) that passes the exchange
/// oracle, in ascending candidate-mask order, filtered by the requested
/// simplicity convention. Capped at C(n,r) <= 22. Honors MATROID_MAX_WORKERS.
void enumerate_all_matroids(GroundSet g, int r, SimplicityFilter simplicity,
                            const std::function<void(const Matroid&)>& emit);

/// Minimum over all n! relabelings of the canonically ordered basis family;
/// two matroids are isomorphic iff their canonical forms coincide. Capped at
/// n <= 7.
SetFamily canonical_form(const Matroid& m);

struct EnumerationQuery {
    int n = 0;
    int r = 0;
    MatroidClass cls = MatroidClass::paving;
    CountMode mode = CountMode::labeled;
    SimplicityFilter simplicity = SimplicityFilter::none;
};

struct CountRecord {
    EnumerationQuery query;
    std::uint64_t count = 0;
    double elapsed_seconds = 0.0;
};

CountRecord count_matroids(const EnumerationQuery& query);

/// Numeric check of |M_{n,r}| <= prod_{t=r}^{n-1} |Sp_{n,t}|. The left side
/// is the brute-force matroid count under the given simplicity convention;
/// the factors are construction-based sparse-paving counts.
struct BoundCheck {
    int n = 0;
    int r = 0;
    SimplicityFilter convention = SimplicityFilter::paper;
    std::uint64_t matroid_count = 0;                // |M_{n,r}|
    std::vector<std::uint64_t> sparse_counts;       // |Sp_{n,t}|, t = r..n-1
    std::uint64_t product = 0;
    bool holds = false;
};

BoundCheck verify_counting_inequality(int n, int r, SimplicityFilter convention);

/// Worker cap for parallel enumeration: MATROID_MAX_WORKERS when set and
/// positive, otherwise the hardware concurrency.
int max_workers();

}  // namespace pavemat
