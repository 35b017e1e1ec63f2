#pragma once

// Brute-force side of the theory: graded valuation data for N points, the
// V/W splits of each level, finite-level hulls, essential bodies and the
// normalized-count volume estimator. The toric module emits this data; the
// closed-form bodies cross-validate against it.

#include "okb/orders.hpp"
#include "okb/polytope.hpp"

#include <map>
#include <optional>
#include <vector>

namespace okb {

// One section's valuation tuple: the N valuation vectors of a single section,
// all under one shared order.
struct SectionRecord {
    std::vector<ValuationVector> vals;
};

struct GradedValuationData {
    int n = 0;                                         // ambient dimension
    int N = 0;                                         // number of points
    MonomialOrder order = MonomialOrder::deglex;
    std::map<long, std::vector<SectionRecord>> levels;  // k -> records
    std::map<long, long> h0;                            // declared dim H^0(kL), if known

    const std::vector<SectionRecord>& records_at(long k) const;
};

// V_{k,j}: valuation vectors at point j of sections strictly smaller at j
// than at every other point, duplicates removed, deterministically sorted.
std::vector<ValuationVector> v_split(const GradedValuationData& data, int j, long k);

// W_{k,j}: ties are awarded to the earlier point index, so the N sets
// partition the level.
std::vector<ValuationVector> w_split(const GradedValuationData& data, int j, long k);

// Lemma-level counting check: sum_j #W_{k,j} must equal the declared h^0(k).
bool check_dimension_partition(const GradedValuationData& data, long k);

struct SemigroupBodyApprox {
    int j = 0;
    std::map<long, Polytope> level_hulls;  // Conv(V_{k,j}/k); may hold empty polytopes
    Polytope limit_hull;                   // hull of the union over k <= k_max
};

// Per-level hulls and their cumulative hull up to k_max. Monotonicity of the
// hulls along divisibility chains is asserted.
SemigroupBodyApprox body_approx(const GradedValuationData& data, int j, long k_max,
                                Exec exec = Exec::parallel);

// The level hull with coordinate facets flagged for essential-membership
// queries (they already are; this accessor re-checks and returns it).
Polytope essential_body(const SemigroupBodyApprox& approx, long k);

// (m, #Gamma_j^m / m^n) for each requested level.
std::vector<std::pair<long, Rational>> volume_limit_estimate(const GradedValuationData& data,
                                                             int j, const std::vector<long>& m_range,
                                                             Exec exec = Exec::parallel);

}  // namespace okb
