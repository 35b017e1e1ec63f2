#pragma once

// Closed-form multipoint Okounkov bodies at torus-fixed points: vertex charts
// of a Delzant polytope, the linear-functional subdivision, the half-integer
// Seshadri formula, and the lattice oracle feeding the semigroup engine.

#include "okb/polytope.hpp"
#include "okb/semigroup.hpp"

#include <vector>

namespace okb {

struct VertexChart {
    int vertex_index = -1;
    RatVec vertex;                         // x_sigma, an integer point
    RatMatrix inverse_basis;               // m |-> inverse_basis * (m - vertex)
    std::vector<IntVec> edge_dirs;         // primitive directions of the n edges
    std::vector<long> edge_lengths;        // lattice lengths along those edges
    std::vector<int> edge_far_vertex;      // index of each edge's far endpoint

    RatVec apply(const RatVec& m) const;
};

// Lattice polytope with exactly n unimodular edges at every vertex. The
// constructor validates the Delzant condition everywhere and precomputes the
// per-vertex charts.
class DelzantPolytope {
  public:
    explicit DelzantPolytope(const std::vector<RatVec>& integer_vertices);

    const Polytope& base() const { return base_; }
    int dim() const { return base_.dim; }
    int vertex_count() const { return (int)base_.vertices.size(); }
    const VertexChart& chart(int v) const;

  private:
    Polytope base_;
    std::vector<VertexChart> charts_;
};

struct ToricInput {
    DelzantPolytope polytope;
    std::vector<int> chosen;  // ordered distinct vertex indices p_1..p_R

    ToricInput(DelzantPolytope p, std::vector<int> chosen_vertices);
};

// Chart at a vertex; throws on a non-Delzant vertex (already validated at
// construction, re-exposed for direct queries).
const VertexChart& vertex_chart(const DelzantPolytope& P, int v);

// l_j(m): sum of the chart coordinates of m. Its level sets are the
// hyperplanes cutting the subdivision.
Rational vanishing_order(const DelzantPolytope& P, int v, const RatVec& m);

// P_j = {m in P : l_j(m) <= l_i(m) for all chosen i}; covers P with
// pairwise disjoint interiors.
std::vector<Polytope> toric_subdivision(const ToricInput& input);

// Chart image of P_j: the multipoint Okounkov body at p_j, with coordinate
// facets flagged.
Polytope toric_body(const ToricInput& input, int j);

// Multipoint Seshadri constant of the chosen torus-fixed points: minimum of
// the reparametrized edge lengths (halved when the far endpoint is chosen).
Rational toric_seshadri(const ToricInput& input);

// For each k <= k_max every lattice point of kP becomes one section record
// whose entries are the chart images at the chosen vertices, under deglex;
// the lattice-point count is attached as h^0(k).
GradedValuationData toric_oracle_export(const ToricInput& input, long k_max,
                                        Exec exec = Exec::parallel);

struct ToricVolumeCheck {
    Rational lhs;  // n! * sum_j Vol(Delta_j)
    Rational rhs;  // n! * Vol(P)
    bool equal = false;
};

ToricVolumeCheck toric_volume_check(const ToricInput& input);

}  // namespace okb
