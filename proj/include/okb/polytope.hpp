#pragma once

// Exact polyhedral kernel in ambient dimension <= 3: convex hulls, halfspace
// intersections, volumes, slices and lattice-point enumeration, all over
// arbitrary-precision rationals. Polytopes carry both a V- and an
// H-representation describing the same set; degenerate (affine-dimension
// deficient) polytopes are ordinary values with volume zero.

#include "okb/rational.hpp"

#include <cstdint>
#include <vector>

namespace okb {

// Execution policy for the data-parallel kernels. `parallel` runs the OpenMP
// versions; `serial` runs the plain reference loops the tests compare against.
enum class Exec { serial, parallel };

// The set {x : normal . x <= offset}. Canonical form scales the normal to a
// primitive integer vector (the direction is meaningful and never flipped).
struct Halfspace {
    RatVec normal;
    Rational offset;

    Halfspace() = default;
    Halfspace(RatVec n, Rational c) : normal(std::move(n)), offset(std::move(c)) {}

    void canonicalize();
    bool operator==(const Halfspace& o) const { return normal == o.normal && offset == o.offset; }
};

struct Polytope {
    int dim = 0;                          // ambient dimension
    int affine_dim = -1;                  // -1 encodes the empty polytope
    std::vector<RatVec> vertices;         // extreme points, lexicographically sorted
    std::vector<Halfspace> halfspaces;    // canonical, irredundant, sorted
    std::vector<int> coordinate_facets;   // halfspaces lying inside some {x_i = 0}

    bool empty() const { return affine_dim < 0; }
    bool full_dim() const { return affine_dim == dim; }

    static Polytope make_empty(int dim);
};

enum class ContainMode { closure, essential_interior };

// Minimal V-representation plus a synthesized H-representation. Lower
// dimensional hulls come back with affine_dim < dim set accordingly.
Polytope convex_hull(const std::vector<RatVec>& points);

// Intersection of halfspaces with redundancy removed. Unbounded and empty
// intersections are reported as distinct errors.
struct EmptyIntersectionError : PreconditionError {
    EmptyIntersectionError() : PreconditionError("halfspace intersection is empty") {}
};
struct UnboundedIntersectionError : PreconditionError {
    UnboundedIntersectionError() : PreconditionError("halfspace intersection is unbounded") {}
};
Polytope halfspace_intersection(int dim, const std::vector<Halfspace>& hs);

// Exact Lebesgue volume in the ambient dimension (0 when affine_dim < dim),
// by fan triangulation anchored at the lexicographically least vertex.
Rational volume(const Polytope& P);

// {A x + b : x in P} for invertible A.
Polytope linear_image(const Polytope& P, const RatMatrix& A, const RatVec& b);

// Dilation t*P (t > 0) and Minkowski sum (hull of pairwise vertex sums).
Polytope dilate(const Polytope& P, const Rational& t);
Polytope minkowski_sum(const Polytope& P, const Polytope& Q);

// The slice {x in P : x_axis = t} expressed in the remaining coordinates.
// May be empty. For dim == 1 the result lives in R^0 (a point or nothing).
Polytope slice_at(const Polytope& P, int axis, const Rational& t);

// Lattice points stored row-major in one flat buffer; megapoint scans would
// drown in per-point allocations otherwise.
struct LatticePointList {
    int dim = 0;
    std::vector<std::int64_t> flat;

    std::size_t size() const { return dim ? flat.size() / (std::size_t)dim : 0; }
    std::int64_t at(std::size_t i, int c) const {
        return flat[i * (std::size_t)dim + (std::size_t)c];
    }
    std::vector<std::vector<std::int64_t>> rows() const;
    bool operator==(const LatticePointList& o) const = default;
};

// All integer vectors of the dilate kP, in lexicographic order, found by a
// bounding-box scan against the (integerized) halfspaces.
LatticePointList lattice_points(const Polytope& P, long k, Exec exec = Exec::parallel);

bool contains(const Polytope& P, const RatVec& x, ContainMode mode);

// Boundary cycle of a full-dimensional 2D polytope, counterclockwise,
// starting from the lexicographically least vertex.
std::vector<RatVec> boundary_cycle(const Polytope& P);

// Vertices of P lying on halfspace h, in convex-position cycle order.
std::vector<RatVec> facet_cycle(const Polytope& P, const Halfspace& h);

}  // namespace okb
