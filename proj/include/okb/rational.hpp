#pragma once

// Exact rational scalars, vectors and small dense matrices. Every geometric
// predicate in this project runs on these types; no floating point anywhere.
// Rationals are kept in lowest terms with positive denominator by the
// boost.multiprecision backend.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace okb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error taxonomy shared by the whole library. The CLI maps these onto its
// exit-code contract (schema 2, precondition 3, invariant 4).
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Build p/q with sign fixed up; q = 0 is a schema-level error.
Rational make_rational(const Int& num, const Int& den);

// Parse "p/q", "p", or "-p/q". Whitespace is not accepted.
Rational parse_rational(const std::string& text);

// Render as "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& r);

// Floor/ceil to Int (exact).
Int rational_floor(const Rational& r);
Int rational_ceil(const Rational& r);

// True iff r is the square of a rational; *root receives the nonnegative root.
bool rational_sqrt(const Rational& r, Rational* root);

// Checked narrowing for the integer fast paths of the lattice kernels.
std::optional<std::int64_t> to_int64(const Int& v);

// ---------------------------------------------------------------------------

struct RatVec {
    std::vector<Rational> e;

    RatVec() = default;
    explicit RatVec(std::size_t n) : e(n) {}
    RatVec(std::initializer_list<Rational> xs) : e(xs) {}

    std::size_t dim() const { return e.size(); }
    Rational& operator[](std::size_t i) { return e[i]; }
    const Rational& operator[](std::size_t i) const { return e[i]; }

    bool operator==(const RatVec& o) const { return e == o.e; }
    bool operator!=(const RatVec& o) const { return !(*this == o); }

    bool is_zero() const;
};

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& s, const RatVec& v);
Rational dot(const RatVec& a, const RatVec& b);

// Lexicographic comparison, used wherever a deterministic anchor is needed.
bool lex_less(const RatVec& a, const RatVec& b);

RatVec unit_vec(std::size_t n, std::size_t i);
RatVec zero_vec(std::size_t n);

std::string vec_str(const RatVec& v);

// ---------------------------------------------------------------------------

// Row-major dense matrix. Everything here is small (n <= 3 geometry, Picard
// rank <= 9), so the plain Gaussian elimination below is entirely adequate.
struct RatMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> a;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVec>& rows);
    static RatMatrix from_cols(const std::vector<RatVec>& cols);

    RatVec row(std::size_t i) const;
    RatVec col(std::size_t j) const;

    bool operator==(const RatMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

RatVec mat_vec(const RatMatrix& m, const RatVec& v);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
Rational determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Solve A x = b for square A; nullopt when A is singular.
std::optional<RatVec> solve(const RatMatrix& A, const RatVec& b);

// Inverse of a square matrix; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& A);

// Basis of the null space {x : A x = 0}.
std::vector<RatVec> null_space(const RatMatrix& A);

}  // namespace okb
