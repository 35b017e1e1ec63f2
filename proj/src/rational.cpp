#include "okb/rational.hpp"

#include <algorithm>
#include <sstream>

namespace okb {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw SchemaError("rational with zero denominator");
    Rational r(num);
    r /= Rational(den);
    return r;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::runtime_error& e) {
        throw SchemaError("cannot parse rational '" + text + "'");
    }
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

Int rational_floor(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

Int rational_ceil(const Rational& r) { return -rational_floor(-r); }

namespace {

bool int_sqrt(const Int& v, Int* root) {
    if (v < 0) return false;
    Int s = sqrt(v);
    if (s * s == v) {
        *root = s;
        return true;
    }
    return false;
}

}  // namespace

bool rational_sqrt(const Rational& r, Rational* root) {
    if (r < 0) return false;
    Int sn, sd;
    if (!int_sqrt(numerator(r), &sn) || !int_sqrt(denominator(r), &sd)) return false;
    *root = make_rational(sn, sd);
    return true;
}

std::optional<std::int64_t> to_int64(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi) return std::nullopt;
    return v.convert_to<std::int64_t>();
}

bool RatVec::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](const Rational& x) { return x == 0; });
}

RatVec operator+(const RatVec& a, const RatVec& b) {
    if (a.dim() != b.dim()) throw PreconditionError("vector dimension mismatch");
    RatVec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
    if (a.dim() != b.dim()) throw PreconditionError("vector dimension mismatch");
    RatVec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec operator*(const Rational& s, const RatVec& v) {
    RatVec r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
    return r;
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.dim() != b.dim()) throw PreconditionError("vector dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
}

RatVec unit_vec(std::size_t n, std::size_t i) {
    RatVec v(n);
    v[i] = 1;
    return v;
}

RatVec zero_vec(std::size_t n) { return RatVec(n); }

std::string vec_str(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s += ", ";
        s += rational_str(v[i]);
    }
    return s + ")";
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return RatMatrix();
    RatMatrix m(rows.size(), rows.front().dim());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].dim() != m.cols) throw PreconditionError("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_cols(const std::vector<RatVec>& cols) {
    if (cols.empty()) return RatMatrix();
    RatMatrix m(cols.front().dim(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].dim() != m.rows) throw PreconditionError("ragged matrix columns");
        for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RatVec RatMatrix::row(std::size_t i) const {
    RatVec v(cols);
    for (std::size_t j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
}

RatVec RatMatrix::col(std::size_t j) const {
    RatVec v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

RatVec mat_vec(const RatMatrix& m, const RatVec& v) {
    if (m.cols != v.dim()) throw PreconditionError("matrix/vector shape mismatch");
    RatVec r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols != b.rows) throw PreconditionError("matrix shape mismatch");
    RatMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

namespace {

// Row-reduce in place; returns (rank, det-of-leading-square-if-square).
std::pair<std::size_t, Rational> eliminate(RatMatrix& m) {
    Rational det = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
        if (pivot == m.rows) {
            det = 0;
            continue;
        }
        if (pivot != r) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
            det = -det;
        }
        det *= m.at(r, c);
        Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return {r, det};
}

}  // namespace

Rational determinant(const RatMatrix& m) {
    if (m.rows != m.cols) throw PreconditionError("determinant of non-square matrix");
    RatMatrix w = m;
    auto [rk, det] = eliminate(w);
    return rk == m.rows ? det : Rational(0);
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix w = m;
    return eliminate(w).first;
}

std::optional<RatVec> solve(const RatMatrix& A, const RatVec& b) {
    if (A.rows != A.cols || A.rows != b.dim())
        throw PreconditionError("solve expects a square system");
    if (rank(A) < A.rows) return std::nullopt;  // the augmented rank alone would hide inconsistency
    RatMatrix w(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) w.at(i, j) = A.at(i, j);
        w.at(i, A.cols) = b[i];
    }
    eliminate(w);
    RatVec x(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) x[i] = w.at(i, A.cols);
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& A) {
    if (A.rows != A.cols) throw PreconditionError("inverse of non-square matrix");
    std::size_t n = A.rows;
    if (rank(A) < n) return std::nullopt;
    RatMatrix w(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = A.at(i, j);
        w.at(i, n + i) = 1;
    }
    eliminate(w);
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = w.at(i, n + j);
    return inv;
}

std::vector<RatVec> null_space(const RatMatrix& A) {
    RatMatrix w = A;
    auto [rk, det] = eliminate(w);
    (void)det;
    // Identify pivot columns of the reduced matrix.
    std::vector<bool> is_pivot(A.cols, false);
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col(rk, 0);
    for (std::size_t c = 0; c < A.cols && r < rk; ++c) {
        if (w.at(r, c) == 1) {
            bool clean = true;
            for (std::size_t i = 0; i < w.rows; ++i)
                if (i != r && w.at(i, c) != 0) clean = false;
            if (clean) {
                is_pivot[c] = true;
                pivot_col[r] = c;
                ++r;
            }
        }
    }
    std::vector<RatVec> basis;
    for (std::size_t c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(A.cols);
        v[c] = 1;
        for (std::size_t i = 0; i < rk; ++i) v[pivot_col[i]] = -w.at(i, c);
        basis.push_back(v);
    }
    return basis;
}

}  // namespace okb
