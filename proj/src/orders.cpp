#include "okb/orders.hpp"

#include <numeric>

namespace okb {

MonomialOrder order_from_name(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex;
    if (name == "deglex") return MonomialOrder::deglex;
    throw SchemaError("unknown monomial order '" + name + "' (expected \"lex\" or \"deglex\")");
}

std::string order_name(MonomialOrder o) {
    return o == MonomialOrder::lex ? "lex" : "deglex";
}

namespace {

Cmp lex_cmp(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return Cmp::less;
        if (a[i] > b[i]) return Cmp::greater;
    }
    return Cmp::equal;
}

}  // namespace

Cmp compare(MonomialOrder order, const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw PreconditionError("order comparison length mismatch");
    if (order == MonomialOrder::deglex) {
        std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t(0));
        std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t(0));
        if (da < db) return Cmp::less;
        if (da > db) return Cmp::greater;
    }
    return lex_cmp(a, b);
}

Cmp compare(const ValuationVector& a, const ValuationVector& b) {
    if (a.order != b.order)
        throw PreconditionError("comparing valuation vectors under different orders");
    return compare(a.order, a.entries, b.entries);
}

ValuationVector operator+(const ValuationVector& a, const ValuationVector& b) {
    if (a.order != b.order)
        throw PreconditionError("adding valuation vectors under different orders");
    if (a.entries.size() != b.entries.size())
        throw PreconditionError("adding valuation vectors of different lengths");
    IntVec sum(a.entries.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.entries[i] + b.entries[i];
    return {std::move(sum), a.order};
}

ValuationVector monomial_value(const QuasiMonomialValuation& v, const IntVec& alpha) {
    if (alpha.size() != v.lambda.size())
        throw PreconditionError("exponent length does not match the lambda matrix");
    for (auto x : alpha)
        if (x < 0) throw PreconditionError("monomial exponents must be nonnegative");
    std::size_t n = v.lambda.empty() ? 0 : v.lambda.front().size();
    IntVec out(n, 0);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) out[j] += alpha[i] * v.lambda[i][j];
    return {std::move(out), v.order};
}

IntVec deglex_to_lex(const IntVec& alpha) {
    IntVec out(alpha.size());
    if (alpha.empty()) return out;
    out[0] = std::accumulate(alpha.begin(), alpha.end(), std::int64_t(0));
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i) out[i + 1] = alpha[i];
    return out;
}

bool is_faithful(const QuasiMonomialValuation& v) {
    std::size_t n = v.lambda.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v.lambda[i].size() != n)
            throw PreconditionError("lambda matrix must be square");
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rational(v.lambda[i][j]);
    }
    Rational d = determinant(m);
    return d == 1 || d == -1;
}

}  // namespace okb
