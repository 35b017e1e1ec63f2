#pragma once

// Total additive monomial orders on Z^n and quasi-monomial valuations.
// Only lex and deglex are built in; other matrix orders are expressed
// through the lambda matrix of a quasi-monomial valuation instead.

#include "okb/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace okb {

using IntVec = std::vector<std::int64_t>;

enum class MonomialOrder { lex, deglex };

enum class Cmp { less, equal, greater };

MonomialOrder order_from_name(const std::string& name);
std::string order_name(MonomialOrder o);

// Lex compares coordinates left to right; deglex compares the coordinate sum
// first and falls back to lex on ties.
Cmp compare(MonomialOrder order, const IntVec& a, const IntVec& b);

// A point of Z^n tagged with the order it is compared under. Comparing
// vectors carrying different orders is a detectable error.
struct ValuationVector {
    IntVec entries;
    MonomialOrder order = MonomialOrder::deglex;

    ValuationVector() = default;
    ValuationVector(IntVec e, MonomialOrder o) : entries(std::move(e)), order(o) {}

    bool operator==(const ValuationVector& o) const {
        return order == o.order && entries == o.entries;
    }
};

Cmp compare(const ValuationVector& a, const ValuationVector& b);
ValuationVector operator+(const ValuationVector& a, const ValuationVector& b);

// Quasi-monomial valuation: rows lambda_1..lambda_n (linearly independent
// over Z), a monomial order, and the label of the center point. A monomial
// z^alpha is sent to sum_i alpha_i lambda_i; for a finite support set the
// valuation of the sum is the order-minimum over the support.
struct QuasiMonomialValuation {
    std::vector<IntVec> lambda;
    MonomialOrder order = MonomialOrder::deglex;
    std::string center_label;
};

ValuationVector monomial_value(const QuasiMonomialValuation& v, const IntVec& alpha);

// F(alpha) = (|alpha|, alpha_1, ..., alpha_{n-1}): the order-preserving
// embedding of (Z^n, deglex) into (Z^n, lex).
IntVec deglex_to_lex(const IntVec& alpha);

// Faithful iff |det lambda| = 1.
bool is_faithful(const QuasiMonomialValuation& v);

}  // namespace okb
