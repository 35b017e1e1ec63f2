#pragma once

// Piecewise linear functions with exact rational breakpoints, evaluation and
// integration. Used for the beta profiles of surface ray bodies and the
// restricted-volume profiles.

#include "okb/rational.hpp"

#include <vector>

namespace okb {

class PiecewiseLinear {
  public:
    PiecewiseLinear() = default;

    // knots strictly increasing, one value per knot; linear in between.
    PiecewiseLinear(std::vector<Rational> knots, std::vector<Rational> values);

    const std::vector<Rational>& knots() const { return knots_; }
    const std::vector<Rational>& values() const { return values_; }
    Rational domain_min() const { return knots_.front(); }
    Rational domain_max() const { return knots_.back(); }

    Rational eval(const Rational& t) const;

    // Exact integral from the first knot up to t (trapezoid per segment).
    Rational integral_to(const Rational& t) const;

    // True iff successive slopes never increase.
    bool concave() const;

  private:
    std::vector<Rational> knots_;
    std::vector<Rational> values_;
};

}  // namespace okb
