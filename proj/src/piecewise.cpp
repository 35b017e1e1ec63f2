#include "okb/piecewise.hpp"

namespace okb {

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> knots, std::vector<Rational> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
    if (knots_.size() < 2 || knots_.size() != values_.size())
        throw PreconditionError("piecewise linear function needs matching knots and values");
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i)
        if (knots_[i] >= knots_[i + 1])
            throw PreconditionError("piecewise linear knots must be strictly increasing");
}

Rational PiecewiseLinear::eval(const Rational& t) const {
    if (t < knots_.front() || t > knots_.back())
        throw PreconditionError("evaluation outside the function domain");
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        if (t > knots_[i + 1]) continue;
        Rational w = (t - knots_[i]) / (knots_[i + 1] - knots_[i]);
        return values_[i] + w * (values_[i + 1] - values_[i]);
    }
    return values_.back();
}

Rational PiecewiseLinear::integral_to(const Rational& t) const {
    if (t < knots_.front() || t > knots_.back())
        throw PreconditionError("integration limit outside the function domain");
    Rational acc = 0;
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        if (t <= knots_[i]) break;
        Rational hi = t < knots_[i + 1] ? t : knots_[i + 1];
        Rational vhi = eval(hi);
        acc += (hi - knots_[i]) * (values_[i] + vhi) / 2;
    }
    return acc;
}

bool PiecewiseLinear::concave() const {
    Rational prev_slope;
    bool have_prev = false;
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        Rational slope = (values_[i + 1] - values_[i]) / (knots_[i + 1] - knots_[i]);
        if (have_prev && slope > prev_slope) return false;
        prev_slope = slope;
        have_prev = true;
    }
    return true;
}

}  // namespace okb
