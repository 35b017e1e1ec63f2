#include "okb/semigroup.hpp"

#include <algorithm>

namespace okb {

const std::vector<SectionRecord>& GradedValuationData::records_at(long k) const {
    auto it = levels.find(k);
    if (it == levels.end())
        throw PreconditionError("unknown level k=" + std::to_string(k));
    return it->second;
}

namespace {

void validate_record(const GradedValuationData& data, const SectionRecord& rec) {
    if ((int)rec.vals.size() != data.N)
        throw SchemaError("section record does not have one valuation per point");
    for (const auto& v : rec.vals) {
        if (v.order != data.order) throw SchemaError("section record under a foreign order");
        if ((int)v.entries.size() != data.n)
            throw SchemaError("valuation vector of wrong dimension");
    }
}

// Smallest point index attaining the order-minimum of the tuple, and whether
// that minimum is strict against every other entry.
std::pair<int, bool> argmin_of_tuple(const GradedValuationData& data, const SectionRecord& rec) {
    int best = 0;
    bool strict = true;
    for (int i = 1; i < data.N; ++i) {
        Cmp c = compare(rec.vals[i], rec.vals[best]);
        if (c == Cmp::less) {
            best = i;
            strict = true;
        } else if (c == Cmp::equal) {
            strict = false;
        }
    }
    return {best, strict};
}

std::vector<ValuationVector> dedupe(std::vector<ValuationVector> vals) {
    std::sort(vals.begin(), vals.end(), [](const ValuationVector& a, const ValuationVector& b) {
        return a.entries < b.entries;
    });
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

RatVec scaled_point(const ValuationVector& v, long k) {
    RatVec p(v.entries.size());
    for (std::size_t i = 0; i < p.dim(); ++i) p[i] = make_rational(Int(v.entries[i]), Int(k));
    return p;
}

// Hull vertices of a 2D integer point set with int64 cross products; the
// inputs arrive sorted and deduplicated. Falls back to the rational kernel
// when coordinates are large enough to risk overflow in the cross products.
std::vector<RatVec> extreme_scaled_points(const std::vector<ValuationVector>& vals, long k) {
    std::vector<RatVec> out;
    const std::int64_t limit = std::int64_t(1) << 30;
    bool fits = !vals.empty() && vals.front().entries.size() == 2;
    for (const auto& v : vals)
        for (auto x : v.entries)
            if (x < -limit || x > limit) fits = false;
    if (!fits) {
        for (const auto& v : vals) out.push_back(scaled_point(v, k));
        return out;
    }
    auto cross = [](const IntVec& o, const IntVec& a, const IntVec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::size_t n = vals.size();
    std::vector<const IntVec*> pts;
    pts.reserve(n);
    for (const auto& v : vals) pts.push_back(&v.entries);
    std::vector<const IntVec*> hull(2 * n);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (h >= 2 && cross(*hull[h - 2], *hull[h - 1], *pts[i]) <= 0) --h;
        hull[h++] = pts[i];
    }
    for (std::size_t i = n - 1, t = h + 1; i-- > 0;) {
        while (h >= t && cross(*hull[h - 2], *hull[h - 1], *pts[i]) <= 0) --h;
        hull[h++] = pts[i];
    }
    hull.resize(n == 1 ? 1 : h - 1);
    for (const IntVec* p : hull)
        out.push_back(scaled_point(ValuationVector(*p, MonomialOrder::deglex), k));
    return out;
}

bool hull_contains_closure(const Polytope& inner, const Polytope& outer) {
    for (const auto& v : inner.vertices)
        if (!contains(outer, v, ContainMode::closure)) return false;
    return true;
}

}  // namespace

std::vector<ValuationVector> v_split(const GradedValuationData& data, int j, long k) {
    if (j < 0 || j >= data.N) throw PreconditionError("point index out of range");
    std::vector<ValuationVector> out;
    for (const auto& rec : data.records_at(k)) {
        validate_record(data, rec);
        auto [best, strict] = argmin_of_tuple(data, rec);
        if (best == j && strict) out.push_back(rec.vals[j]);
    }
    return dedupe(std::move(out));
}

std::vector<ValuationVector> w_split(const GradedValuationData& data, int j, long k) {
    if (j < 0 || j >= data.N) throw PreconditionError("point index out of range");
    std::vector<ValuationVector> out;
    for (const auto& rec : data.records_at(k)) {
        validate_record(data, rec);
        if (argmin_of_tuple(data, rec).first == j) out.push_back(rec.vals[j]);
    }
    return dedupe(std::move(out));
}

bool check_dimension_partition(const GradedValuationData& data, long k) {
    auto it = data.h0.find(k);
    if (it == data.h0.end())
        throw PreconditionError("no declared h0 for level k=" + std::to_string(k));
    long total = 0;
    for (int j = 0; j < data.N; ++j) total += (long)w_split(data, j, k).size();
    return total == it->second;
}

SemigroupBodyApprox body_approx(const GradedValuationData& data, int j, long k_max, Exec exec) {
    if (k_max < 1) throw PreconditionError("body_approx expects k_max >= 1");
    SemigroupBodyApprox approx;
    approx.j = j;

    std::vector<long> ks;
    for (const auto& [k, recs] : data.levels)
        if (k >= 1 && k <= k_max) ks.push_back(k);

    std::vector<Polytope> hulls(ks.size());
    std::vector<std::vector<RatVec>> scaled(ks.size());
    auto build = [&](std::size_t idx) {
        long k = ks[idx];
        std::vector<RatVec> pts = extreme_scaled_points(v_split(data, j, k), k);
        scaled[idx] = pts;
        hulls[idx] = pts.empty() ? Polytope::make_empty(data.n) : convex_hull(pts);
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long idx = 0; idx < (long long)ks.size(); ++idx) build((std::size_t)idx);
    } else {
        for (std::size_t idx = 0; idx < ks.size(); ++idx) build(idx);
    }

    std::vector<RatVec> all;
    for (std::size_t idx = 0; idx < ks.size(); ++idx) {
        approx.level_hulls[ks[idx]] = hulls[idx];
        all.insert(all.end(), scaled[idx].begin(), scaled[idx].end());
    }
    approx.limit_hull = all.empty() ? Polytope::make_empty(data.n) : convex_hull(all);

    // Conv(V_{k,j}/k) is non-decreasing along divisibility chains, and every
    // per-level hull sits inside the cumulative hull.
    for (const auto& [k, hull] : approx.level_hulls) {
        if (hull.empty()) continue;
        if (!hull_contains_closure(hull, approx.limit_hull))
            throw InvariantError("level hull escapes the cumulative hull");
        for (long m = 2; k * m <= k_max; ++m) {
            auto it = approx.level_hulls.find(k * m);
            if (it == approx.level_hulls.end() || it->second.empty()) continue;
            if (!hull_contains_closure(hull, it->second))
                throw InvariantError("hull monotonicity failed along a divisibility chain");
        }
    }
    return approx;
}

Polytope essential_body(const SemigroupBodyApprox& approx, long k) {
    auto it = approx.level_hulls.find(k);
    if (it == approx.level_hulls.end())
        throw PreconditionError("no hull at level k=" + std::to_string(k));
    Polytope body = it->second;
    if (body.empty()) return body;
    for (int idx : body.coordinate_facets) {
        const Halfspace& h = body.halfspaces[(std::size_t)idx];
        int nonzero = 0;
        for (const auto& x : h.normal.e)
            if (x != 0) ++nonzero;
        if (h.offset != 0 || nonzero != 1)
            throw InvariantError("coordinate facet flag out of sync");
    }
    return body;
}

std::vector<std::pair<long, Rational>> volume_limit_estimate(const GradedValuationData& data,
                                                             int j,
                                                             const std::vector<long>& m_range,
                                                             Exec exec) {
    for (long m : m_range) (void)data.records_at(m);  // validate range up front
    std::vector<std::pair<long, Rational>> out(m_range.size());
    auto eval = [&](std::size_t idx) {
        long m = m_range[idx];
        long count = (long)v_split(data, j, m).size();
        Rational denom = 1;
        for (int i = 0; i < data.n; ++i) denom *= m;
        out[idx] = {m, Rational(count) / denom};
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long idx = 0; idx < (long long)m_range.size(); ++idx) eval((std::size_t)idx);
    } else {
        for (std::size_t idx = 0; idx < m_range.size(); ++idx) eval(idx);
    }
    return out;
}

}  // namespace okb
