/* Copyright 2026 The hopf-forge Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "hopf_forge/series.hpp"

#include <sstream>

#include "hopf_forge/error.hpp"

namespace hopf {

const char* to_string(Grading g) noexcept { return g == Grading::length ? "length" : "degree"; }

PoincareSeries::PoincareSeries(Grading grading, int bound) : grading_(grading) {
    if (bound < 0) throw PreconditionViolation("series bound must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(bound) + 1, 0);
}

PoincareSeries PoincareSeries::one(Grading grading, int bound) {
    PoincareSeries s(grading, bound);
    s.coeffs_[0] = 1;
    return s;
}

PoincareSeries PoincareSeries::from_coefficients(Grading grading, int bound, const std::vector<BigInt>& c) {
    PoincareSeries s(grading, bound);
    for (std::size_t i = 0; i < c.size() && i < s.coeffs_.size(); ++i) s.coeffs_[i] = c[i];
    return s;
}

PoincareSeries PoincareSeries::from_dims(Grading grading, const std::vector<std::size_t>& dims) {
    if (dims.empty()) throw PreconditionViolation("series from an empty dimension list");
    PoincareSeries s(grading, static_cast<int>(dims.size()) - 1);
    for (std::size_t i = 0; i < dims.size(); ++i) s.coeffs_[i] = dims[i];
    return s;
}

PoincareSeries PoincareSeries::from_degree_dims(int bound, const std::map<int, std::size_t>& dims) {
    PoincareSeries s(Grading::degree, bound);
    for (const auto& [deg, dim] : dims)
        if (deg >= 0 && deg <= bound) s.coeffs_[static_cast<std::size_t>(deg)] += dim;
    return s;
}

void PoincareSeries::set(int i, BigInt value) { coeffs_.at(static_cast<std::size_t>(i)) = std::move(value); }

PoincareSeries PoincareSeries::operator*(const PoincareSeries& rhs) const {
    if (grading_ != rhs.grading_) throw DimensionMismatch("series with different gradings");
    const int top = std::min(bound(), rhs.bound());
    PoincareSeries out(grading_, top);
    for (int i = 0; i <= top; ++i) {
        if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= top; ++j)
            out.coeffs_[static_cast<std::size_t>(i + j)] +=
                coeffs_[static_cast<std::size_t>(i)] * rhs.coeffs_[static_cast<std::size_t>(j)];
    }
    return out;
}

PoincareSeries PoincareSeries::operator/(const PoincareSeries& rhs) const {
    if (grading_ != rhs.grading_) throw DimensionMismatch("series with different gradings");
    if (rhs.coeffs_[0] != 1) throw PreconditionViolation("series divisor must have constant term 1");
    const int top = std::min(bound(), rhs.bound());
    PoincareSeries out(grading_, top);
    for (int n = 0; n <= top; ++n) {
        BigInt acc = coeffs_[static_cast<std::size_t>(n)];
        for (int j = 1; j <= n; ++j)
            acc -= rhs.coeffs_[static_cast<std::size_t>(j)] * out.coeffs_[static_cast<std::size_t>(n - j)];
        out.coeffs_[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

std::string PoincareSeries::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
    os << ']';
    return os.str();
}

SeriesComparison compare(const PoincareSeries& a, const PoincareSeries& b) {
    if (a.grading() != b.grading()) throw DimensionMismatch("series with different gradings");
    const int top = std::min(a.bound(), b.bound());
    for (int i = 0; i <= top; ++i)
        if (a[i] != b[i]) return {false, i};
    return {true, std::nullopt};
}

PoincareSeries exterior_weights(Grading grading, int bound, const std::vector<int>& weights) {
    PoincareSeries s = PoincareSeries::one(grading, bound);
    for (int w : weights) {
        if (w <= 0) throw PreconditionViolation("exterior generator of nonpositive weight");
        for (int i = bound; i >= w; --i) s.set(i, s[i] + s[i - w]);
    }
    return s;
}

PoincareSeries graded_commutative_weights(Grading grading, int bound, const std::vector<int>& weights) {
    PoincareSeries s = PoincareSeries::one(grading, bound);
    for (int w : weights) {
        if (w <= 0) throw PreconditionViolation("generator of nonpositive weight");
        if (w % 2 == 1) {
            for (int i = bound; i >= w; --i) s.set(i, s[i] + s[i - w]);
        } else {
            for (int i = w; i <= bound; ++i) s.set(i, s[i] + s[i - w]);
        }
    }
    return s;
}

PoincareSeries tensor_series(const GradedModule& v, Grading grading, int bound) {
    PoincareSeries denom = PoincareSeries::one(grading, bound);
    for (Letter g = 0; g < v.dim(); ++g) {
        const int w = grading == Grading::length ? 1 : v.degree(g);
        if (w <= 0) throw PreconditionViolation("degree series needs positive generator degrees");
        if (w <= bound) denom.set(w, denom[w] - 1);
    }
    return PoincareSeries::one(grading, bound) / denom;
}

PoincareSeries exterior_series(const GradedModule& v, Grading grading, int bound) {
    std::vector<int> weights;
    for (Letter g = 0; g < v.dim(); ++g) {
        if (v.degree(g) % 2 == 0)
            throw PreconditionViolation("exterior algebra needs odd generators; '" + v.name(g) + "' is even");
        weights.push_back(grading == Grading::length ? 1 : v.degree(g));
    }
    return exterior_weights(grading, bound, weights);
}

std::vector<int> lbar_iterate_degrees(const GradedModule& v, int k) {
    if (k < 0) throw PreconditionViolation("negative iterate index");
    const auto p = static_cast<std::int64_t>(v.p());
    std::int64_t b = 0;
    for (int d : v.degrees()) b += d;
    std::int64_t pk = 1;
    for (int j = 0; j < k; ++j) pk *= p;
    std::vector<int> out;
    for (int d : v.degrees()) {
        const std::int64_t deg = (pk - 1) / (p - 1) * b + d;
        if (deg > std::numeric_limits<int>::max()) throw ResourceLimit("iterate degree overflows");
        out.push_back(static_cast<int>(deg));
    }
    return out;
}

PoincareSeries closed_form_amin_series(const GradedModule& v, Grading grading, int bound) {
    if (!v.meets_periodicity_hypotheses())
        throw PreconditionViolation("closed form needs V concentrated in odd degrees with dim V = p - 1");
    const auto p = static_cast<std::int64_t>(v.p());
    std::vector<int> weights;
    std::int64_t pk = 1;
    for (int k = 0;; ++k) {
        const std::vector<int> degs = lbar_iterate_degrees(v, k);
        bool any = false;
        for (int d : degs) {
            const std::int64_t w = grading == Grading::length ? pk : d;
            if (w <= bound) {
                weights.push_back(static_cast<int>(w));
                any = true;
            }
        }
        if (!any) break;
        pk *= p;
    }
    return exterior_weights(grading, bound, weights);
}

}  // namespace hopf
