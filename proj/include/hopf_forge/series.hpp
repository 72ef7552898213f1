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

#ifndef HOPF_FORGE_SERIES_HPP
#define HOPF_FORGE_SERIES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopf_forge/graded.hpp"

namespace hopf {

using BigInt = boost::multiprecision::cpp_int;

enum class Grading { length, degree };

inline constexpr int kDefaultLengthBound = 12;
inline constexpr int kDefaultDegreeBound = 40;

const char* to_string(Grading g) noexcept;

// Integer power series truncated after t^bound.
class PoincareSeries {
public:
    PoincareSeries(Grading grading, int bound);

    static PoincareSeries one(Grading grading, int bound);
    static PoincareSeries from_coefficients(Grading grading, int bound, const std::vector<BigInt>& c);
    static PoincareSeries from_dims(Grading grading, const std::vector<std::size_t>& dims);
    static PoincareSeries from_degree_dims(int bound, const std::map<int, std::size_t>& dims);

    Grading grading() const noexcept { return grading_; }
    int bound() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    void set(int i, BigInt value);
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    // Results are truncated at the smaller bound.
    PoincareSeries operator*(const PoincareSeries& rhs) const;
    // Requires rhs[0] == 1.
    PoincareSeries operator/(const PoincareSeries& rhs) const;

    std::string to_string() const;

private:
    Grading grading_;
    std::vector<BigInt> coeffs_;
};

struct SeriesComparison {
    bool equal;
    std::optional<int> first_mismatch;
};

// Coefficientwise comparison up to the smaller bound.
SeriesComparison compare(const PoincareSeries& a, const PoincareSeries& b);

// prod (1 + t^w) over the weights.
PoincareSeries exterior_weights(Grading grading, int bound, const std::vector<int>& weights);
// prod over odd w of (1 + t^w), over even w of 1/(1 - t^w).
PoincareSeries graded_commutative_weights(Grading grading, int bound, const std::vector<int>& weights);

PoincareSeries tensor_series(const GradedModule& v, Grading grading, int bound);
// Throws PreconditionViolation on an even generator.
PoincareSeries exterior_series(const GradedModule& v, Grading grading, int bound);

// Degrees of the generators of lbar_p^k(V): (p^k - 1)/(p - 1) * b' + l_i.
std::vector<int> lbar_iterate_degrees(const GradedModule& v, int k);

// prod_k E(lbar_p^k(V)); requires V odd-only with dim V = p - 1.
PoincareSeries closed_form_amin_series(const GradedModule& v, Grading grading, int bound);

}  // namespace hopf

#endif  // HOPF_FORGE_SERIES_HPP
