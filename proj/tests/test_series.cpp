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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf_forge/decomp.hpp"
#include "hopf_forge/error.hpp"
#include "hopf_forge/lie.hpp"
#include "hopf_forge/series.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

const fp::PrimeField F3(3);

std::vector<BigInt> big(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

// Subsets of the weights, counted by total weight.
std::vector<std::int64_t> subset_counts(const std::vector<int>& w, int bound) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(bound) + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w.size()); ++mask) {
        int s = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (mask >> i & 1) s += w[i];
        if (s <= bound) ++c[static_cast<std::size_t>(s)];
    }
    return c;
}

// Multisets of the weights, counted by total weight.
std::vector<std::int64_t> multiset_counts(const std::vector<int>& w, int bound, std::size_t from = 0, int used = 0) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(bound) + 1, 0);
    if (from == w.size()) {
        c[static_cast<std::size_t>(used)] = 1;
        return c;
    }
    for (int k = 0; used + k * w[from] <= bound; ++k) {
        const auto sub = multiset_counts(w, bound, from + 1, used + k * w[from]);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += sub[i];
    }
    return c;
}

}  // namespace

TEST_CASE("series arithmetic") {
    const auto geometric = PoincareSeries::from_coefficients(Grading::length, 6, big({1, 1, 1, 1, 1, 1, 1}));
    const auto line = PoincareSeries::from_coefficients(Grading::length, 6, big({1, -1}));
    CHECK(compare(geometric * line, PoincareSeries::one(Grading::length, 6)).equal);
    CHECK(compare(PoincareSeries::one(Grading::length, 6) / line, geometric).equal);
    CHECK_THROWS_AS(geometric / PoincareSeries::from_coefficients(Grading::length, 6, big({2, 1})), PreconditionViolation);
    const auto cmp = compare(geometric, PoincareSeries::one(Grading::length, 6));
    CHECK_FALSE(cmp.equal);
    CHECK(cmp.first_mismatch == 1);
    CHECK(PoincareSeries::from_dims(Grading::length, {1, 2, 3})[2] == 3);
    CHECK(geometric.to_string() == "[1,1,1,1,1,1,1]");
}

TEST_CASE("exterior and graded-commutative series") {
    const std::vector<int> odd{1, 3, 3, 5}, mixed{1, 2, 4, 3};
    CHECK(exterior_weights(Grading::degree, 14, odd).coefficients() == big(subset_counts(odd, 14)));
    // Odd weights are exterior, even weights polynomial.
    const auto expect = subset_counts({1, 3}, 14);
    const auto poly = multiset_counts({2, 4}, 14);
    std::vector<std::int64_t> prod(15, 0);
    for (std::size_t i = 0; i < 15; ++i)
        for (std::size_t j = 0; i + j < 15; ++j) prod[i + j] += expect[i] * poly[j];
    CHECK(graded_commutative_weights(Grading::degree, 14, mixed).coefficients() == big(prod));
}

TEST_CASE("tensor series counts words") {
    const GradedModule v = GradedModule::with_degrees(F3, {1, 5});
    const auto s = tensor_series(v, Grading::degree, 20);
    std::vector<std::int64_t> c(21, 0);
    c[0] = 1;
    for (int d = 1; d <= 20; ++d) c[static_cast<std::size_t>(d)] = c[static_cast<std::size_t>(d - 1)] + (d >= 5 ? c[static_cast<std::size_t>(d - 5)] : 0);
    CHECK(s.coefficients() == big(c));
    CHECK(tensor_series(v, Grading::length, 5)[5] == 32);
}

TEST_CASE("exterior series needs odd generators") {
    CHECK_THROWS_AS(exterior_series(GradedModule::with_degrees(F3, {1, 2}), Grading::length, 4), PreconditionViolation);
    CHECK(exterior_series(GradedModule::with_degrees(F3, {1, 5}), Grading::degree, 8).coefficients() ==
          big({1, 1, 0, 0, 0, 1, 1, 0, 0}));
}

TEST_CASE("Lbar iterate degrees") {
    const GradedModule v = GradedModule::with_degrees(F3, {1, 5});
    CHECK(lbar_iterate_degrees(v, 0) == std::vector<int>{1, 5});
    CHECK(lbar_iterate_degrees(v, 1) == std::vector<int>{7, 11});
    CHECK(lbar_iterate_degrees(v, 2) == std::vector<int>{25, 29});
}

TEST_CASE("closed form series") {
    for (const auto& degs : {std::vector<int>{1, 1}, std::vector<int>{1, 5}}) {
        const GradedModule v = GradedModule::with_degrees(F3, degs);
        CHECK(closed_form_amin_series(v, Grading::length, 12).coefficients() == big(oracle::closed_form_lengths(3, 12)));
        std::vector<std::int64_t> by_degree(41, 0);
        for (const auto& [key, c] : oracle::closed_form_table(3, degs, 40))
            if (key.second <= 40) by_degree[static_cast<std::size_t>(key.second)] += c;
        CHECK(closed_form_amin_series(v, Grading::degree, 40).coefficients() == big(by_degree));
    }
}

TEST_CASE("T factors as A times B") {
    for (const auto& degs : {std::vector<int>{1, 1}, std::vector<int>{1, 5}}) {
        const GradedModule v = GradedModule::with_degrees(F3, degs);
        for (auto [g, bound] : {std::pair{Grading::length, 12}, std::pair{Grading::degree, 40}})
            CHECK(compare(tensor_series(v, g, bound), closed_form_amin_series(v, g, bound) * bmax_series(v, g, bound)).equal);
    }
    const GradedModule v = GradedModule::ungraded(F3, 2);
    const TruncatedHopf t(v, 9);
    CHECK(compare(bmax_series(v, Grading::length, 9), PoincareSeries::from_dims(Grading::length, amin_oracle(t).b.dims())).equal);
}

TEST_CASE("tower identity") {
    const GradedModule v = GradedModule::ungraded(F3, 2);
    const TruncatedHopf t(v, 9);
    for (int k = 0; k <= 1; ++k) {
        const int pk = k == 0 ? 1 : 3;
        const auto lhs = PoincareSeries::from_dims(Grading::length, bk_subalgebra(t, k).dims());
        const auto rhs = PoincareSeries::from_dims(Grading::length, bk_subalgebra(t, k + 1).dims()) *
                         exterior_weights(Grading::length, 9, std::vector<int>(lbar_iter(t, k).embedded.size(), pk));
        CHECK(compare(lhs, rhs).equal);
    }
    CHECK(bk_subalgebra(t, 0) == GradedSubspace::whole(t));
}
