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

#include <algorithm>
#include <numeric>

#include "hopf_forge/error.hpp"
#include "hopf_forge/lie.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

const fp::PrimeField F3(3);

std::vector<int> parity_degrees(const GradedModule& v) {
    std::vector<int> out;
    for (Letter i = 0; i < v.dim(); ++i) out.push_back(v.parity(i));
    return out;
}

}  // namespace

TEST_CASE("brackets of letters") {
    const GradedModule v = GradedModule::ungraded(F3, 2);
    const TruncatedHopf t(v, 3);
    const auto x = TensorElement::of(F3, {0}), y = TensorElement::of(F3, {1});
    CHECK(bracket(t, x, x) == TensorElement::of(F3, {0, 0}, 2));
    CHECK(bracket(t, x, y) == bracket(t, y, x));
    CHECK(beta(t, Word{0, 1}) == bracket(t, x, y));
    const GradedModule plain = GradedModule::ungraded(F3, 2, SignMode::plain);
    const TruncatedHopf tp(plain, 3);
    CHECK(bracket(tp, x, x).is_zero());
}

TEST_CASE("free Lie components match brute-force bracket spans") {
    for (const auto& v : {GradedModule::ungraded(F3, 2), GradedModule::with_degrees(F3, {1, 2}),
                          GradedModule::ungraded(F3, 2, SignMode::plain)}) {
        const TruncatedHopf t(v, 7);
        for (int n = 1; n <= 7; ++n)
            CHECK(free_lie_component(t, n).rank() ==
                  oracle::free_lie_dim(parity_degrees(v), static_cast<std::size_t>(n), 3));
    }
}

TEST_CASE("free Lie dims of two odd letters") {
    const TruncatedHopf t(GradedModule::ungraded(F3, 2), 9);
    std::vector<std::size_t> dims;
    for (int n = 1; n <= 9; ++n) dims.push_back(free_lie_component(t, n).rank());
    CHECK(dims == std::vector<std::size_t>{2, 3, 2, 3, 6, 11, 18, 30, 56});
}

TEST_CASE("Witt formula counts Lyndon words") {
    for (std::uint64_t d = 1; d <= 3; ++d)
        for (std::uint64_t n = 1; n <= 7; ++n) CHECK(witt_dim(d, n) == oracle::lyndon_count(d, n));
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(7) == -1);
}

TEST_CASE("ungraded beta ranks follow the Witt formula") {
    for (std::size_t d = 1; d <= 3; ++d) {
        const TruncatedHopf t(GradedModule::ungraded(F3, d, SignMode::plain), 6);
        for (int n = 1; n <= 6; ++n) CHECK(free_lie_component(t, n).rank() == witt_dim(d, static_cast<std::uint64_t>(n)));
    }
}

TEST_CASE("Lbar of two odd letters") {
    const TruncatedHopf t(GradedModule::ungraded(F3, 2), 6);
    std::vector<std::size_t> dims;
    for (int n = 1; n <= 6; ++n) dims.push_back(lbar(t, n).dim());
    CHECK(dims == std::vector<std::size_t>{2, 3, 2, 0, 0, 0});
    const auto q = lbar(t, 3);
    CHECK(q.lie.rank() == q.decomposables.rank() + q.dim());
}

TEST_CASE("Lbar tower degrees") {
    const TruncatedHopf t(GradedModule::with_degrees(F3, {1, 5}), 9);
    const auto tower = lbar_tower(t, 2);
    REQUIRE(tower.size() == 3);
    const std::vector<std::vector<int>> expect{{1, 5}, {7, 11}, {25, 29}};
    for (std::size_t k = 0; k < 3; ++k) {
        auto degs = tower[k].abstract.degrees();
        std::sort(degs.begin(), degs.end());
        CHECK(degs == expect[k]);
        CHECK(tower[k].span.rank() == 2);
    }
}

TEST_CASE("substituting letters by themselves is the identity") {
    const TruncatedHopf t(GradedModule::ungraded(F3, 2), 3);
    std::vector<DenseVector> letters{t.to_dense(TensorElement::of(F3, {0}), 1), t.to_dense(TensorElement::of(F3, {1}), 1)};
    for (std::size_t i = 0; i < t.word_count(3); ++i) {
        DenseVector e(t.word_count(3), 0);
        e[i] = 1;
        CHECK(substitute_letters(t, 3, e, t, 1, letters) == e);
    }
}

TEST_CASE("permutation ranking") {
    CHECK(factorial(5) == 120);
    for (std::size_t r = 0; r < 24; ++r) CHECK(permutation_rank(permutation_unrank(4, r)) == r);
    CHECK(permutation_unrank(3, 0) == std::vector<std::size_t>{0, 1, 2});
    CHECK(permutation_unrank(3, 5) == std::vector<std::size_t>{2, 1, 0});
}

TEST_CASE("Lie(n) is free of rank (n-1)!") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (SignMode mode : {SignMode::plain, SignMode::koszul}) {
            const LieN lie = lie_n_module(n, mode, F3);
            CHECK(lie.rank() == factorial(n - 1));
            CHECK(lie.beta_image_rank() == lie.rank());
            CHECK(lie.left_normed().size() == factorial(n - 1));
        }
    CHECK_THROWS_AS(lie_n_module(8, SignMode::plain, F3), ResourceLimit);
}

TEST_CASE("letter relabelling is a group action on Lie(n)") {
    const LieN lie = lie_n_module(4, SignMode::plain, F3);
    const auto id = fp::FpMatrix::identity(F3, lie.rank());
    const std::vector<std::size_t> s1{1, 0, 2, 3}, s2{0, 2, 1, 3}, s3{0, 1, 3, 2};
    for (const auto& s : {s1, s2, s3}) CHECK(lie.action_matrix(s) * lie.action_matrix(s) == id);
    const auto a = lie.action_matrix(s1) * lie.action_matrix(s2);
    CHECK(a * a * a == id);
    CHECK(lie.action_matrix(s1) * lie.action_matrix(s3) == lie.action_matrix(s3) * lie.action_matrix(s1));
    CHECK(lie.action_matrix({0, 1, 2, 3}) == id);
}

TEST_CASE("coinvariants agree for ungraded modules") {
    for (std::size_t d = 1; d <= 3; ++d) {
        const GradedModule v = GradedModule::ungraded(F3, d, SignMode::plain);
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto r = coinvariants_check(v, n);
            CHECK(r.equal);
            CHECK(r.lhs_dim == r.rhs_dim);
        }
    }
}

TEST_CASE("graded coinvariants differ at n = p by the odd letters") {
    // [x, [x, x]] vanishes in T(V) but not in Lie(3) (x) V^3 at p = 3.
    const auto v2 = coinvariants_check(GradedModule::ungraded(F3, 2), 3);
    CHECK(v2.lhs_dim == 4);
    CHECK(v2.rhs_dim == 2);
    const auto v3 = coinvariants_check(GradedModule::ungraded(F3, 3), 3);
    CHECK(v3.lhs_dim == 11);
    CHECK(v3.rhs_dim == 8);
    const auto mixed = coinvariants_check(GradedModule::with_degrees(F3, {1, 2}), 3);
    CHECK(mixed.lhs_dim == mixed.rhs_dim + 1);
    for (std::size_t n : {1u, 2u, 4u}) CHECK(coinvariants_check(GradedModule::ungraded(F3, 2), n).equal);
    CHECK_THROWS_AS(coinvariants_check(GradedModule::ungraded(F3, 2), 5), ResourceLimit);
}
