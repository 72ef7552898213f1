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

#include <numeric>
#include <random>

#include "hopf_forge/config.hpp"
#include "hopf_forge/error.hpp"
#include "hopf_forge/graded.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

const fp::PrimeField F3(3);

GradedModule steenrod_module() {
    return parse_module_config("[module]\np = 3\ngenerators = x:5, y:1, z:1\n[steenrod]\nP^1(x) = y + 2*z\n");
}

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("koszul sign matches inversion counting") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> deg(0, 5);
    for (std::size_t n = 0; n <= 5; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<int> degrees(n);
            for (auto& d : degrees) d = deg(rng);
            std::vector<std::size_t> order(n);
            std::iota(order.begin(), order.end(), 0);
            do {
                CHECK(koszul_sign(order, degrees) == oracle::inversion_sign(order, degrees));
            } while (std::next_permutation(order.begin(), order.end()));
        }
}

TEST_CASE("plain mode has no signs") {
    const GradedModule plain = GradedModule::ungraded(F3, 2, SignMode::plain);
    const GradedModule graded = GradedModule::ungraded(F3, 2);
    const Word w{0, 1, 0};
    const std::vector<std::size_t> reversed{2, 1, 0};
    CHECK(koszul_sign(plain, w, reversed) == 1);
    CHECK(koszul_sign(graded, w, reversed) == -1);
    CHECK(plain.parity(0) == 0);
    CHECK(graded.parity(0) == 1);
}

TEST_CASE("word degree and parity") {
    const GradedModule v = GradedModule::with_degrees(F3, {1, 5});
    CHECK(v.word_degree({0, 1, 1}) == 11);
    CHECK(v.word_parity({0, 1, 1}) == 1);
    CHECK(v.word_parity({0, 1}) == 0);
    CHECK(v.meets_periodicity_hypotheses());
    CHECK_FALSE(GradedModule::with_degrees(F3, {1, 2}).meets_periodicity_hypotheses());
    CHECK_FALSE(GradedModule::with_degrees(F3, {1, 1, 1}).meets_periodicity_hypotheses());
    CHECK(v.index_of("x2") == Letter{1});
    CHECK_FALSE(v.index_of("w").has_value());
}

TEST_CASE("suspension shifts degrees") {
    const GradedModule v = GradedModule::with_degrees(F3, {1, 5});
    const GradedModule s = suspend(v, 3);
    CHECK(s.degrees() == std::vector<int>{4, 8});
    CHECK(s.parity(0) == 0);
    CHECK(suspend(s, -3).degrees() == v.degrees());
}

TEST_CASE("Steenrod operations lower degree by 2i(p - 1)") {
    const GradedModule m = steenrod_module();
    const auto img = m.steenrod_image(1, 0);
    REQUIRE(img.size() == 2);
    for (auto [letter, c] : img) CHECK(m.degree(letter) == m.degree(0) - 4);
    CHECK(m.steenrod_image(1, 1).empty());
    CHECK(m.steenrod_image(0, 2) == LetterCombination{{2, 1}});
}

TEST_CASE("Steenrod operations follow the Cartan formula") {
    const GradedModule m = steenrod_module();
    const std::vector<Word> words{{0}, {1, 0}, {0, 0}, {2, 0, 1}};
    for (const auto& a : words)
        for (const auto& b : words)
            for (int i = 0; i <= 2; ++i) {
                TensorElement expect(F3);
                for (int j = 0; j <= i; ++j) {
                    const auto pa = steenrod_apply(m, j, TensorElement::of(F3, a));
                    const auto pb = steenrod_apply(m, i - j, TensorElement::of(F3, b));
                    for (const auto& [u, c] : pa.terms())
                        for (const auto& [w, d] : pb.terms()) expect.add(concat(u, w), F3.mul(c, d));
                }
                CHECK(steenrod_apply(m, i, TensorElement::of(F3, concat(a, b))) == expect);
            }
    const auto px = steenrod_apply(m, 1, TensorElement::of(F3, {0, 0}));
    CHECK(px.coefficient({1, 0}) == 1);
    CHECK(px.coefficient({0, 2}) == 2);
    CHECK_THROWS_AS(steenrod_apply(GradedModule::ungraded(F3, 2), 1, TensorElement::unit(F3)), UnsupportedOperation);
}

TEST_CASE("module maps") {
    const GradedModule v = GradedModule::ungraded(F3, 2);
    const ModuleMap swap(v, v, fp::FpMatrix::from_rows(F3, {{0, 1}, {1, 0}}));
    const ModuleMap shear(v, v, fp::FpMatrix::from_rows(F3, {{1, 1}, {0, 1}}));
    CHECK(swap.compose(swap).matrix() == ModuleMap::identity(v).matrix());
    CHECK(swap.compose(shear).matrix() == swap.matrix() * shear.matrix());
    CHECK((swap + shear).matrix() == swap.matrix() + shear.matrix());
    CHECK(swap.apply(Word{0, 0, 1}) == TensorElement::of(F3, {1, 1, 0}));
    CHECK(ModuleMap::scalar(v, 2).apply(Word{0, 1, 1}) == TensorElement::of(F3, {0, 1, 1}, 2));
    const auto sheared = shear.apply(Word{1, 1});
    CHECK(sheared.size() == 4);
    CHECK(sheared.coefficient({0, 0}) == 1);
}

TEST_CASE("module maps must preserve degree") {
    const GradedModule v = GradedModule::with_degrees(F3, {1, 5});
    CHECK_THROWS_AS(ModuleMap(v, v, fp::FpMatrix::from_rows(F3, {{0, 1}, {1, 0}})), PreconditionViolation);
    CHECK_THROWS_AS(ModuleMap(v, v, fp::FpMatrix(F3, 3, 2)), DimensionMismatch);
    CHECK_NOTHROW(ModuleMap(v, v, fp::FpMatrix::from_rows(F3, {{2, 0}, {0, 1}})));
}
