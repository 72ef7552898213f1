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
#include "hopf_forge/jameshopf.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

const fp::PrimeField F3(3);

// H_n by listing every reordering of positions whose blocks are increasing
// and ordered by their first entries.
TensorElement james_hopf_oracle(const GradedModule& v, int n, const Word& w) {
    TensorElement out(v.field());
    std::vector<std::size_t> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> degs;
    for (auto a : w) degs.push_back(v.parity(a));
    const auto bn = static_cast<std::size_t>(n);
    do {
        bool ok = true;
        for (std::size_t b = 0; b < order.size() && ok; b += bn) {
            ok = std::is_sorted(order.begin() + static_cast<std::ptrdiff_t>(b),
                                order.begin() + static_cast<std::ptrdiff_t>(b + bn));
            if (b > 0) ok = ok && order[b - bn] < order[b];
        }
        if (!ok) continue;
        Word blocks;
        for (std::size_t b = 0; b < order.size(); b += bn) {
            Letter idx = 0;
            for (std::size_t i = b; i < b + bn; ++i) idx = idx * static_cast<Letter>(v.dim()) + w[order[i]];
            blocks.push_back(idx);
        }
        out.add(blocks, v.field().reduce(oracle::inversion_sign(order, degs)));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

}  // namespace

TEST_CASE("block module") {
    const GradedModule b = block_module(GradedModule::with_degrees(F3, {1, 5}), 3);
    CHECK(b.dim() == 8);
    CHECK(b.degree(0) == 3);
    CHECK(b.degree(7) == 15);
    CHECK(b.name(1) == "x1.x1.x2");
}

TEST_CASE("James-Hopf on one block is the inclusion") {
    for (const auto& v : {GradedModule::ungraded(F3, 2), GradedModule::with_degrees(F3, {1, 5})}) {
        const TruncatedHopf t(v, 3);
        for (std::size_t i = 0; i < t.word_count(3); ++i)
            CHECK(james_hopf(v, 3, t.word_at(3, i)) == TensorElement::of(F3, Word{static_cast<Letter>(i)}));
    }
}

TEST_CASE("James-Hopf matches block enumeration") {
    for (const auto& v : {GradedModule::ungraded(F3, 2), GradedModule::with_degrees(F3, {1, 2})}) {
        const TruncatedHopf t(v, 6);
        for (int n : {2, 3})
            for (std::size_t i = 0; i < t.word_count(6); i += 5) {
                const Word w = t.word_at(6, i);
                CHECK(james_hopf(v, n, w) == james_hopf_oracle(v, n, w));
            }
        CHECK(james_hopf(v, 3, Word{0, 1}).is_zero());
    }
}

TEST_CASE("James-Hopf dense form agrees with the word form") {
    const GradedModule v = GradedModule::ungraded(F3, 2);
    const TruncatedHopf t(v, 6);
    const TruncatedHopf blocks(block_module(v, 3), 2);
    for (std::size_t i = 0; i < t.word_count(6); i += 7) {
        DenseVector e(t.word_count(6), 0);
        e[i] = 1;
        CHECK(blocks.from_dense(2, james_hopf_dense(t, blocks, 3, 2, e)) == james_hopf(v, 3, t.word_at(6, i)));
    }
}

TEST_CASE("James-Hopf restricts to a Lie morphism") {
    for (const auto& v : {GradedModule::ungraded(F3, 2), GradedModule::with_degrees(F3, {1, 5})}) {
        const TruncatedHopf t(v, 9);
        const auto r = check_lie_morphism(t, 24, 7);
        CHECK(r.samples == 24);
        CHECK(r.pass());
    }
}

TEST_CASE("James-Hopf carries Lbar_9 onto Lbar_3 of Lbar_3") {
    const TruncatedHopf t(GradedModule::ungraded(F3, 2), 9);
    const auto r0 = lbar_transport(t, 0);
    CHECK(r0.ambient_dim == 8);
    CHECK(r0.equal);
    const auto r1 = lbar_transport(t, 1);
    CHECK(r1.ambient_dim == 512);
    CHECK(r1.lhs_rank == 2);
    CHECK(r1.rhs_rank == 2);
    CHECK(r1.equal);
}

TEST_CASE("place permutations") {
    const TruncatedHopf t(GradedModule::ungraded(F3, 2), 3);
    const std::vector<std::size_t> id{0, 1, 2}, s{1, 0, 2}, c{1, 2, 0};
    CHECK(place_permutation(t, 3, id) == fp::FpMatrix::identity(F3, 8));
    CHECK(place_permutation(t, 3, s) * place_permutation(t, 3, s) == fp::FpMatrix::identity(F3, 8));
    const auto pc = place_permutation(t, 3, c);
    CHECK(pc * pc * pc == fp::FpMatrix::identity(F3, 8));
}

TEST_CASE("no factorizing section exists at p = 3") {
    const auto r = section_search(3);
    CHECK(r.candidates == 729);
    CHECK(r.q_rank == 2);
    CHECK(r.preserve_q == 243);
    CHECK(r.kill_kernel == 27);
    CHECK(r.sections == 0);
    CHECK(r.identity_preserves_q);
    CHECK_FALSE(r.identity_kills_kernel);
    CHECK_FALSE(r.symmetrizer_preserves_q);
    CHECK_THROWS_AS(section_search(5), ResourceLimit);
}

TEST_CASE("Steenrod replay ends in p k_1") {
    for (std::uint32_t p : {3u, 5u}) {
        const auto r = steenrod_obstruction_replay(p);
        CHECK(r.alternating_solution);
        CHECK(r.alpha_pattern);
        CHECK(r.solutions.rows() == 1);
        REQUIRE(r.alpha_multiples.size() == p - 1);
        // With k_1 = 1 the terminal coefficient is 2 + 1 + ... + 1 = p before reduction.
        std::int64_t integer_sum = 0;
        for (std::size_t i = 0; i < r.alpha_multiples.size(); ++i) {
            const std::int64_t m = oracle::mod(r.alpha_multiples[i], p);
            const std::int64_t lifted = i == 0 ? 2 : (i % 2 ? oracle::mod(-m, p) : m);
            CHECK(lifted == (i == 0 ? 2 : 1));
            integer_sum += lifted;
        }
        CHECK(integer_sum == p);
        CHECK(r.terminal_coefficient == 0);
    }
}
