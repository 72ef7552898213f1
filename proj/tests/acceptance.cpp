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

// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerance is the runtime limit of criterion 1.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hopf_forge/decomp.hpp"
#include "hopf_forge/jameshopf.hpp"
#include "hopf_forge/lie.hpp"
#include "hopf_forge/series.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

constexpr double kRuntimeLimitSeconds = 60.0;
constexpr int kMaxLength = 9;
constexpr int kAxiomLength = 6;
constexpr std::size_t kLieMorphismSamples = 24;
constexpr int kSelfmapPairs = 20;
constexpr int kConvolutionPairs = 10;
constexpr std::uint64_t kSeed = 20261015;

const fp::PrimeField F3(3);

struct Verdict {
    bool pass;
    std::string detail;
};

std::vector<GradedModule> test_modules() {
    return {GradedModule::with_degrees(F3, {1, 1}), GradedModule::with_degrees(F3, {1, 5})};
}

std::string label(const GradedModule& v) {
    std::ostringstream os;
    os << "(" << v.degree(0) << "," << v.degree(1) << ")";
    return os.str();
}

template <class T>
std::string join(const std::vector<T>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    return os.str();
}

std::vector<int> parity_degrees(const GradedModule& v) {
    std::vector<int> out;
    for (Letter i = 0; i < v.dim(); ++i) out.push_back(v.parity(i));
    return out;
}

ModuleMap random_map(const GradedModule& v, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, static_cast<int>(v.p()) - 1);
    fp::FpMatrix m(v.field(), v.dim(), v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j)
            if (v.degree(static_cast<Letter>(i)) == v.degree(static_cast<Letter>(j))) m.set(i, j, d(rng));
    return ModuleMap(v, v, m);
}

Verdict criterion1() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::size_t> expect{1, 2, 1, 2, 4, 2, 1, 2, 1, 2};
    const auto product = oracle::closed_form_lengths(3, kMaxLength);
    bool ok = std::vector<std::size_t>(product.begin(), product.end()) == expect;
    std::string detail;
    for (const auto& v : test_modules()) {
        const TruncatedHopf t(v, kMaxLength);
        const auto dims = amin_oracle(t).quotient.dims();
        ok = ok && dims == expect && amin_closed_form(v, kMaxLength).dims == expect;
        detail += label(v) + " [" + join(dims) + "] ";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && secs < kRuntimeLimitSeconds;
    char buf[64];
    std::snprintf(buf, sizeof buf, "in %.2fs", secs);
    return {ok, detail + buf};
}

Verdict criterion2() {
    bool ok = true;
    std::string detail;
    for (const auto& v : test_modules()) {
        const TruncatedHopf t(v, kMaxLength);
        const AminOracle o = amin_oracle(t);
        std::vector<std::size_t> dims;
        for (int n = 1; n <= kMaxLength; ++n) {
            dims.push_back(primitives(o.quotient, n).rank());
            ok = ok && dims.back() == (n == 1 || n == 3 || n == 9 ? 2u : 0u);
        }
        detail += label(v) + " [" + join(dims) + "] ";
    }
    return {ok, detail + "for lengths 1..9"};
}

Verdict criterion3() {
    bool ok = true;
    std::vector<std::size_t> ranks;
    for (std::size_t n = 2; n <= 6; ++n) {
        const LieN lie = lie_n_module(n, SignMode::plain, F3);
        ranks.push_back(lie.rank());
        ok = ok && lie.rank() == factorial(n - 1) && lie.beta_image_rank() == lie.rank();
    }
    ok = ok && ranks == std::vector<std::size_t>{1, 2, 6, 24, 120};
    int cases = 0;
    for (std::size_t d = 1; d <= 3; ++d) {
        const TruncatedHopf t(GradedModule::ungraded(F3, d, SignMode::plain), 6);
        for (int n = 1; n <= 6; ++n, ++cases) {
            const auto rank = free_lie_component(t, n).rank();
            ok = ok && rank == witt_dim(d, static_cast<std::uint64_t>(n)) && rank == oracle::lyndon_count(d, static_cast<std::size_t>(n));
        }
    }
    return {ok, "Lie(n) ranks " + join(ranks) + "; beta_n = Witt in " + std::to_string(cases) + " cases"};
}

Verdict criterion4() {
    bool ok = true;
    for (const auto& v : test_modules())
        for (auto [g, bound] : {std::pair{Grading::length, kDefaultLengthBound}, std::pair{Grading::degree, kDefaultDegreeBound}})
            ok = ok && compare(tensor_series(v, g, bound), closed_form_amin_series(v, g, bound) * bmax_series(v, g, bound)).equal;
    for (const auto& v : test_modules()) {
        const TruncatedHopf t(v, kMaxLength);
        for (int k = 0; k <= 1; ++k) {
            const int pk = k == 0 ? 1 : 3;
            const auto lhs = PoincareSeries::from_dims(Grading::length, bk_subalgebra(t, k).dims());
            const auto rhs = PoincareSeries::from_dims(Grading::length, bk_subalgebra(t, k + 1).dims()) *
                             exterior_weights(Grading::length, kMaxLength, std::vector<int>(lbar_iter(t, k).embedded.size(), pk));
            ok = ok && compare(lhs, rhs).equal;
        }
    }
    return {ok, "T = A B to length 12 and degree 40; tower identity for k = 0, 1 to length 9"};
}

Verdict criterion5() {
    bool ok = true;
    std::string detail;
    for (const auto& v : test_modules()) {
        const TruncatedHopf t(v, kMaxLength);
        for (std::size_t i = 0; i < t.word_count(3); ++i)
            ok = ok && james_hopf(v, 3, t.word_at(3, i)) == TensorElement::of(F3, Word{static_cast<Letter>(i)});
        const auto tr = lbar_transport(t, 1);
        ok = ok && tr.equal && tr.ambient_dim == 512 && tr.lhs_rank == 2 && tr.rhs_rank == 2;
        const auto lm = check_lie_morphism(t, kLieMorphismSamples, kSeed);
        ok = ok && lm.samples >= 20 && lm.pass();
        detail += label(v) + " transport rank " + std::to_string(tr.lhs_rank) + "/" + std::to_string(tr.rhs_rank) +
                  " in " + std::to_string(tr.ambient_dim) + ", morphism " +
                  std::to_string(lm.samples - lm.failures) + "/" + std::to_string(lm.samples) + "; ";
    }
    return {ok, detail + "H_3 is the inclusion"};
}

Verdict criterion6() {
    const auto s = section_search(3);
    bool ok = s.candidates == 729 && s.sections == 0;
    std::string detail = std::to_string(s.sections) + " sections in " + std::to_string(s.candidates) + " candidates";
    for (std::uint32_t p : {3u, 5u}) {
        const auto r = steenrod_obstruction_replay(p);
        ok = ok && r.alternating_solution && r.alpha_pattern && r.terminal_coefficient == 0;
        detail += "; p=" + std::to_string(p) + " terminal " + std::to_string(r.terminal_coefficient);
    }
    return {ok, detail};
}

Verdict criterion7() {
    const GradedModule v = GradedModule::with_degrees(F3, {1, 5});
    const EhpReport r = ehp_report(v, kDefaultDegreeBound);
    const auto sphere = [&](int k) {
        std::int64_t pk = 1;
        for (int i = 0; i < k; ++i) pk *= 3;
        return (r.b_y - 3 + 1) * (pk - 1) / 2 + 1;
    };
    std::int64_t s1 = -1, s2 = -1;
    for (const auto& [k, deg] : r.sphere_degrees) {
        if (k == 1) s1 = deg;
        if (k == 2) s2 = deg;
    }
    const bool ok = r.b_y == 8 && r.shift == 6 && r.b_prime == 6 && s1 == sphere(1) && s1 == 7 && s2 == sphere(2) &&
                    s2 == 25 && r.factorization.equal;
    return {ok, "b_Y=" + std::to_string(r.b_y) + " shift=" + std::to_string(r.shift) + " b'=" + std::to_string(r.b_prime) +
                    " spheres " + std::to_string(s1) + "," + std::to_string(s2) + " factorization to degree 40 " +
                    (r.factorization.equal ? "holds" : "fails")};
}

Verdict criterion8() {
    bool ok = true;
    std::size_t words = 0, products = 0;
    for (const auto& v : test_modules()) {
        const TruncatedHopf t(v, kAxiomLength);
        for (int n = 0; n <= kAxiomLength; ++n)
            for (std::size_t i = 0; i < t.word_count(n); ++i, ++words) {
                const Word w = t.word_at(n, i);
                const TensorPair d = coproduct(v, w);
                ok = ok && coassoc_left(v, w) == coassoc_right(v, w) && twist(v, d) == d &&
                     counit_left(d) == TensorElement::of(F3, w);
                oracle::Pair mine;
                for (const auto& [k, c] : d.terms()) mine[k] = c;
                ok = ok && mine == oracle::multiplicative_coproduct(w, parity_degrees(v), 3);
            }
        for (int la = 0; la <= kAxiomLength; ++la)
            for (int lb = 0; la + lb <= kAxiomLength; ++lb)
                for (std::size_t a = 0; a < t.word_count(la); ++a)
                    for (std::size_t b = 0; b < t.word_count(lb); ++b, ++products) {
                        const Word wa = t.word_at(la, a), wb = t.word_at(lb, b);
                        Word ab = wa;
                        ab.insert(ab.end(), wb.begin(), wb.end());
                        ok = ok && coproduct(v, ab) == pair_product(v, coproduct(v, wa), coproduct(v, wb));
                    }
    }
    return {ok, std::to_string(words) + " words, " + std::to_string(products) + " products over both modules"};
}

Verdict criterion9() {
    bool ok = true;
    std::mt19937_64 rng(kSeed);
    int pairs = 0;
    for (const auto& v : test_modules()) {
        const TruncatedHopf t(v, kMaxLength);
        const AminOracle o = amin_oracle(t);
        for (int s = 0; s < kSelfmapPairs; ++s, ++pairs) {
            const ModuleMap f = random_map(v, rng), g = random_map(v, rng);
            const auto df = selfmap_degree(o.quotient, f, 3, s == 0), dg = selfmap_degree(o.quotient, g, 3, s == 0);
            const auto dfg = selfmap_degree(o.quotient, f.compose(g), 3, s == 0);
            ok = ok && dfg.degree == F3.mul(df.degree, dg.degree);
            for (std::size_t j = 0; j < 3; ++j)
                ok = ok && dfg.level_dets[j] == F3.mul(df.level_dets[j], dg.level_dets[j]);
        }
        for (int s = 0; s < kConvolutionPairs; ++s) {
            const ModuleMap f = random_map(v, rng), g = random_map(v, rng);
            for (int j = 0; j <= 2; ++j) {
                const auto sum = convolution_primitive_sum(o.quotient, f, g, j);
                const auto direct = convolution_direct(o.quotient, f, g, j);
                ok = ok && sum == direct && fp::determinant(sum) == fp::determinant(direct);
            }
        }
    }
    return {ok, "deg^3 multiplicative on " + std::to_string(pairs) + " pairs; convolution at levels 0..2 on " +
                    std::to_string(2 * kConvolutionPairs) + " pairs"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"oracle equivalence", criterion1},   {"primitive support", criterion2},
        {"Lie(n) and Witt ranks", criterion3}, {"series factorization", criterion4},
        {"James-Hopf", criterion5},           {"section search and Steenrod replay", criterion6},
        {"EHP bookkeeping", criterion7},      {"coalgebra axioms", criterion8},
        {"self-map calculus", criterion9},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v{false, ""};
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        failures += !v.pass;
        std::printf("criterion %zu %s: %s: %s\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), v.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
