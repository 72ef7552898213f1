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

#ifndef HOPF_FORGE_JAMESHOPF_HPP
#define HOPF_FORGE_JAMESHOPF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hopf_forge/fp.hpp"
#include "hopf_forge/graded.hpp"
#include "hopf_forge/tensor.hpp"

namespace hopf {

// V^{(x)n} as a module: one letter per length-n word, indexed like T_n(V),
// with the word's degree.
GradedModule block_module(const GradedModule& v, int n);

// Associated-graded James-Hopf map H_n : T(V) -> T(V^{(x)n}). A word of
// length nk maps to the signed sum over partitions of its positions into k
// blocks of size n, blocks ordered by their smallest position. Words of
// other lengths map to zero.
TensorElement james_hopf(const GradedModule& v, int n, const Word& w);
TensorElement james_hopf(const GradedModule& v, int n, const TensorElement& x);
// Dense form: x in T_{nk}(V) to T_k(V^{(x)n}).
DenseVector james_hopf_dense(const TruncatedHopf& t, const TruncatedHopf& blocks, int n, int k,
                             std::span<const fp::Residue> x);

struct LieMorphismReport {
    std::size_t samples;
    std::size_t failures;
    bool pass() const noexcept { return failures == 0; }
};

// H_p([u, v]) = [H_p(u), H_p(v)] for random u, v in the sub-Lie-algebra
// generated by L_p(V) inside T_{<= N}(V).
LieMorphismReport check_lie_morphism(const TruncatedHopf& t, std::size_t samples, std::uint64_t seed);

struct TransportReport {
    int k;
    std::size_t ambient_dim;
    std::size_t lhs_rank;
    std::size_t rhs_rank;
    bool equal;
};

// H_p of the embedded lbar_p^{k+1}(V) against lbar_p^k(lbar_p(V)) inside
// T_{p^k}(V^{(x)p}). Requires p^{k+1} <= N.
TransportReport lbar_transport(const TruncatedHopf& t, int k);

struct SectionSearchReport {
    std::size_t candidates;
    std::size_t preserve_q;    // q o e = q
    std::size_t kill_kernel;   // e vanishes on ker q
    std::size_t sections;      // both
    bool identity_preserves_q;
    bool identity_kills_kernel;
    bool symmetrizer_preserves_q;
    std::size_t q_rank;
};

// Exhaustive sweep of F_3[Sigma_3] acting by signed place permutations on
// the cube of two degree-1 letters. Throws ResourceLimit for p != 3.
SectionSearchReport section_search(std::uint32_t p);

// Place permutation rho(sigma) on V^{(x)n}: the factor in position i moves to
// position sigma(i), with the Koszul sign. Column u is the image of word u.
fp::FpMatrix place_permutation(const TruncatedHopf& t, int n, const std::vector<std::size_t>& sigma);

struct SteenrodReplay {
    std::uint32_t p;
    // Constraint rows on (k_1, ..., k_{p-1}) and their solution space.
    fp::FpMatrix constraints;
    fp::FpMatrix solutions;
    bool alternating_solution;  // solutions spanned by (1, -1, 1, ...)
    // q(alpha_i) as multiples of a fixed generator u of lbar_p.
    std::vector<std::int64_t> alpha_multiples;
    bool alpha_pattern;          // 2, -1, 1, -1, ... as in the terminal step
    fp::Residue terminal_coefficient;  // sum_i (-1)^{i-1} multiple_i, equal to p k_1 for k_1 = 1
};

SteenrodReplay steenrod_obstruction_replay(std::uint32_t p);

}  // namespace hopf

#endif  // HOPF_FORGE_JAMESHOPF_HPP
