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

#ifndef HOPF_FORGE_LIE_HPP
#define HOPF_FORGE_LIE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hopf_forge/fp.hpp"
#include "hopf_forge/graded.hpp"
#include "hopf_forge/tensor.hpp"
#include "hopf_forge/word.hpp"

namespace hopf {

// Graded commutator ab - (-1)^{|a||b|} ba, term by term.
TensorElement bracket(const TruncatedHopf& t, const TensorElement& a, const TensorElement& b);

// Left-normed bracket [[a1, a2], ..., an]; beta of a single letter is the letter.
TensorElement beta(const TruncatedHopf& t, const Word& w);
DenseVector beta_dense(const TruncatedHopf& t, int n, std::size_t index);

// L_n(V) in word coordinates, the image of beta_n.
fp::EchelonBasis free_lie_component(const TruncatedHopf& t, int n);
// L_1 .. L_N together; length 0 is zero.
GradedSubspace free_lie_algebra(const TruncatedHopf& t);

struct LieQuotient {
    fp::EchelonBasis lie;             // L_n
    fp::EchelonBasis decomposables;   // sum of [L_i, L_{n-i}], 2 <= i <= n-2
    fp::EchelonBasis representatives; // echelon complement inside L_n
    std::size_t dim() const { return representatives.rank(); }
};

// L_n(V) / sum_{i=2}^{n-2} [L_i(V), L_{n-i}(V)].
LieQuotient lbar(const TruncatedHopf& t, int n);

struct LbarIterate {
    int k;
    GradedModule abstract;              // generators named after level and index
    std::vector<DenseVector> embedded;  // one vector in T_{p^k}(V) per generator
    fp::EchelonBasis span;              // their span
};

// The k-fold iterate of lbar_p, as an abstract module and embedded in
// V^{(x)p^k}. Requires p^k <= N.
LbarIterate lbar_iter(const TruncatedHopf& t, int k);
std::vector<LbarIterate> lbar_tower(const TruncatedHopf& t, int k);

// Image of a length-n element of T(W) under the algebra map sending letter a of W
// to letters[a], a vector in length `letter_length` of the target.
DenseVector substitute_letters(const TruncatedHopf& source, int n, std::span<const fp::Residue> x,
                               const TruncatedHopf& target, int letter_length,
                               const std::vector<DenseVector>& letters);

// (1/n) sum_{e | n} mu(e) d^{n/e}.
std::uint64_t witt_dim(std::uint64_t d, std::uint64_t n);
int mobius(std::uint64_t n);

// Lexicographic rank of a permutation of 0..n-1 and its inverse.
std::size_t permutation_rank(const std::vector<std::size_t>& perm);
std::vector<std::size_t> permutation_unrank(std::size_t n, std::size_t rank);
std::uint64_t factorial(std::size_t n);

// gamma_n: span of the n! words in distinct letters e_1..e_n, coordinates by
// permutation rank. Lie(n) is its intersection with L_n.
class LieN {
public:
    std::size_t n() const noexcept { return n_; }
    SignMode mode() const noexcept { return mode_; }
    const fp::EchelonBasis& span() const noexcept { return span_; }
    std::size_t rank() const noexcept { return span_.rank(); }
    // Left-normed brackets [[e_1, e_s(2)], ..., e_s(n)].
    const std::vector<fp::SparseVector>& left_normed() const noexcept { return left_normed_; }
    // Rank of beta_n over all of gamma_n.
    std::size_t beta_image_rank() const noexcept { return beta_image_rank_; }

    // Letter relabelling e_i -> e_{sigma(i)} on a gamma_n vector.
    fp::SparseVector sigma_action(const std::vector<std::size_t>& sigma, const fp::SparseVector& v) const;
    // Matrix of sigma on Lie(n) in the echelon row basis; row j is the image of row j.
    fp::FpMatrix action_matrix(const std::vector<std::size_t>& sigma) const;

    friend LieN lie_n_module(std::size_t n, SignMode mode, fp::PrimeField field);

private:
    LieN(std::size_t n, SignMode mode, fp::PrimeField field);

    std::size_t n_;
    SignMode mode_;
    fp::PrimeField field_;
    fp::EchelonBasis span_;
    std::vector<fp::SparseVector> left_normed_;
    std::size_t beta_image_rank_ = 0;
};

// Throws ResourceLimit for n > 7.
LieN lie_n_module(std::size_t n, SignMode mode, fp::PrimeField field);

struct CoinvariantsReport {
    std::size_t lhs_dim;
    std::size_t rhs_dim;
    bool equal;
};

// Lie(n) (x)_{Sigma_n} V^{(x)n} against L_n(V). Requires n <= 4, dim V <= 3.
CoinvariantsReport coinvariants_check(const GradedModule& v, std::size_t n);

}  // namespace hopf

#endif  // HOPF_FORGE_LIE_HPP
