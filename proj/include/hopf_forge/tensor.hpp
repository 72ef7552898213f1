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

#ifndef HOPF_FORGE_TENSOR_HPP
#define HOPF_FORGE_TENSOR_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "hopf_forge/fp.hpp"
#include "hopf_forge/graded.hpp"
#include "hopf_forge/word.hpp"

namespace hopf {

using DenseVector = std::vector<fp::Residue>;

// T(V) truncated at tensor length N, with V primitive. Words of length n are
// indexed in base dim(V) with the first letter most significant, so column
// order is lexicographic. All tables are built eagerly in the constructor.
class TruncatedHopf {
public:
    TruncatedHopf(GradedModule module, int max_length);

    const GradedModule& module() const noexcept { return module_; }
    const fp::PrimeField& field() const noexcept { return module_.field(); }
    int max_length() const noexcept { return max_length_; }
    std::size_t letters() const noexcept { return module_.dim(); }

    // Throws TruncationOverflow when n > N.
    void check_length(int n) const;

    std::size_t word_count(int n) const { return powers_.at(static_cast<std::size_t>(n)); }
    Word word_at(int n, std::size_t index) const;
    std::size_t index_of(const Word& w) const;
    int word_degree(int n, std::size_t index) const { return degrees_.at(n).at(index); }
    int word_parity(int n, std::size_t index) const { return parities_.at(n).at(index); }

    // Coordinates of the length-n part of x (other lengths must be absent).
    DenseVector to_dense(const TensorElement& x, int n) const;
    TensorElement from_dense(int n, std::span<const fp::Residue> v) const;

    // Concatenation of homogeneous-length dense vectors.
    DenseVector dense_product(int la, std::span<const fp::Residue> a, int lb,
                              std::span<const fp::Residue> b) const;
    // Graded commutator ab - (-1)^{|a||b|} ba of dense vectors, split by parity.
    DenseVector dense_bracket(int la, std::span<const fp::Residue> a, int lb,
                              std::span<const fp::Residue> b) const;

private:
    GradedModule module_;
    int max_length_;
    std::vector<std::size_t> powers_;
    std::vector<std::vector<int>> degrees_;
    std::vector<std::vector<int>> parities_;
};

TensorElement product(const TruncatedHopf& t, const TensorElement& a, const TensorElement& b);

// Signed unshuffle coproduct: sum over position subsets S of
// sign * w|_S (x) w|_{S^c}.
TensorPair coproduct(const GradedModule& m, const Word& w);
TensorPair coproduct(const GradedModule& m, const TensorElement& x);
// Coproduct minus x (x) 1 and 1 (x) x.
TensorPair reduced_coproduct(const GradedModule& m, const TensorElement& x);

// (a (x) b) -> (-1)^{|a||b|} b (x) a.
TensorPair twist(const GradedModule& m, const TensorPair& x);
// Product in T (x) T: (a1 (x) a2)(b1 (x) b2) = (-1)^{|a2||b1|} a1 b1 (x) a2 b2.
TensorPair pair_product(const GradedModule& m, const TensorPair& x, const TensorPair& y);
// (Delta (x) id) and (id (x) Delta) land in T^{(x)3}; triples are encoded as nested pairs
// keyed left-associatively.
std::map<std::vector<Word>, fp::Residue> coassoc_left(const GradedModule& m, const Word& w);
std::map<std::vector<Word>, fp::Residue> coassoc_right(const GradedModule& m, const Word& w);
// (epsilon (x) id) Delta.
TensorElement counit_left(const TensorPair& x);

// A subspace of T(V) given per tensor length by an echelon basis in word
// coordinates. Every subspace built from homogeneous generators is
// homogeneous in degree, so each echelon row has a single degree.
class GradedSubspace {
public:
    static GradedSubspace zero(const TruncatedHopf& t);
    static GradedSubspace unit_line(const TruncatedHopf& t);
    static GradedSubspace whole(const TruncatedHopf& t);
    // V placed in length 1.
    static GradedSubspace generators(const TruncatedHopf& t);

    int max_length() const noexcept { return static_cast<int>(components_.size()) - 1; }
    const fp::EchelonBasis& at(int n) const { return components_.at(static_cast<std::size_t>(n)); }
    fp::EchelonBasis& at(int n) { return components_.at(static_cast<std::size_t>(n)); }
    std::size_t dim(int n) const { return at(n).rank(); }
    std::vector<std::size_t> dims() const;
    // Dimension per degree, read off the pivot words.
    std::map<int, std::size_t> degree_dims(const TruncatedHopf& t, int n) const;

    bool insert(int n, std::span<const fp::Residue> v) { return at(n).insert(v); }
    void absorb(const GradedSubspace& other);

    friend bool operator==(const GradedSubspace&, const GradedSubspace&) = default;

private:
    explicit GradedSubspace(std::vector<fp::EchelonBasis> components)
        : components_(std::move(components)) {}
    static GradedSubspace empty_like(const TruncatedHopf& t);

    std::vector<fp::EchelonBasis> components_;
};

// Span of all products of generator elements, per length, plus the unit line.
GradedSubspace subalgebra_generated(const TruncatedHopf& t, const std::vector<GradedSubspace>& gens);

// Throws InvariantViolation when B_i * B_j is not inside B_{i+j} for some i + j <= N.
void require_product_closed(const TruncatedHopf& t, const GradedSubspace& b);

// Throws InvariantViolation unless every basis row of b in lengths >= 1 is primitive.
void require_primitive(const TruncatedHopf& t, const GradedSubspace& b);

// Representatives of IB / (IB * IB): per length an echelon complement of the
// decomposables inside B_n.
GradedSubspace indecomposables(const TruncatedHopf& t, const GradedSubspace& b);

// k (x)_B T(V) = T(V) / (IB * T(V)) with its induced coalgebra structure.
// Quotient coordinates at length n are the non-pivot words of the ideal's
// echelon form, in increasing order.
class QuotientCoalgebra {
public:
    QuotientCoalgebra(const TruncatedHopf& t, std::vector<fp::EchelonBasis> ideal);

    const TruncatedHopf& algebra() const noexcept { return algebra_; }
    int max_length() const noexcept { return algebra_.max_length(); }
    std::size_t dim(int n) const { return cosets_.at(static_cast<std::size_t>(n)).size(); }
    std::vector<std::size_t> dims() const;
    std::map<int, std::size_t> degree_dims(int n) const;
    const fp::EchelonBasis& ideal(int n) const { return ideal_.at(static_cast<std::size_t>(n)); }
    const std::vector<std::uint32_t>& coset_words(int n) const {
        return cosets_.at(static_cast<std::size_t>(n));
    }

    // Image of a length-n word vector in quotient coordinates.
    DenseVector project(int n, std::span<const fp::Residue> v) const;
    DenseVector project_word(int n, std::size_t index) const;
    // Dense word vector lifting quotient coordinates through the coset words.
    DenseVector lift(int n, std::span<const fp::Residue> coords) const;

    // Columns of the reduced coproduct target at length n: blocks Q_i (x) Q_{n-i}
    // for i = 1..n-1, row-major inside each block.
    std::size_t reduced_target_dim(int n) const;
    // Reduced coproduct of every length-n word, projected to the target; one row per word.
    fp::FpMatrix word_reduced_coproduct(int n) const;
    // The same restricted to coset words: the induced reduced coproduct of Q_n.
    fp::FpMatrix reduced_coproduct_matrix(int n) const;

    // True when the reduced coproduct of every ideal element vanishes in the
    // quotient, i.e. the ideal is a coideal and Delta descends.
    bool coideal_verified(int n) const;

private:
    TruncatedHopf algebra_;
    std::vector<fp::EchelonBasis> ideal_;
    std::vector<std::vector<std::uint32_t>> cosets_;
    std::vector<std::vector<std::int64_t>> coset_position_;
};

QuotientCoalgebra left_ideal_quotient(const GradedSubspace& b, const TruncatedHopf& t,
                                      bool check_closure = true);

// Primitives of Q_n in quotient coordinates.
fp::EchelonBasis primitives(const QuotientCoalgebra& q, int n);
// Primitives of T_n(V) in word coordinates.
fp::EchelonBasis primitives(const TruncatedHopf& t, int n);

}  // namespace hopf

#endif  // HOPF_FORGE_TENSOR_HPP
