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

#ifndef HOPF_FORGE_FP_HPP
#define HOPF_FORGE_FP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hopf::fp {

using Residue = std::uint32_t;

// The prime field F_p for an odd prime p chosen at runtime.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    Residue reduce(std::int64_t x) const noexcept {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    Residue add(Residue a, Residue b) const noexcept {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Residue pow(Residue a, std::uint64_t e) const noexcept;
    // Throws InvariantViolation on zero.
    Residue inv(Residue a) const;

    // Representative in (-p/2, p/2], handy for printing signs.
    std::int64_t to_signed(Residue a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

class FpMatrix {
public:
    FpMatrix(PrimeField field, std::size_t rows, std::size_t cols);

    static FpMatrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);
    static FpMatrix identity(PrimeField field, std::size_t n);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t value) {
        data_[r * cols_ + c] = field_.reduce(value);
    }
    void add_to(std::size_t r, std::size_t c, Residue value) {
        Residue& slot = data_[r * cols_ + c];
        slot = field_.add(slot, value);
    }

    std::span<const Residue> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    FpMatrix transpose() const;
    FpMatrix operator*(const FpMatrix& rhs) const;
    FpMatrix operator+(const FpMatrix& rhs) const;
    bool is_zero() const noexcept;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

struct RowReduction {
    std::size_t rank;
    FpMatrix rref;
    std::vector<std::size_t> pivot_columns;
};

// Gauss-Jordan elimination. The pivot in each column is the first row (in
// current order) holding a nonzero entry, so results are reproducible.
RowReduction row_reduce(const FpMatrix& m);

// Rows of the result form a basis of {v : m * v^T = 0}, one per free column.
FpMatrix kernel_basis(const FpMatrix& m);

struct QuotientSelection {
    std::size_t dim;
    // Standard basis coordinates (non-pivot columns) spanning a complement.
    std::vector<std::size_t> complement;
};

QuotientSelection quotient_dims(std::size_t ambient_dim, const FpMatrix& sub);

Residue determinant(const FpMatrix& m);

using SparseVector = std::vector<std::pair<std::uint32_t, Residue>>;

// A subspace of F_p^cols kept in reduced row-echelon form, grown one vector at
// a time. Rows are stored dense up to kDenseColumnLimit columns and sparse
// beyond that.
class EchelonBasis {
public:
    static constexpr std::size_t kDenseColumnLimit = 4096;

    EchelonBasis(PrimeField field, std::size_t cols);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return pivots_.size(); }
    bool is_sparse() const noexcept { return sparse_; }
    const std::vector<std::uint32_t>& pivots() const noexcept { return pivots_; }

    // Returns true when v was independent of the current rows.
    bool insert(std::span<const Residue> v);
    bool insert(const SparseVector& v);

    // v minus its projection onto the span; zero at every pivot column.
    std::vector<Residue> reduce(std::span<const Residue> v) const;
    bool contains(std::span<const Residue> v) const;
    bool contains(const SparseVector& v) const;

    // Coefficients of v in the row basis; v must lie in the span.
    std::vector<Residue> coordinates(std::span<const Residue> v) const;

    std::vector<Residue> row_dense(std::size_t i) const;
    SparseVector row_sparse(std::size_t i) const;
    FpMatrix to_matrix() const;
    std::vector<std::uint32_t> non_pivot_columns() const;

    bool operator==(const EchelonBasis& other) const;

private:
    bool insert_scratch(std::vector<Residue>& scratch);
    void reduce_in_place(std::vector<Residue>& scratch) const;

    PrimeField field_;
    std::size_t cols_;
    bool sparse_;
    std::vector<std::uint32_t> pivots_;
    std::vector<std::vector<Residue>> dense_rows_;
    std::vector<SparseVector> sparse_rows_;
};

}  // namespace hopf::fp

#endif  // HOPF_FORGE_FP_HPP
