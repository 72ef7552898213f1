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

#include "hopf_forge/fp.hpp"

#include <algorithm>

#include "hopf_forge/error.hpp"

namespace hopf::fp {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || !is_prime(p) || p > (1u << 16))
        throw PreconditionViolation("field characteristic must be an odd prime below 65536, got " +
                                    std::to_string(p));
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
    Residue result = 1 % p_;
    Residue base = a % p_;
    while (e > 0) {
        if (e & 1u) result = mul(result, base);
        base = mul(base, base);
        e >>= 1u;
    }
    return result;
}

Residue PrimeField::inv(Residue a) const {
    if (a % p_ == 0) throw PreconditionViolation("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FpMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

FpMatrix FpMatrix::identity(PrimeField field, std::size_t n) {
    FpMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
    return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
    if (cols_ != rhs.rows_ || field_ != rhs.field_)
        throw DimensionMismatch("matrix product shape or field mismatch");
    FpMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Residue a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                out.add_to(r, c, field_.mul(a, rhs(k, c)));
        }
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        throw DimensionMismatch("matrix sum shape or field mismatch");
    FpMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
    return out;
}

bool FpMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

RowReduction row_reduce(const FpMatrix& m) {
    const PrimeField& f = m.field();
    FpMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t r = lead;
        while (r < a.rows() && a(r, c) == 0) ++r;
        if (r == a.rows()) continue;
        if (r != lead) std::swap_ranges(a.row(r).begin(), a.row(r).end(), a.row(lead).begin());
        const Residue scale = f.inv(a(lead, c));
        for (Residue& x : a.row(lead)) x = f.mul(x, scale);
        for (std::size_t o = 0; o < a.rows(); ++o) {
            if (o == lead || a(o, c) == 0) continue;
            const Residue factor = f.neg(a(o, c));
            auto src = a.row(lead);
            auto dst = a.row(o);
            for (std::size_t k = c; k < a.cols(); ++k)
                if (src[k] != 0) dst[k] = f.add(dst[k], f.mul(factor, src[k]));
        }
        pivots.push_back(c);
        ++lead;
    }
    return {pivots.size(), std::move(a), std::move(pivots)};
}

FpMatrix kernel_basis(const FpMatrix& m) {
    const RowReduction red = row_reduce(m);
    const PrimeField& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : red.pivot_columns) is_pivot[c] = true;
    FpMatrix basis(f, m.cols() - red.rank, m.cols());
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis.set(out, free, 1);
        for (std::size_t r = 0; r < red.rank; ++r)
            basis.set(out, red.pivot_columns[r], f.to_signed(f.neg(red.rref(r, free))));
        ++out;
    }
    return basis;
}

QuotientSelection quotient_dims(std::size_t ambient_dim, const FpMatrix& sub) {
    if (sub.rows() > 0 && sub.cols() != ambient_dim)
        throw DimensionMismatch("subspace rows have width " + std::to_string(sub.cols()) +
                                ", ambient dimension is " + std::to_string(ambient_dim));
    std::vector<bool> is_pivot(ambient_dim, false);
    std::size_t rank = 0;
    if (sub.rows() > 0) {
        const RowReduction red = row_reduce(sub);
        rank = red.rank;
        for (std::size_t c : red.pivot_columns) is_pivot[c] = true;
    }
    QuotientSelection q{ambient_dim - rank, {}};
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) q.complement.push_back(c);
    return q;
}

Residue determinant(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const PrimeField& f = m.field();
    FpMatrix a = m;
    Residue det = 1;
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && a(r, c) == 0) ++r;
        if (r == n) return 0;
        if (r != c) {
            std::swap_ranges(a.row(r).begin(), a.row(r).end(), a.row(c).begin());
            det = f.neg(det);
        }
        det = f.mul(det, a(c, c));
        const Residue inv = f.inv(a(c, c));
        for (std::size_t o = c + 1; o < n; ++o) {
            if (a(o, c) == 0) continue;
            const Residue factor = f.neg(f.mul(a(o, c), inv));
            for (std::size_t k = c; k < n; ++k) a.add_to(o, k, f.mul(factor, a(c, k)));
        }
    }
    return det;
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(PrimeField field, std::size_t cols)
    : field_(field), cols_(cols), sparse_(cols > kDenseColumnLimit) {}

void EchelonBasis::reduce_in_place(std::vector<Residue>& scratch) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Residue c = scratch[pivots_[r]];
        if (c == 0) continue;
        const Residue factor = field_.neg(c);
        if (sparse_) {
            for (const auto& [col, val] : sparse_rows_[r])
                scratch[col] = field_.add(scratch[col], field_.mul(factor, val));
        } else {
            const auto& row = dense_rows_[r];
            for (std::size_t k = pivots_[r]; k < cols_; ++k)
                if (row[k] != 0) scratch[k] = field_.add(scratch[k], field_.mul(factor, row[k]));
        }
    }
}

bool EchelonBasis::insert_scratch(std::vector<Residue>& scratch) {
    reduce_in_place(scratch);
    std::size_t lead = 0;
    while (lead < cols_ && scratch[lead] == 0) ++lead;
    if (lead == cols_) return false;
    const Residue scale = field_.inv(scratch[lead]);
    for (std::size_t k = lead; k < cols_; ++k)
        if (scratch[k] != 0) scratch[k] = field_.mul(scratch[k], scale);

    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<std::uint32_t>(lead)) -
        pivots_.begin());

    if (sparse_) {
        SparseVector fresh;
        for (std::size_t k = lead; k < cols_; ++k)
            if (scratch[k] != 0) fresh.emplace_back(static_cast<std::uint32_t>(k), scratch[k]);
        for (auto& row : sparse_rows_) {
            auto it = std::lower_bound(row.begin(), row.end(), std::pair<std::uint32_t, Residue>(
                                           static_cast<std::uint32_t>(lead), 0));
            if (it == row.end() || it->first != lead) continue;
            const Residue factor = field_.neg(it->second);
            SparseVector merged;
            merged.reserve(row.size() + fresh.size());
            auto a = row.begin();
            auto b = fresh.begin();
            while (a != row.end() || b != fresh.end()) {
                if (b == fresh.end() || (a != row.end() && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == row.end() || b->first < a->first) {
                    merged.emplace_back(b->first, field_.mul(factor, b->second));
                    ++b;
                } else {
                    const Residue v = field_.add(a->second, field_.mul(factor, b->second));
                    if (v != 0) merged.emplace_back(a->first, v);
                    ++a;
                    ++b;
                }
            }
            row = std::move(merged);
        }
        sparse_rows_.insert(sparse_rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(fresh));
    } else {
        for (auto& row : dense_rows_) {
            const Residue c = row[lead];
            if (c == 0) continue;
            const Residue factor = field_.neg(c);
            for (std::size_t k = lead; k < cols_; ++k)
                if (scratch[k] != 0) row[k] = field_.add(row[k], field_.mul(factor, scratch[k]));
        }
        dense_rows_.insert(dense_rows_.begin() + static_cast<std::ptrdiff_t>(pos), scratch);
    }
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<std::uint32_t>(lead));
    return true;
}

bool EchelonBasis::insert(std::span<const Residue> v) {
    if (v.size() != cols_)
        throw DimensionMismatch("vector of width " + std::to_string(v.size()) +
                                " inserted into a " + std::to_string(cols_) + "-column basis");
    if (rank() == cols_) return false;
    std::vector<Residue> scratch(v.begin(), v.end());
    return insert_scratch(scratch);
}

bool EchelonBasis::insert(const SparseVector& v) {
    if (rank() == cols_) return false;
    std::vector<Residue> scratch(cols_, 0);
    for (const auto& [col, val] : v) {
        if (col >= cols_) throw DimensionMismatch("sparse entry beyond basis width");
        scratch[col] = field_.add(scratch[col], val % field_.p());
    }
    return insert_scratch(scratch);
}

std::vector<Residue> EchelonBasis::reduce(std::span<const Residue> v) const {
    if (v.size() != cols_) throw DimensionMismatch("vector width does not match basis");
    std::vector<Residue> scratch(v.begin(), v.end());
    reduce_in_place(scratch);
    return scratch;
}

bool EchelonBasis::contains(std::span<const Residue> v) const {
    if (rank() == cols_) return v.size() == cols_;
    const auto rem = reduce(v);
    return std::all_of(rem.begin(), rem.end(), [](Residue x) { return x == 0; });
}

bool EchelonBasis::contains(const SparseVector& v) const {
    std::vector<Residue> dense(cols_, 0);
    for (const auto& [col, val] : v) {
        if (col >= cols_) throw DimensionMismatch("sparse entry beyond basis width");
        dense[col] = field_.add(dense[col], val % field_.p());
    }
    return contains(dense);
}

std::vector<Residue> EchelonBasis::coordinates(std::span<const Residue> v) const {
    if (v.size() != cols_) throw DimensionMismatch("vector width does not match basis");
    std::vector<Residue> coords(rank());
    for (std::size_t r = 0; r < rank(); ++r) coords[r] = v[pivots_[r]];
    return coords;
}

std::vector<Residue> EchelonBasis::row_dense(std::size_t i) const {
    if (!sparse_) return dense_rows_.at(i);
    std::vector<Residue> out(cols_, 0);
    for (const auto& [col, val] : sparse_rows_.at(i)) out[col] = val;
    return out;
}

SparseVector EchelonBasis::row_sparse(std::size_t i) const {
    if (sparse_) return sparse_rows_.at(i);
    SparseVector out;
    const auto& row = dense_rows_.at(i);
    for (std::size_t k = 0; k < cols_; ++k)
        if (row[k] != 0) out.emplace_back(static_cast<std::uint32_t>(k), row[k]);
    return out;
}

FpMatrix EchelonBasis::to_matrix() const {
    FpMatrix m(field_, rank(), cols_);
    for (std::size_t r = 0; r < rank(); ++r) {
        const auto row = row_dense(r);
        std::copy(row.begin(), row.end(), m.row(r).begin());
    }
    return m;
}

std::vector<std::uint32_t> EchelonBasis::non_pivot_columns() const {
    std::vector<std::uint32_t> out;
    out.reserve(cols_ - rank());
    std::size_t next = 0;
    for (std::uint32_t c = 0; c < cols_; ++c) {
        if (next < pivots_.size() && pivots_[next] == c) {
            ++next;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

bool EchelonBasis::operator==(const EchelonBasis& other) const {
    if (field_ != other.field_ || cols_ != other.cols_ || pivots_ != other.pivots_) return false;
    for (std::size_t r = 0; r < rank(); ++r)
        if (row_sparse(r) != other.row_sparse(r)) return false;
    return true;
}

}  // namespace hopf::fp
