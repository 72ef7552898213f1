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

#include "hopf_forge/decomp.hpp"

#include <algorithm>
#include <limits>

#include "hopf_forge/error.hpp"
#include "hopf_forge/lie.hpp"

namespace hopf {

bool is_power_of(std::int64_t n, std::int64_t p) noexcept {
    if (n < 1 || p < 2) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

namespace {

GradedSubspace lie_generators(const TruncatedHopf& t, int k) {
    const GradedSubspace lie = free_lie_algebra(t);
    GradedSubspace gens = GradedSubspace::zero(t);
    const auto p = static_cast<std::int64_t>(t.module().p());
    for (int n = 1; n <= t.max_length(); ++n) {
        bool keep = n >= 2 && !is_power_of(n, p);
        if (k >= 0 && is_power_of(n, p)) {
            std::int64_t pk = 1;
            for (int s = 0; s < k; ++s) pk *= p;
            keep = n >= pk;
        }
        if (!keep) continue;
        for (std::size_t r = 0; r < lie.dim(n); ++r) gens.insert(n, lie.at(n).row_dense(r));
    }
    return gens;
}

fp::FpMatrix invert(const fp::FpMatrix& a) {
    const std::size_t m = a.rows();
    if (a.cols() != m) throw DimensionMismatch("inverse of a non-square matrix");
    fp::FpMatrix aug(a.field(), m, 2 * m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) aug.set(r, c, a(r, c));
        aug.set(r, m + r, 1);
    }
    const fp::RowReduction red = fp::row_reduce(aug);
    if (red.rank < m || (m > 0 && red.pivot_columns[m - 1] != m - 1))
        throw InvariantViolation("matrix is singular");
    fp::FpMatrix out(a.field(), m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) out.set(r, c, red.rref(r, m + c));
    return out;
}

void require_same_module(const TruncatedHopf& t, const ModuleMap& f) {
    if (f.source().degrees() != t.module().degrees() || f.target().degrees() != t.module().degrees())
        throw DimensionMismatch("self-map must act on the module of the quotient");
}

std::int64_t int_power(std::int64_t base, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / base) throw ResourceLimit("integer power overflows");
        r *= base;
    }
    return r;
}

}  // namespace

GradedSubspace b_generators(const TruncatedHopf& t) { return lie_generators(t, -1); }

GradedSubspace b_subalgebra(const TruncatedHopf& t) { return subalgebra_generated(t, {b_generators(t)}); }

GradedSubspace bk_subalgebra(const TruncatedHopf& t, int k) {
    if (k < 0) throw PreconditionViolation("negative tower index");
    return subalgebra_generated(t, {lie_generators(t, k)});
}

std::map<int, std::size_t> ClosedForm::degree_dims(int n) const {
    std::map<int, std::size_t> out;
    for (const auto& [key, dim] : table)
        if (key.first == n) out[key.second] += dim;
    return out;
}

ClosedForm amin_closed_form(const GradedModule& v, int max_length) {
    if (!v.meets_periodicity_hypotheses())
        throw PreconditionViolation("closed form needs V concentrated in odd degrees with dim V = p - 1");
    if (max_length < 0) throw PreconditionViolation("negative truncation bound");
    const auto p = static_cast<std::int64_t>(v.p());
    ClosedForm out;
    out.table[{0, 0}] = 1;
    std::int64_t pk = 1;
    for (int k = 0; pk <= max_length; ++k, pk *= p) {
        for (int deg : lbar_iterate_degrees(v, k)) {
            // Multiply by (1 + x) with x of length p^k and degree deg.
            auto next = out.table;
            for (const auto& [key, dim] : out.table) {
                const std::int64_t len = key.first + pk;
                if (len > max_length) continue;
                next[{static_cast<int>(len), key.second + deg}] += dim;
            }
            out.table = std::move(next);
        }
    }
    out.dims.assign(static_cast<std::size_t>(max_length) + 1, 0);
    for (const auto& [key, dim] : out.table) out.dims[static_cast<std::size_t>(key.first)] += dim;
    return out;
}

AminOracle amin_oracle(const TruncatedHopf& t) {
    if (t.word_count(t.max_length()) > kMaxOracleWords)
        throw ResourceLimit("quotient oracle limited to " + std::to_string(kMaxOracleWords) + " words per length, T_" +
                            std::to_string(t.max_length()) + " has " + std::to_string(t.word_count(t.max_length())));
    GradedSubspace b = b_subalgebra(t);
    QuotientCoalgebra q = left_ideal_quotient(b, t);
    return AminOracle{std::move(b), std::move(q), !t.module().meets_periodicity_hypotheses()};
}

PoincareSeries bmax_series(const GradedModule& v, Grading grading, int bound) {
    return tensor_series(v, grading, bound) / closed_form_amin_series(v, grading, bound);
}

std::int64_t b_invariant(const std::map<int, std::size_t>& cells) {
    std::int64_t total = 0;
    for (const auto& [q, dim] : cells) total += static_cast<std::int64_t>(q) * static_cast<std::int64_t>(dim);
    return total;
}

EhpReport ehp_report(const GradedModule& v, int degree_bound, int max_k) {
    if (!v.meets_periodicity_hypotheses())
        throw PreconditionViolation("EHP bookkeeping needs V concentrated in odd degrees with dim V = p - 1");
    EhpReport r{};
    r.p = static_cast<int>(v.p());
    r.degree_bound = degree_bound;
    std::map<int, std::size_t> cells;
    for (int d : v.degrees()) {
        ++cells[d + 1];
        r.b_prime += d;
    }
    r.b_y = b_invariant(cells);
    r.shift = r.b_y - r.p + 1;

    const PoincareSeries ext = exterior_series(v, Grading::degree, degree_bound);
    r.lbar_degrees = lbar_iterate_degrees(v, 1);
    const GradedModule lbar_module = GradedModule::with_degrees(v.field(), r.lbar_degrees, v.sign_mode());
    const PoincareSeries amin_lbar = closed_form_amin_series(lbar_module, Grading::degree, degree_bound);
    for (int i = 0; i <= degree_bound; ++i) {
        if (ext[i] != 0) r.exterior_degrees[i] = ext[i].convert_to<std::size_t>();
        if (amin_lbar[i] != 0) r.amin_lbar_degrees[i] = amin_lbar[i].convert_to<std::size_t>();
    }
    const PoincareSeries amin = closed_form_amin_series(v, Grading::degree, degree_bound);
    r.factorization = compare(amin, ext * amin_lbar);
    for (int k = 1; k <= max_k; ++k) {
        const std::int64_t pk = int_power(r.p, k);
        r.sphere_degrees.emplace_back(k, r.shift * (pk - 1) / (r.p - 1) + 1);
    }
    return r;
}

bool degree_separation_holds(const GradedModule& v, int max_k) {
    for (int k = 0; k < max_k; ++k) {
        const auto lo = lbar_iterate_degrees(v, k);
        const auto hi = lbar_iterate_degrees(v, k + 1);
        if (*std::max_element(lo.begin(), lo.end()) >= *std::min_element(hi.begin(), hi.end())) return false;
    }
    return true;
}

std::vector<DenseVector> tensor_power_images(const TruncatedHopf& t, const ModuleMap& f, int n) {
    t.check_length(n);
    require_same_module(t, f);
    const std::size_t d = t.letters();
    std::vector<DenseVector> columns;
    for (Letter a = 0; a < d; ++a) {
        DenseVector col(d, 0);
        for (const auto& [letter, c] : f.image(a)) col[letter] = t.field().add(col[letter], c);
        columns.push_back(std::move(col));
    }
    std::vector<DenseVector> images{DenseVector{1}};
    for (int len = 1; len <= n; ++len) {
        std::vector<DenseVector> next;
        next.reserve(images.size() * d);
        for (const auto& prefix : images)
            for (Letter a = 0; a < d; ++a) next.push_back(t.dense_product(len - 1, prefix, 1, columns[a]));
        images = std::move(next);
    }
    return images;
}

fp::FpMatrix induced_quotient_map(const QuotientCoalgebra& q, const ModuleMap& f, int n, bool check_ideal) {
    const TruncatedHopf& t = q.algebra();
    const fp::PrimeField& fld = t.field();
    const auto images = tensor_power_images(t, f, n);
    const auto& ideal = q.ideal(n);
    for (std::size_t r = 0; check_ideal && r < ideal.rank(); ++r) {
        DenseVector acc(t.word_count(n), 0);
        for (const auto& [col, val] : ideal.row_sparse(r)) {
            const auto& img = images[col];
            for (std::size_t c = 0; c < acc.size(); ++c)
                if (img[c] != 0) acc[c] = fld.add(acc[c], fld.mul(val, img[c]));
        }
        if (!ideal.contains(acc))
            throw InvariantViolation("self-map does not preserve the ideal in length " + std::to_string(n));
    }
    const auto& cosets = q.coset_words(n);
    fp::FpMatrix out(fld, cosets.size(), cosets.size());
    for (std::size_t j = 0; j < cosets.size(); ++j) {
        const DenseVector col = q.project(n, images[cosets[j]]);
        for (std::size_t i = 0; i < col.size(); ++i) out.set(i, j, col[i]);
    }
    return out;
}

SelfmapDegree selfmap_degree(const QuotientCoalgebra& q, const ModuleMap& f, int k, bool check_ideal) {
    if (k < 0) throw PreconditionViolation("negative level count");
    const TruncatedHopf& t = q.algebra();
    const auto p = static_cast<std::int64_t>(t.module().p());
    const fp::PrimeField& fld = t.field();
    SelfmapDegree out;
    out.degree = 1;
    for (int j = 0; j < k; ++j) {
        const std::int64_t n = int_power(p, j);
        if (n > t.max_length()) throw TruncationOverflow(static_cast<int>(std::min<std::int64_t>(n, std::numeric_limits<int>::max())), t.max_length());
        fp::FpMatrix m = induced_quotient_map(q, f, static_cast<int>(n), check_ideal);
        const fp::Residue det = fp::determinant(m);
        out.level_matrices.push_back(std::move(m));
        out.level_dets.push_back(det);
        out.degree = fld.mul(out.degree, det);
    }
    for (int j = 1; j <= k; ++j) {
        const std::int64_t n = int_power(p, j) - 1;
        if (n > t.max_length()) break;
        if (q.dim(static_cast<int>(n)) != 1) break;
        out.top_scalars.push_back(induced_quotient_map(q, f, static_cast<int>(n), check_ideal)(0, 0));
    }
    return out;
}

fp::FpMatrix convolution_primitive_sum(const QuotientCoalgebra& q, const ModuleMap& f, const ModuleMap& g,
                                       int j) {
    const auto n = int_power(q.algebra().module().p(), j);
    if (n > q.max_length()) throw TruncationOverflow(static_cast<int>(n), q.max_length());
    return induced_quotient_map(q, f, static_cast<int>(n)) + induced_quotient_map(q, g, static_cast<int>(n));
}

fp::FpMatrix convolution_direct(const QuotientCoalgebra& q, const ModuleMap& f, const ModuleMap& g, int j) {
    const TruncatedHopf& t = q.algebra();
    const fp::PrimeField& fld = t.field();
    const auto n = static_cast<int>(int_power(t.module().p(), j));
    t.check_length(n);
    const LbarIterate level = lbar_iter(t, j);
    std::vector<std::vector<DenseVector>> fimg, gimg;
    for (int l = 0; l <= n; ++l) {
        fimg.push_back(tensor_power_images(t, f, l));
        gimg.push_back(tensor_power_images(t, g, l));
    }
    const std::size_t m = level.embedded.size();
    if (q.dim(n) != m) throw InvariantViolation("primitive generators do not span the quotient at length " + std::to_string(n));
    fp::FpMatrix basis_t(fld, m, m);  // column i = projection of generator i
    fp::FpMatrix images_t(fld, m, m); // column i = projection of (f * g)(generator i)
    for (std::size_t i = 0; i < m; ++i) {
        const DenseVector& x = level.embedded[i];
        DenseVector conv(t.word_count(n), 0);
        for (std::size_t idx = 0; idx < x.size(); ++idx) {
            if (x[idx] == 0) continue;
            const TensorPair split = coproduct(t.module(), t.word_at(n, idx));
            for (const auto& [key, c] : split.terms()) {
                const int la = static_cast<int>(key.first.size());
                const int lb = n - la;
                const DenseVector term = t.dense_product(la, fimg[static_cast<std::size_t>(la)][t.index_of(key.first)],
                                                         lb, gimg[static_cast<std::size_t>(lb)][t.index_of(key.second)]);
                const fp::Residue s = fld.mul(x[idx], c);
                for (std::size_t w = 0; w < term.size(); ++w)
                    if (term[w] != 0) conv[w] = fld.add(conv[w], fld.mul(s, term[w]));
            }
        }
        const DenseVector b = q.project(n, x);
        const DenseVector y = q.project(n, conv);
        for (std::size_t r = 0; r < m; ++r) {
            basis_t.set(r, i, b[r]);
            images_t.set(r, i, y[r]);
        }
    }
    // D * basis = images, so D = images * basis^{-1}.
    return images_t * invert(basis_t);
}

bool DecompositionReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

DecompositionReport decompose(const GradedModule& v, int max_length) {
    const TruncatedHopf t(v, max_length);
    const AminOracle oracle = amin_oracle(t);
    const QuotientCoalgebra& q = oracle.quotient;
    std::optional<ClosedForm> closed;
    if (!oracle.upper_bound_only) closed = amin_closed_form(v, max_length);

    DecompositionReport rep;
    rep.p = v.p();
    rep.generators = v.generators();
    rep.max_length = max_length;
    rep.upper_bound_only = oracle.upper_bound_only;

    const auto p = static_cast<std::int64_t>(v.p());
    bool coideal = true, balance = true, support = true;
    for (int n = 0; n <= max_length; ++n) {
        LengthRow row{n, t.word_count(n), oracle.b.dim(n), q.ideal(n).rank(), q.dim(n), std::nullopt, 0};
        if (closed) row.dim_amin_closed = closed->dims[static_cast<std::size_t>(n)];
        if (n >= 1) row.dim_primitives = primitives(q, n).rank();
        balance = balance && row.dim_t == row.dim_ideal + row.dim_amin_oracle;
        coideal = coideal && q.coideal_verified(n);
        const bool expect = n >= 1 && is_power_of(n, p);
        support = support && (expect ? row.dim_primitives == v.dim() : row.dim_primitives == 0);
        rep.lengths.push_back(row);

        std::map<int, std::pair<std::size_t, std::optional<std::size_t>>> merged;
        for (const auto& [deg, dim] : q.degree_dims(n)) merged[deg].first = dim;
        if (closed)
            for (const auto& [deg, dim] : closed->degree_dims(n)) merged[deg].second = dim;
        for (auto& [deg, pair] : merged) {
            if (closed && !pair.second) pair.second = 0;
            rep.degrees.push_back(DegreeRow{n, deg, pair.first, pair.second});
        }
    }

    rep.checks.push_back({"coideal", coideal, "ideal is a coideal in every length"});
    rep.checks.push_back({"dimension_balance", balance, "dim T_n = dim ideal_n + dim quotient_n"});

    const PoincareSeries chi_t = tensor_series(v, Grading::length, max_length);
    const PoincareSeries chi_q = PoincareSeries::from_dims(Grading::length, q.dims());
    const PoincareSeries chi_b = PoincareSeries::from_dims(Grading::length, oracle.b.dims());
    const SeriesComparison series = compare(chi_q * chi_b, chi_t);
    rep.checks.push_back({"series_consistency", series.equal,
                          series.equal ? "chi(quotient) chi(B) = chi(T)"
                                       : "first mismatch at length " + std::to_string(*series.first_mismatch)});

    if (closed) {
        bool dims_ok = true;
        for (const auto& row : rep.lengths) dims_ok = dims_ok && row.dim_amin_oracle == *row.dim_amin_closed;
        bool degrees_ok = true;
        for (const auto& row : rep.degrees) degrees_ok = degrees_ok && row.oracle == *row.closed;
        rep.checks.push_back({"closed_form_degrees", degrees_ok, "quotient and closed form agree by degree"});
        rep.checks.push_back({"closed_form_lengths", dims_ok, "quotient and closed form agree by length"});
        rep.checks.push_back({"primitive_support", support, "primitives only at lengths p^k, of dimension p - 1"});
    }
    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return rep;
}

}  // namespace hopf
