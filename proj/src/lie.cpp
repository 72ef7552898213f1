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

#include "hopf_forge/lie.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>
#include <string>

#include "hopf_forge/error.hpp"

namespace hopf {

namespace {

TensorElement raw_bracket(const GradedModule& m, const TensorElement& a, const TensorElement& b) {
    const fp::PrimeField& f = m.field();
    TensorElement out(f);
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            const fp::Residue c = f.mul(ca, cb);
            Word ab = wa;
            ab.insert(ab.end(), wb.begin(), wb.end());
            Word ba = wb;
            ba.insert(ba.end(), wa.begin(), wa.end());
            out.add(ab, c);
            const bool odd = m.word_parity(wa) && m.word_parity(wb);
            out.add(ba, odd ? c : f.neg(c));
        }
    return out;
}

DenseVector unit_vector(std::size_t size, std::size_t at) {
    DenseVector e(size, 0);
    e[at] = 1;
    return e;
}

// L_1 .. L_n, index 0 unused.
std::vector<fp::EchelonBasis> lie_components(const TruncatedHopf& t, int n) {
    t.check_length(n);
    std::vector<fp::EchelonBasis> out;
    out.emplace_back(t.field(), 1);
    if (n < 1) return out;
    fp::EchelonBasis first(t.field(), t.word_count(1));
    for (std::size_t a = 0; a < t.letters(); ++a) first.insert(unit_vector(t.letters(), a));
    out.push_back(std::move(first));
    for (int len = 2; len <= n; ++len) {
        fp::EchelonBasis next(t.field(), t.word_count(len));
        const auto& prev = out.back();
        for (std::size_t r = 0; r < prev.rank(); ++r) {
            const DenseVector row = prev.row_dense(r);
            for (std::size_t a = 0; a < t.letters(); ++a)
                next.insert(t.dense_bracket(len - 1, row, 1, unit_vector(t.letters(), a)));
        }
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace

TensorElement bracket(const TruncatedHopf& t, const TensorElement& a, const TensorElement& b) {
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) t.check_length(static_cast<int>(wa.size() + wb.size()));
    return raw_bracket(t.module(), a, b);
}

TensorElement beta(const TruncatedHopf& t, const Word& w) {
    if (w.empty()) throw PreconditionViolation("beta of the empty word");
    t.check_length(static_cast<int>(w.size()));
    TensorElement x = TensorElement::of(t.field(), Word{w.front()});
    for (std::size_t k = 1; k < w.size(); ++k)
        x = raw_bracket(t.module(), x, TensorElement::of(t.field(), Word{w[k]}));
    return x;
}

DenseVector beta_dense(const TruncatedHopf& t, int n, std::size_t index) {
    if (n < 1) throw PreconditionViolation("beta of the empty word");
    const Word w = t.word_at(n, index);
    DenseVector x = unit_vector(t.letters(), w.front());
    for (int k = 1; k < n; ++k)
        x = t.dense_bracket(k, x, 1, unit_vector(t.letters(), w[static_cast<std::size_t>(k)]));
    return x;
}

fp::EchelonBasis free_lie_component(const TruncatedHopf& t, int n) {
    auto comps = lie_components(t, n);
    return std::move(comps.at(static_cast<std::size_t>(n)));
}

GradedSubspace free_lie_algebra(const TruncatedHopf& t) {
    GradedSubspace out = GradedSubspace::zero(t);
    const auto comps = lie_components(t, t.max_length());
    for (int n = 1; n <= t.max_length(); ++n)
        for (std::size_t r = 0; r < comps[static_cast<std::size_t>(n)].rank(); ++r)
            out.insert(n, comps[static_cast<std::size_t>(n)].row_dense(r));
    return out;
}

LieQuotient lbar(const TruncatedHopf& t, int n) {
    if (n < 1) throw PreconditionViolation("lbar needs a positive length");
    auto comps = lie_components(t, n);
    fp::EchelonBasis decomposables(t.field(), t.word_count(n));
    for (int i = 2; i <= n - i && n - i >= 2; ++i) {
        const auto& li = comps[static_cast<std::size_t>(i)];
        const auto& lj = comps[static_cast<std::size_t>(n - i)];
        for (std::size_t r = 0; r < li.rank(); ++r) {
            const DenseVector a = li.row_dense(r);
            for (std::size_t s = 0; s < lj.rank(); ++s)
                decomposables.insert(t.dense_bracket(i, a, n - i, lj.row_dense(s)));
        }
    }
    fp::EchelonBasis reps(t.field(), t.word_count(n));
    const auto& ln = comps[static_cast<std::size_t>(n)];
    for (std::size_t r = 0; r < ln.rank(); ++r) reps.insert(decomposables.reduce(ln.row_dense(r)));
    return LieQuotient{std::move(comps[static_cast<std::size_t>(n)]), std::move(decomposables), std::move(reps)};
}

std::vector<LbarIterate> lbar_tower(const TruncatedHopf& t, int k) {
    if (k < 0) throw PreconditionViolation("negative iterate index");
    const auto p = static_cast<int>(t.module().p());
    std::int64_t top = 1;
    for (int j = 0; j < k; ++j) {
        top *= p;
        if (top > t.max_length()) throw TruncationOverflow(static_cast<int>(std::min<std::int64_t>(top, std::numeric_limits<int>::max())), t.max_length());
    }
    std::vector<LbarIterate> tower;
    {
        std::vector<DenseVector> emb;
        fp::EchelonBasis span(t.field(), t.word_count(1 > t.max_length() ? 0 : 1));
        for (std::size_t a = 0; a < t.letters(); ++a) {
            emb.push_back(unit_vector(t.letters(), a));
            span.insert(emb.back());
        }
        tower.push_back(LbarIterate{0, t.module(), std::move(emb), std::move(span)});
    }
    int len = 1;
    for (int j = 1; j <= k; ++j) {
        const LbarIterate& prev = tower.back();
        const TruncatedHopf tw(prev.abstract, p);
        const LieQuotient q = lbar(tw, p);
        std::vector<Generator> gens;
        std::vector<DenseVector> emb;
        const int next_len = len * p;
        fp::EchelonBasis span(t.field(), t.word_count(next_len));
        for (std::size_t r = 0; r < q.representatives.rank(); ++r) {
            const DenseVector row = q.representatives.row_dense(r);
            gens.push_back({"l" + std::to_string(j) + "_" + std::to_string(r + 1),
                            tw.word_degree(p, q.representatives.pivots()[r])});
            DenseVector total = substitute_letters(tw, p, row, t, len, prev.embedded);
            span.insert(total);
            emb.push_back(std::move(total));
        }
        GradedModule abstract(t.field(), std::move(gens), std::nullopt, t.module().sign_mode());
        tower.push_back(LbarIterate{j, std::move(abstract), std::move(emb), std::move(span)});
        len = next_len;
    }
    return tower;
}

DenseVector substitute_letters(const TruncatedHopf& source, int n, std::span<const fp::Residue> x,
                               const TruncatedHopf& target, int letter_length,
                               const std::vector<DenseVector>& letters) {
    if (letters.size() != source.letters()) throw DimensionMismatch("one image per source letter is required");
    const fp::PrimeField& f = target.field();
    DenseVector total(target.word_count(n * letter_length), 0);
    for (std::size_t u = 0; u < x.size(); ++u) {
        if (x[u] == 0) continue;
        const Word w = source.word_at(n, u);
        DenseVector acc{1};
        for (int s = 0; s < n; ++s)
            acc = target.dense_product(s * letter_length, acc, letter_length, letters[w[static_cast<std::size_t>(s)]]);
        for (std::size_t c = 0; c < acc.size(); ++c)
            if (acc[c] != 0) total[c] = f.add(total[c], f.mul(x[u], acc[c]));
    }
    return total;
}

LbarIterate lbar_iter(const TruncatedHopf& t, int k) { return std::move(lbar_tower(t, k).back()); }

int mobius(std::uint64_t n) {
    if (n == 0) throw PreconditionViolation("mobius of zero");
    int result = 1;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        n /= q;
        if (n % q == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::uint64_t witt_dim(std::uint64_t d, std::uint64_t n) {
    if (n == 0) throw PreconditionViolation("witt_dim needs n >= 1");
    using boost::multiprecision::cpp_int;
    cpp_int total = 0;
    for (std::uint64_t e = 1; e <= n; ++e) {
        if (n % e != 0) continue;
        const int mu = mobius(e);
        if (mu == 0) continue;
        cpp_int term = boost::multiprecision::pow(cpp_int(d), static_cast<unsigned>(n / e));
        total += mu > 0 ? term : cpp_int(-term);
    }
    total /= n;
    if (total > std::numeric_limits<std::uint64_t>::max()) throw ResourceLimit("Witt dimension overflows 64 bits");
    return total.convert_to<std::uint64_t>();
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t r = 1;
    for (std::size_t k = 2; k <= n; ++k) r *= k;
    return r;
}

std::size_t permutation_rank(const std::vector<std::size_t>& perm) {
    const std::size_t n = perm.size();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j) smaller += perm[j] < perm[i];
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

std::vector<std::size_t> permutation_unrank(std::size_t n, std::size_t rank) {
    std::vector<std::size_t> digits(n);
    for (std::size_t i = n; i-- > 0;) {
        const std::size_t base = n - i;
        digits[i] = rank % base;
        rank /= base;
    }
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(pool[digits[i]]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
    }
    return out;
}

namespace {

fp::SparseVector to_gamma(const TensorElement& x) {
    fp::SparseVector out;
    for (const auto& [w, c] : x.terms()) {
        std::vector<std::size_t> perm(w.begin(), w.end());
        out.emplace_back(static_cast<std::uint32_t>(permutation_rank(perm)), c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

LieN::LieN(std::size_t n, SignMode mode, fp::PrimeField field)
    : n_(n), mode_(mode), field_(field), span_(field, static_cast<std::size_t>(factorial(n))) {
    const GradedModule letters = GradedModule::ungraded(field, n, mode);
    auto beta_of = [&](const std::vector<std::size_t>& perm) {
        TensorElement x = TensorElement::of(field, Word{static_cast<Letter>(perm[0])});
        for (std::size_t k = 1; k < perm.size(); ++k)
            x = raw_bracket(letters, x, TensorElement::of(field, Word{static_cast<Letter>(perm[k])}));
        return to_gamma(x);
    };
    // Left-normed brackets starting at e_1: ranks 0 .. (n-1)! - 1 all begin with letter 0.
    const std::size_t count = n == 0 ? 0 : static_cast<std::size_t>(factorial(n - 1));
    for (std::size_t r = 0; r < count; ++r) {
        left_normed_.push_back(beta_of(permutation_unrank(n, r)));
        span_.insert(left_normed_.back());
    }
    fp::EchelonBasis image(field, span_.cols());
    for (std::size_t r = 0; r < span_.cols() && n > 0; ++r) {
        const auto v = beta_of(permutation_unrank(n, r));
        if (!span_.contains(v)) throw InvariantViolation("beta_n leaves the span of left-normed brackets");
        if (image.rank() < span_.rank()) image.insert(v);
    }
    beta_image_rank_ = image.rank();
}

fp::SparseVector LieN::sigma_action(const std::vector<std::size_t>& sigma, const fp::SparseVector& v) const {
    if (sigma.size() != n_) throw DimensionMismatch("permutation size differs from n");
    fp::SparseVector out;
    out.reserve(v.size());
    for (const auto& [col, val] : v) {
        auto perm = permutation_unrank(n_, col);
        for (auto& letter : perm) letter = sigma[letter];
        out.emplace_back(static_cast<std::uint32_t>(permutation_rank(perm)), val);
    }
    std::sort(out.begin(), out.end());
    return out;
}

fp::FpMatrix LieN::action_matrix(const std::vector<std::size_t>& sigma) const {
    fp::FpMatrix out(field_, rank(), rank());
    for (std::size_t r = 0; r < rank(); ++r) {
        const auto image = sigma_action(sigma, span_.row_sparse(r));
        DenseVector dense(span_.cols(), 0);
        for (const auto& [col, val] : image) dense[col] = val;
        const auto coords = span_.coordinates(dense);
        for (std::size_t c = 0; c < coords.size(); ++c) out.set(r, c, coords[c]);
    }
    return out;
}

LieN lie_n_module(std::size_t n, SignMode mode, fp::PrimeField field) {
    if (n == 0) throw PreconditionViolation("Lie(n) needs n >= 1");
    if (n > 7) throw ResourceLimit("Lie(" + std::to_string(n) + ") exceeds the n <= 7 guard");
    return LieN(n, mode, field);
}

CoinvariantsReport coinvariants_check(const GradedModule& v, std::size_t n) {
    if (n < 1) throw PreconditionViolation("coinvariants need n >= 1");
    if (n > 4 || v.dim() > 3) throw ResourceLimit("coinvariants check is limited to n <= 4 and dim V <= 3");
    const fp::PrimeField& f = v.field();
    const LieN lie = lie_n_module(n, SignMode::plain, f);
    const TruncatedHopf t(v, static_cast<int>(n));
    const std::size_t words = t.word_count(static_cast<int>(n));
    const std::size_t m = lie.rank();
    fp::EchelonBasis relations(f, m * words);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<std::size_t> swap(n);
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[i], swap[i + 1]);
        const fp::FpMatrix act = lie.action_matrix(swap);
        for (std::size_t w = 0; w < words; ++w) {
            Word word = t.word_at(static_cast<int>(n), w);
            const bool odd = v.parity(word[i]) && v.parity(word[i + 1]);
            std::swap(word[i], word[i + 1]);
            const std::size_t swapped = t.index_of(word);
            for (std::size_t j = 0; j < m; ++j) {
                DenseVector rel(m * words, 0);
                for (std::size_t jj = 0; jj < m; ++jj) rel[jj * words + w] = act(j, jj);
                fp::Residue& slot = rel[j * words + swapped];
                slot = odd ? f.add(slot, 1) : f.sub(slot, 1);
                relations.insert(rel);
            }
        }
    }
    const std::size_t lhs = m * words - relations.rank();
    const std::size_t rhs = free_lie_component(t, static_cast<int>(n)).rank();
    return {lhs, rhs, lhs == rhs};
}

}  // namespace hopf
