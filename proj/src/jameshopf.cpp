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

#include "hopf_forge/jameshopf.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hopf_forge/error.hpp"
#include "hopf_forge/lie.hpp"

namespace hopf {

GradedModule block_module(const GradedModule& v, int n) {
    if (n < 1) throw PreconditionViolation("block size must be positive");
    const TruncatedHopf t(v, n);
    std::vector<Generator> gens;
    for (std::size_t u = 0; u < t.word_count(n); ++u) {
        std::string name;
        for (Letter l : t.word_at(n, u)) name += (name.empty() ? "" : ".") + v.name(l);
        gens.push_back({name, t.word_degree(n, u)});
    }
    return GradedModule(v.field(), std::move(gens), std::nullopt, v.sign_mode());
}

namespace {

struct PartitionWalker {
    const GradedModule& v;
    const Word& w;
    int n;
    TensorElement& out;
    std::vector<std::size_t> order;
    std::uint64_t used = 0;

    void run() {
        if (order.size() == w.size()) {
            emit();
            return;
        }
        std::size_t first = 0;
        while (used & (std::uint64_t{1} << first)) ++first;
        used |= std::uint64_t{1} << first;
        order.push_back(first);
        choose(first + 1, n - 1);
        order.pop_back();
        used &= ~(std::uint64_t{1} << first);
    }

    void choose(std::size_t from, int remaining) {
        if (remaining == 0) {
            run();
            return;
        }
        for (std::size_t pos = from; pos < w.size(); ++pos) {
            if (used & (std::uint64_t{1} << pos)) continue;
            used |= std::uint64_t{1} << pos;
            order.push_back(pos);
            choose(pos + 1, remaining - 1);
            order.pop_back();
            used &= ~(std::uint64_t{1} << pos);
        }
    }

    void emit() {
        const std::size_t d = v.dim();
        Word blocks;
        for (std::size_t b = 0; b < order.size(); b += static_cast<std::size_t>(n)) {
            Letter idx = 0;
            for (int s = 0; s < n; ++s) idx = static_cast<Letter>(idx * d + w[order[b + static_cast<std::size_t>(s)]]);
            blocks.push_back(idx);
        }
        const int sign = koszul_sign(v, w, order);
        out.add(blocks, sign > 0 ? 1 : v.field().neg(1));
    }
};

}  // namespace

TensorElement james_hopf(const GradedModule& v, int n, const Word& w) {
    if (n < 1) throw PreconditionViolation("James-Hopf block size must be positive");
    if (w.size() > 63) throw ResourceLimit("James-Hopf map on a word longer than 63 letters");
    TensorElement out(v.field());
    if (w.size() % static_cast<std::size_t>(n) != 0) return out;
    PartitionWalker walker{v, w, n, out, {}, 0};
    walker.run();
    return out;
}

TensorElement james_hopf(const GradedModule& v, int n, const TensorElement& x) {
    TensorElement out(v.field());
    for (const auto& [w, c] : x.terms()) out += james_hopf(v, n, w).scaled(c);
    return out;
}

DenseVector james_hopf_dense(const TruncatedHopf& t, const TruncatedHopf& blocks, int n, int k,
                             std::span<const fp::Residue> x) {
    if (x.size() != t.word_count(n * k)) throw DimensionMismatch("James-Hopf input width mismatch");
    blocks.check_length(k);
    const fp::PrimeField& f = t.field();
    DenseVector out(blocks.word_count(k), 0);
    for (std::size_t u = 0; u < x.size(); ++u) {
        if (x[u] == 0) continue;
        const TensorElement h = james_hopf(t.module(), n, t.word_at(n * k, u));
        for (const auto& [bw, c] : h.terms()) {
            const std::size_t idx = blocks.index_of(bw);
            out[idx] = f.add(out[idx], f.mul(x[u], c));
        }
    }
    return out;
}

LieMorphismReport check_lie_morphism(const TruncatedHopf& t, std::size_t samples, std::uint64_t seed) {
    const auto p = static_cast<int>(t.module().p());
    const int top = t.max_length() / p;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= top; ++a)
        for (int b = 1; a + b <= top; ++b) pairs.emplace_back(a, b);
    if (pairs.empty())
        throw TruncationOverflow(2 * p, t.max_length());
    // Components of the sub-Lie-algebra generated by L_p, indexed by multiples of p.
    std::vector<fp::EchelonBasis> sub;
    sub.emplace_back(t.field(), 1);
    sub.push_back(free_lie_component(t, p));
    for (int a = 2; a <= top; ++a) {
        fp::EchelonBasis next(t.field(), t.word_count(a * p));
        for (std::size_t r = 0; r < sub.back().rank(); ++r) {
            const DenseVector x = sub.back().row_dense(r);
            for (std::size_t s = 0; s < sub[1].rank(); ++s)
                next.insert(t.dense_bracket((a - 1) * p, x, p, sub[1].row_dense(s)));
        }
        sub.push_back(std::move(next));
    }
    const TruncatedHopf blocks(block_module(t.module(), p), top);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<fp::Residue> coeff(0, t.field().p() - 1);
    auto random_element = [&](int a) {
        DenseVector x(t.word_count(a * p), 0);
        const auto& basis = sub[static_cast<std::size_t>(a)];
        for (std::size_t r = 0; r < basis.rank(); ++r) {
            const fp::Residue c = coeff(rng);
            if (c == 0) continue;
            const DenseVector row = basis.row_dense(r);
            for (std::size_t i = 0; i < x.size(); ++i)
                if (row[i] != 0) x[i] = t.field().add(x[i], t.field().mul(c, row[i]));
        }
        return x;
    };
    LieMorphismReport report{samples, 0};
    for (std::size_t s = 0; s < samples; ++s) {
        const auto [a, b] = pairs[s % pairs.size()];
        const DenseVector u = random_element(a);
        const DenseVector v = random_element(b);
        const DenseVector lhs =
            james_hopf_dense(t, blocks, p, a + b, t.dense_bracket(a * p, u, b * p, v));
        const DenseVector rhs = blocks.dense_bracket(a, james_hopf_dense(t, blocks, p, a, u), b,
                                                     james_hopf_dense(t, blocks, p, b, v));
        if (lhs != rhs) ++report.failures;
    }
    return report;
}

TransportReport lbar_transport(const TruncatedHopf& t, int k) {
    if (k < 0) throw PreconditionViolation("negative transport level");
    const auto p = static_cast<int>(t.module().p());
    int pk = 1;
    for (int j = 0; j < k; ++j) pk *= p;
    if (static_cast<std::int64_t>(pk) * p > t.max_length()) throw TruncationOverflow(pk * p, t.max_length());
    const auto tower = lbar_tower(t, k + 1);
    const TruncatedHopf blocks(block_module(t.module(), p), pk);

    fp::EchelonBasis lhs(t.field(), blocks.word_count(pk));
    for (const auto& x : tower.back().embedded) lhs.insert(james_hopf_dense(t, blocks, p, pk, x));

    const TruncatedHopf tw(tower[1].abstract, pk);
    const auto inner = lbar_tower(tw, k);
    fp::EchelonBasis rhs(t.field(), blocks.word_count(pk));
    for (const auto& x : inner.back().embedded)
        rhs.insert(substitute_letters(tw, pk, x, blocks, 1, tower[1].embedded));

    return TransportReport{k, blocks.word_count(pk), lhs.rank(), rhs.rank(), lhs == rhs};
}

fp::FpMatrix place_permutation(const TruncatedHopf& t, int n, const std::vector<std::size_t>& sigma) {
    if (sigma.size() != static_cast<std::size_t>(n)) throw DimensionMismatch("permutation size differs from n");
    const std::size_t words = t.word_count(n);
    fp::FpMatrix out(t.field(), words, words);
    std::vector<std::size_t> order(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) order[sigma[i]] = i;
    for (std::size_t u = 0; u < words; ++u) {
        const Word w = t.word_at(n, u);
        Word moved(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) moved[sigma[i]] = w[i];
        out.set(t.index_of(moved), u, koszul_sign(t.module(), w, order));
    }
    return out;
}

namespace {

// Columns: q(word) in coordinates of the lbar representatives.
fp::FpMatrix lbar_projection(const TruncatedHopf& t, int n, const LieQuotient& lq) {
    fp::FpMatrix q(t.field(), lq.dim(), t.word_count(n));
    for (std::size_t u = 0; u < t.word_count(n); ++u) {
        const auto coords = lq.representatives.coordinates(lq.decomposables.reduce(beta_dense(t, n, u)));
        for (std::size_t r = 0; r < coords.size(); ++r) q.set(r, u, coords[r]);
    }
    return q;
}

}  // namespace

SectionSearchReport section_search(std::uint32_t p) {
    if (p != 3) throw ResourceLimit("group-algebra sweep is limited to p = 3 (3^6 candidates)");
    const fp::PrimeField f(p);
    const int n = 3;
    const TruncatedHopf t(GradedModule::ungraded(f, 2), n);
    const LieQuotient lq = lbar(t, n);
    const fp::FpMatrix q = lbar_projection(t, n, lq);
    const fp::FpMatrix kernel_t = fp::kernel_basis(q).transpose();

    std::vector<fp::FpMatrix> rho;
    for (std::size_t r = 0; r < factorial(n); ++r) rho.push_back(place_permutation(t, n, permutation_unrank(n, r)));

    SectionSearchReport rep{};
    rep.q_rank = fp::row_reduce(q).rank;
    std::size_t total = 1;
    for (std::size_t i = 0; i < rho.size(); ++i) total *= p;
    for (std::size_t code = 0; code < total; ++code) {
        fp::FpMatrix e(f, t.word_count(n), t.word_count(n));
        std::size_t c = code;
        std::vector<fp::Residue> alpha;
        for (std::size_t i = 0; i < rho.size(); ++i, c /= p) alpha.push_back(static_cast<fp::Residue>(c % p));
        for (std::size_t i = 0; i < rho.size(); ++i) {
            if (alpha[i] == 0) continue;
            for (std::size_t r = 0; r < e.rows(); ++r)
                for (std::size_t col = 0; col < e.cols(); ++col)
                    if (rho[i](r, col) != 0) e.add_to(r, col, f.mul(alpha[i], rho[i](r, col)));
        }
        const bool keeps = (q * e) == q;
        const bool kills = (e * kernel_t).is_zero();
        rep.preserve_q += keeps;
        rep.kill_kernel += kills;
        rep.sections += keeps && kills;
        const bool identity = alpha[0] == 1 && std::all_of(alpha.begin() + 1, alpha.end(), [](auto a) { return a == 0; });
        const bool symmetrizer = std::all_of(alpha.begin(), alpha.end(), [](auto a) { return a == 1; });
        if (identity) {
            rep.identity_preserves_q = keeps;
            rep.identity_kills_kernel = kills;
        }
        if (symmetrizer) rep.symmetrizer_preserves_q = keeps;
        ++rep.candidates;
    }
    return rep;
}

namespace {

// Normal form in (V (x) V / symmetric) (x) Lambda_{p-2}(V): sort the first two
// letters, sort the rest with the sign of the permutation, zero on repeats.
std::optional<std::pair<Word, int>> normalize_monomial(Word w) {
    if (w[0] > w[1]) std::swap(w[0], w[1]);
    int sign = 1;
    for (std::size_t i = 2; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] == w[j]) return std::nullopt;
            if (w[i] > w[j]) sign = -sign;
        }
    std::sort(w.begin() + 2, w.end());
    return std::make_pair(w, sign);
}

using LinearForms = std::map<Word, std::vector<fp::Residue>>;

void add_form(LinearForms& forms, const fp::PrimeField& f, const TensorElement& x, std::size_t unknown,
              std::size_t unknowns) {
    for (const auto& [w, c] : x.terms()) {
        const auto nf = normalize_monomial(w);
        if (!nf) continue;
        auto& row = forms[nf->first];
        row.resize(unknowns, 0);
        row[unknown] = nf->second > 0 ? f.add(row[unknown], c) : f.sub(row[unknown], c);
    }
}

}  // namespace

SteenrodReplay steenrod_obstruction_replay(std::uint32_t p) {
    const fp::PrimeField f(p);
    const std::size_t m = p - 1;
    // m_1 = x1 x1 (x) (x2 ^ ... ^ x_{p-1}), m_i = x1 x_i (x) (x1 ^ ... x_i omitted ... ^ x_{p-1}).
    std::vector<Word> monomials;
    {
        Word w{0, 0};
        for (Letter l = 1; l < m; ++l) w.push_back(l);
        monomials.push_back(w);
    }
    for (Letter i = 1; i < m; ++i) {
        Word w{0, i};
        for (Letter l = 0; l < m; ++l)
            if (l != i) w.push_back(l);
        monomials.push_back(w);
    }

    std::vector<Generator> gens;
    for (std::size_t i = 0; i < m; ++i)
        gens.push_back({"x" + std::to_string(i + 1), i == 0 ? static_cast<int>(2 * p - 1) : 1});
    SteenrodTable table;
    if (m >= 2) table[{1, 0}] = LetterCombination{{1, 1}};
    const GradedModule steen(f, gens, table);

    std::vector<std::vector<fp::Residue>> rows;
    // Relabelling x_i <-> x_{i+1} for i >= 2 negates the input, hence the output.
    for (Letter i = 1; i + 1 < m; ++i) {
        LinearForms forms;
        for (std::size_t u = 0; u < monomials.size(); ++u) {
            Word swapped = monomials[u];
            for (auto& l : swapped)
                if (l == i) l = i + 1;
                else if (l == i + 1) l = i;
            add_form(forms, f, TensorElement::of(f, swapped), u, m);
            add_form(forms, f, TensorElement::of(f, monomials[u]), u, m);
        }
        for (auto& [w, row] : forms) rows.push_back(row);
    }
    // P^2 kills the input x1 (x) (x1 ^ ... ^ x_{p-1}), hence the output.
    {
        LinearForms forms;
        for (std::size_t u = 0; u < monomials.size(); ++u)
            add_form(forms, f, steenrod_apply(steen, 2, TensorElement::of(f, monomials[u])), u, m);
        for (auto& [w, row] : forms) rows.push_back(row);
    }
    SteenrodReplay out{p, fp::FpMatrix(f, rows.size(), m), fp::FpMatrix(f, 0, m), false, {}, false, 0};
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < m; ++c) out.constraints.set(r, c, rows[r][c]);
    out.solutions = fp::kernel_basis(out.constraints);
    std::vector<fp::Residue> solution;
    if (out.solutions.rows() == 1 && out.solutions(0, 0) != 0) {
        const fp::Residue scale = f.inv(out.solutions(0, 0));
        for (std::size_t c = 0; c < m; ++c) solution.push_back(f.mul(scale, out.solutions(0, c)));
        out.alternating_solution = true;
        for (std::size_t c = 0; c < m; ++c)
            out.alternating_solution = out.alternating_solution && solution[c] == (c % 2 == 0 ? 1 : f.neg(1));
    }

    // q(alpha_i) on the actual lbar_p of p - 1 degree-1 letters.
    const TruncatedHopf t(GradedModule::ungraded(f, m), static_cast<int>(p));
    const LieQuotient lq = lbar(t, static_cast<int>(p));
    const fp::FpMatrix q = lbar_projection(t, static_cast<int>(p), lq);
    auto q_of = [&](const Word& w) {
        const std::size_t u = t.index_of(w);
        std::vector<fp::Residue> col(q.rows());
        for (std::size_t r = 0; r < q.rows(); ++r) col[r] = q(r, u);
        return col;
    };
    std::vector<std::vector<fp::Residue>> images;
    for (const Word& w : monomials) images.push_back(q_of(w));
    // Reference generator u with q(alpha_2) = -u.
    std::vector<fp::Residue> u_ref = images.size() > 1 ? images[1] : images[0];
    for (auto& c : u_ref) c = f.neg(c);
    if (images.size() == 1) u_ref = images[0];
    std::size_t pivot = 0;
    while (pivot < u_ref.size() && u_ref[pivot] == 0) ++pivot;
    out.alpha_pattern = pivot < u_ref.size();
    for (std::size_t i = 0; i < images.size() && out.alpha_pattern; ++i) {
        const fp::Residue c = f.mul(images[i][pivot], f.inv(u_ref[pivot]));
        for (std::size_t r = 0; r < u_ref.size(); ++r)
            if (images[i][r] != f.mul(c, u_ref[r])) out.alpha_pattern = false;
        out.alpha_multiples.push_back(f.to_signed(c));
    }
    if (out.alpha_pattern) {
        out.alpha_pattern = out.alpha_multiples[0] == f.to_signed(2 % p);
        for (std::size_t i = 1; i < out.alpha_multiples.size(); ++i)
            out.alpha_pattern = out.alpha_pattern && out.alpha_multiples[i] == (i % 2 == 1 ? -1 : 1);
    }
    fp::Residue total = 0;
    if (!solution.empty() && out.alpha_multiples.size() == m)
        for (std::size_t i = 0; i < m; ++i) total = f.add(total, f.mul(solution[i], f.reduce(out.alpha_multiples[i])));
    else
        total = 1;
    out.terminal_coefficient = total;
    return out;
}

}  // namespace hopf
