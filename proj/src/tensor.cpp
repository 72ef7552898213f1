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

#include "hopf_forge/tensor.hpp"

#include <algorithm>
#include <bit>

#include "hopf_forge/error.hpp"

namespace hopf {

namespace {

constexpr std::size_t kMaxWordsPerLength = std::size_t{1} << 21;

// Walks every split of a length-n word into (w|_S, w|_{S^c}) with 0 < |S| < n
// (or all splits when `include_trivial`), reporting word indices and the
// unshuffle sign.
template <class Fn>
void for_each_split(const TruncatedHopf& t, int n, std::size_t index, bool include_trivial, Fn&& fn) {
    const std::size_t d = t.letters();
    const Word w = t.word_at(n, index);
    std::vector<int> par(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) par[k] = t.module().parity(w[k]);
    const std::uint32_t full = (n == 0) ? 0u : ((1u << n) - 1u);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        const bool trivial = (mask == 0 || mask == full);
        if (trivial && !include_trivial) {
            if (mask == full) break;
            continue;
        }
        std::size_t left = 0, right = 0;
        int odd_unselected = 0;
        int sign_parity = 0;
        for (int k = 0; k < n; ++k) {
            if (mask & (1u << k)) {
                left = left * d + w[static_cast<std::size_t>(k)];
                if (par[static_cast<std::size_t>(k)]) sign_parity ^= (odd_unselected & 1);
            } else {
                right = right * d + w[static_cast<std::size_t>(k)];
                odd_unselected += par[static_cast<std::size_t>(k)];
            }
        }
        fn(std::popcount(mask), left, right, sign_parity ? -1 : 1);
        if (mask == full) break;
    }
}

}  // namespace

TruncatedHopf::TruncatedHopf(GradedModule module, int max_length)
    : module_(std::move(module)), max_length_(max_length) {
    if (max_length_ < 0) throw PreconditionViolation("truncation bound must be nonnegative");
    const std::size_t d = module_.dim();
    powers_.push_back(1);
    for (int n = 1; n <= max_length_; ++n) {
        const std::size_t next = powers_.back() * d;
        if (next > kMaxWordsPerLength)
            throw ResourceLimit("T_" + std::to_string(n) + " of a " + std::to_string(d) +
                                "-generator module exceeds the word budget");
        powers_.push_back(next);
    }
    for (int n = 0; n <= max_length_; ++n) {
        std::vector<int> deg(powers_[static_cast<std::size_t>(n)], 0);
        std::vector<int> par(deg.size(), 0);
        for (std::size_t idx = 0; idx < deg.size(); ++idx) {
            if (n == 0) break;
            const std::size_t prefix = idx / d;
            const auto last = static_cast<Letter>(idx % d);
            deg[idx] = (n == 1 ? 0 : degrees_.back()[prefix]) + module_.degree(last);
            par[idx] = (n == 1 ? 0 : parities_.back()[prefix]) ^ module_.parity(last);
        }
        degrees_.push_back(std::move(deg));
        parities_.push_back(std::move(par));
    }
}

void TruncatedHopf::check_length(int n) const {
    if (n > max_length_) throw TruncationOverflow(n, max_length_);
    if (n < 0) throw PreconditionViolation("negative tensor length");
}

Word TruncatedHopf::word_at(int n, std::size_t index) const {
    check_length(n);
    const std::size_t d = letters();
    Word w(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        w[static_cast<std::size_t>(k)] = static_cast<Letter>(index % d);
        index /= d;
    }
    return w;
}

std::size_t TruncatedHopf::index_of(const Word& w) const {
    check_length(static_cast<int>(w.size()));
    std::size_t idx = 0;
    for (Letter l : w) {
        if (l >= letters()) throw PreconditionViolation("letter index out of range for module");
        idx = idx * letters() + l;
    }
    return idx;
}

DenseVector TruncatedHopf::to_dense(const TensorElement& x, int n) const {
    check_length(n);
    DenseVector v(word_count(n), 0);
    for (const auto& [w, c] : x.terms()) {
        if (static_cast<int>(w.size()) != n)
            throw DimensionMismatch("element has a term of length " + std::to_string(w.size()) +
                                    ", expected " + std::to_string(n));
        v[index_of(w)] = c;
    }
    return v;
}

TensorElement TruncatedHopf::from_dense(int n, std::span<const fp::Residue> v) const {
    if (v.size() != word_count(n)) throw DimensionMismatch("dense vector width mismatch");
    TensorElement x(field());
    for (std::size_t idx = 0; idx < v.size(); ++idx)
        if (v[idx] != 0) x.add(word_at(n, idx), v[idx]);
    return x;
}

DenseVector TruncatedHopf::dense_product(int la, std::span<const fp::Residue> a, int lb,
                                         std::span<const fp::Residue> b) const {
    check_length(la + lb);
    const fp::PrimeField& f = field();
    const std::size_t wb = word_count(lb);
    DenseVector out(word_count(la + lb), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i * wb + j] = f.add(out[i * wb + j], f.mul(a[i], b[j]));
    }
    return out;
}

DenseVector TruncatedHopf::dense_bracket(int la, std::span<const fp::Residue> a, int lb,
                                         std::span<const fp::Residue> b) const {
    check_length(la + lb);
    const fp::PrimeField& f = field();
    const std::size_t wa = word_count(la);
    const std::size_t wb = word_count(lb);
    DenseVector out(word_count(la + lb), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const int pa = word_parity(la, i);
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            const fp::Residue c = f.mul(a[i], b[j]);
            out[i * wb + j] = f.add(out[i * wb + j], c);
            const bool odd_swap = pa && word_parity(lb, j);
            fp::Residue& slot = out[j * wa + i];
            slot = odd_swap ? f.add(slot, c) : f.sub(slot, c);
        }
    }
    return out;
}

TensorElement product(const TruncatedHopf& t, const TensorElement& a, const TensorElement& b) {
    const fp::PrimeField& f = t.field();
    TensorElement out(f);
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            t.check_length(static_cast<int>(wa.size() + wb.size()));
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, f.mul(ca, cb));
        }
    return out;
}

TensorPair coproduct(const GradedModule& m, const Word& w) {
    const fp::PrimeField& f = m.field();
    TensorPair out(f);
    const std::size_t n = w.size();
    if (n >= 31) throw ResourceLimit("coproduct of a word longer than 30 letters");
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 0;; ++mask) {
        Word left, right;
        int odd_unselected = 0;
        int sign_parity = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const int par = m.parity(w[k]);
            if (mask & (1u << k)) {
                left.push_back(w[k]);
                if (par) sign_parity ^= (odd_unselected & 1);
            } else {
                right.push_back(w[k]);
                odd_unselected += par;
            }
        }
        out.add(left, right, sign_parity ? f.neg(1) : 1);
        if (mask == full) break;
    }
    return out;
}

TensorPair coproduct(const GradedModule& m, const TensorElement& x) {
    TensorPair out(m.field());
    for (const auto& [w, c] : x.terms()) {
        const TensorPair d = coproduct(m, w);
        for (const auto& [k, v] : d.terms()) out.add(k.first, k.second, m.field().mul(c, v));
    }
    return out;
}

TensorPair reduced_coproduct(const GradedModule& m, const TensorElement& x) {
    TensorPair out = coproduct(m, x);
    const fp::PrimeField& f = m.field();
    for (const auto& [w, c] : x.terms()) {
        if (w.empty()) {
            // Delta(1) = 1 (x) 1; the reduced coproduct of the unit is -1 (x) 1.
            out.add({}, {}, f.neg(c));
            continue;
        }
        out.add(w, {}, f.neg(c));
        out.add({}, w, f.neg(c));
    }
    return out;
}

TensorPair twist(const GradedModule& m, const TensorPair& x) {
    TensorPair out(m.field());
    for (const auto& [k, c] : x.terms()) {
        const bool odd = m.word_parity(k.first) && m.word_parity(k.second);
        out.add(k.second, k.first, odd ? m.field().neg(c) : c);
    }
    return out;
}

TensorPair pair_product(const GradedModule& m, const TensorPair& x, const TensorPair& y) {
    const fp::PrimeField& f = m.field();
    TensorPair out(f);
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            Word left = kx.first;
            left.insert(left.end(), ky.first.begin(), ky.first.end());
            Word right = kx.second;
            right.insert(right.end(), ky.second.begin(), ky.second.end());
            fp::Residue c = f.mul(cx, cy);
            if (m.word_parity(kx.second) && m.word_parity(ky.first)) c = f.neg(c);
            out.add(left, right, c);
        }
    return out;
}

std::map<std::vector<Word>, fp::Residue> coassoc_left(const GradedModule& m, const Word& w) {
    const fp::PrimeField& f = m.field();
    std::map<std::vector<Word>, fp::Residue> out;
    const TensorPair outer = coproduct(m, w);
    for (const auto& [k, c] : outer.terms()) {
        const TensorPair inner = coproduct(m, k.first);
        for (const auto& [k2, c2] : inner.terms()) {
            auto& slot = out[{k2.first, k2.second, k.second}];
            slot = f.add(slot, f.mul(c, c2));
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::map<std::vector<Word>, fp::Residue> coassoc_right(const GradedModule& m, const Word& w) {
    const fp::PrimeField& f = m.field();
    std::map<std::vector<Word>, fp::Residue> out;
    const TensorPair outer = coproduct(m, w);
    for (const auto& [k, c] : outer.terms()) {
        const TensorPair inner = coproduct(m, k.second);
        for (const auto& [k2, c2] : inner.terms()) {
            auto& slot = out[{k.first, k2.first, k2.second}];
            slot = f.add(slot, f.mul(c, c2));
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

TensorElement counit_left(const TensorPair& x) {
    TensorElement out(x.field());
    for (const auto& [k, c] : x.terms())
        if (k.first.empty()) out.add(k.second, c);
    return out;
}

// ---------------------------------------------------------------------------

GradedSubspace GradedSubspace::empty_like(const TruncatedHopf& t) {
    std::vector<fp::EchelonBasis> comps;
    for (int n = 0; n <= t.max_length(); ++n) comps.emplace_back(t.field(), t.word_count(n));
    return GradedSubspace(std::move(comps));
}

GradedSubspace GradedSubspace::zero(const TruncatedHopf& t) { return empty_like(t); }

GradedSubspace GradedSubspace::unit_line(const TruncatedHopf& t) {
    GradedSubspace s = empty_like(t);
    const DenseVector one{1};
    s.insert(0, one);
    return s;
}

GradedSubspace GradedSubspace::whole(const TruncatedHopf& t) {
    GradedSubspace s = empty_like(t);
    for (int n = 0; n <= t.max_length(); ++n) {
        DenseVector e(t.word_count(n), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = 1;
            s.insert(n, e);
            e[i] = 0;
        }
    }
    return s;
}

GradedSubspace GradedSubspace::generators(const TruncatedHopf& t) {
    GradedSubspace s = empty_like(t);
    if (t.max_length() < 1) return s;
    DenseVector e(t.word_count(1), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = 1;
        s.insert(1, e);
        e[i] = 0;
    }
    return s;
}

std::vector<std::size_t> GradedSubspace::dims() const {
    std::vector<std::size_t> out;
    for (const auto& c : components_) out.push_back(c.rank());
    return out;
}

std::map<int, std::size_t> GradedSubspace::degree_dims(const TruncatedHopf& t, int n) const {
    std::map<int, std::size_t> out;
    for (std::uint32_t piv : at(n).pivots()) ++out[t.word_degree(n, piv)];
    return out;
}

void GradedSubspace::absorb(const GradedSubspace& other) {
    if (other.components_.size() != components_.size())
        throw DimensionMismatch("graded subspaces with different truncation bounds");
    for (std::size_t n = 0; n < components_.size(); ++n)
        for (std::size_t r = 0; r < other.components_[n].rank(); ++r)
            components_[n].insert(other.components_[n].row_dense(r));
}

GradedSubspace subalgebra_generated(const TruncatedHopf& t, const std::vector<GradedSubspace>& gens) {
    GradedSubspace g = GradedSubspace::zero(t);
    for (const auto& s : gens) g.absorb(s);
    GradedSubspace b = GradedSubspace::unit_line(t);
    for (int n = 1; n <= t.max_length(); ++n) {
        auto& target = b.at(n);
        const std::size_t full = t.word_count(n);
        for (std::size_t r = 0; r < g.dim(n) && target.rank() < full; ++r) target.insert(g.at(n).row_dense(r));
        for (int i = 1; i < n && target.rank() < full; ++i) {
            for (std::size_t r = 0; r < g.dim(i) && target.rank() < full; ++r) {
                const DenseVector gr = g.at(i).row_dense(r);
                for (std::size_t s = 0; s < b.dim(n - i) && target.rank() < full; ++s)
                    target.insert(t.dense_product(i, gr, n - i, b.at(n - i).row_dense(s)));
            }
        }
    }
    return b;
}

void require_product_closed(const TruncatedHopf& t, const GradedSubspace& b) {
    const int top = t.max_length();
    for (int i = 1; i <= top; ++i)
        for (int j = 1; i + j <= top; ++j) {
            const auto& target = b.at(i + j);
            if (target.rank() == t.word_count(i + j)) continue;
            for (std::size_t r = 0; r < b.dim(i); ++r) {
                const DenseVector a = b.at(i).row_dense(r);
                for (std::size_t s = 0; s < b.dim(j); ++s)
                    if (!target.contains(t.dense_product(i, a, j, b.at(j).row_dense(s))))
                        throw InvariantViolation("subspace is not closed under product: lengths " +
                                                 std::to_string(i) + " and " + std::to_string(j));
            }
        }
}

void require_primitive(const TruncatedHopf& t, const GradedSubspace& b) {
    const fp::PrimeField& f = t.field();
    for (int n = 2; n <= t.max_length(); ++n) {
        const std::size_t wn = t.word_count(n);
        for (std::size_t r = 0; r < b.dim(n); ++r) {
            const DenseVector row = b.at(n).row_dense(r);
            // Block for each left length; left index * count(right) + right.
            std::vector<DenseVector> blocks(static_cast<std::size_t>(n));
            for (int i = 1; i < n; ++i) blocks[static_cast<std::size_t>(i)].assign(wn, 0);
            for (std::size_t idx = 0; idx < wn; ++idx) {
                if (row[idx] == 0) continue;
                for_each_split(t, n, idx, false, [&](int li, std::size_t left, std::size_t right, int sign) {
                    auto& slot = blocks[static_cast<std::size_t>(li)][left * t.word_count(n - li) + right];
                    slot = sign > 0 ? f.add(slot, row[idx]) : f.sub(slot, row[idx]);
                });
            }
            for (int i = 1; i < n; ++i)
                for (fp::Residue v : blocks[static_cast<std::size_t>(i)])
                    if (v != 0)
                        throw InvariantViolation("generator subspace has a non-primitive element in length " +
                                                 std::to_string(n));
        }
    }
}

GradedSubspace indecomposables(const TruncatedHopf& t, const GradedSubspace& b) {
    GradedSubspace reps = GradedSubspace::zero(t);
    for (int n = 1; n <= t.max_length(); ++n) {
        fp::EchelonBasis decomposables(t.field(), t.word_count(n));
        const std::size_t target = b.dim(n);
        for (int i = 1; i < n && decomposables.rank() < target; ++i)
            for (std::size_t r = 0; r < b.dim(i) && decomposables.rank() < target; ++r) {
                const DenseVector a = b.at(i).row_dense(r);
                for (std::size_t s = 0; s < b.dim(n - i) && decomposables.rank() < target; ++s)
                    decomposables.insert(t.dense_product(i, a, n - i, b.at(n - i).row_dense(s)));
            }
        for (std::size_t r = 0; r < b.dim(n); ++r)
            reps.insert(n, decomposables.reduce(b.at(n).row_dense(r)));
    }
    return reps;
}

// ---------------------------------------------------------------------------

QuotientCoalgebra::QuotientCoalgebra(const TruncatedHopf& t, std::vector<fp::EchelonBasis> ideal)
    : algebra_(t), ideal_(std::move(ideal)) {
    if (ideal_.size() != static_cast<std::size_t>(t.max_length() + 1))
        throw DimensionMismatch("ideal must have one component per tensor length");
    for (int n = 0; n <= t.max_length(); ++n) {
        const auto& comp = ideal_[static_cast<std::size_t>(n)];
        if (comp.cols() != t.word_count(n)) throw DimensionMismatch("ideal component has wrong width");
        cosets_.push_back(comp.non_pivot_columns());
        std::vector<std::int64_t> pos(t.word_count(n), -1);
        const auto& cs = cosets_.back();
        for (std::size_t k = 0; k < cs.size(); ++k) pos[cs[k]] = static_cast<std::int64_t>(k);
        coset_position_.push_back(std::move(pos));
    }
}

std::vector<std::size_t> QuotientCoalgebra::dims() const {
    std::vector<std::size_t> out;
    for (const auto& c : cosets_) out.push_back(c.size());
    return out;
}

std::map<int, std::size_t> QuotientCoalgebra::degree_dims(int n) const {
    std::map<int, std::size_t> out;
    for (std::uint32_t w : coset_words(n)) ++out[algebra_.word_degree(n, w)];
    return out;
}

DenseVector QuotientCoalgebra::project_word(int n, std::size_t index) const {
    const auto& pos = coset_position_.at(static_cast<std::size_t>(n));
    DenseVector out(dim(n), 0);
    if (pos.at(index) >= 0) {
        out[static_cast<std::size_t>(pos[index])] = 1;
        return out;
    }
    const auto& comp = ideal(n);
    const auto& piv = comp.pivots();
    const auto r = static_cast<std::size_t>(
        std::lower_bound(piv.begin(), piv.end(), static_cast<std::uint32_t>(index)) - piv.begin());
    const fp::PrimeField& f = algebra_.field();
    for (const auto& [col, val] : comp.row_sparse(r))
        if (pos[col] >= 0) out[static_cast<std::size_t>(pos[col])] = f.neg(val);
    return out;
}

DenseVector QuotientCoalgebra::project(int n, std::span<const fp::Residue> v) const {
    if (v.size() != algebra_.word_count(n)) throw DimensionMismatch("vector width mismatch in project");
    const auto rem = ideal(n).reduce(v);
    DenseVector out(dim(n), 0);
    const auto& cs = coset_words(n);
    for (std::size_t k = 0; k < cs.size(); ++k) out[k] = rem[cs[k]];
    return out;
}

DenseVector QuotientCoalgebra::lift(int n, std::span<const fp::Residue> coords) const {
    if (coords.size() != dim(n)) throw DimensionMismatch("coordinate width mismatch in lift");
    DenseVector out(algebra_.word_count(n), 0);
    const auto& cs = coset_words(n);
    for (std::size_t k = 0; k < cs.size(); ++k) out[cs[k]] = coords[k];
    return out;
}

std::size_t QuotientCoalgebra::reduced_target_dim(int n) const {
    std::size_t total = 0;
    for (int i = 1; i < n; ++i) total += dim(i) * dim(n - i);
    return total;
}

fp::FpMatrix QuotientCoalgebra::word_reduced_coproduct(int n) const {
    algebra_.check_length(n);
    const fp::PrimeField& f = algebra_.field();
    std::vector<std::size_t> offset(static_cast<std::size_t>(n + 1), 0);
    for (int i = 1; i < n; ++i)
        offset[static_cast<std::size_t>(i + 1)] = offset[static_cast<std::size_t>(i)] + dim(i) * dim(n - i);
    // Projections of every shorter word, computed once.
    std::vector<std::vector<DenseVector>> tables(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i)
        for (std::size_t w = 0; w < algebra_.word_count(i); ++w)
            tables[static_cast<std::size_t>(i)].push_back(project_word(i, w));

    fp::FpMatrix out(f, algebra_.word_count(n), reduced_target_dim(n));
    for (std::size_t idx = 0; idx < algebra_.word_count(n); ++idx) {
        for_each_split(algebra_, n, idx, false, [&](int li, std::size_t left, std::size_t right, int sign) {
            const auto& pl = tables[static_cast<std::size_t>(li)][left];
            const auto& pr = tables[static_cast<std::size_t>(n - li)][right];
            const std::size_t base = offset[static_cast<std::size_t>(li)];
            const std::size_t width = pr.size();
            for (std::size_t a = 0; a < pl.size(); ++a) {
                if (pl[a] == 0) continue;
                const fp::Residue ca = sign > 0 ? pl[a] : f.neg(pl[a]);
                for (std::size_t b = 0; b < width; ++b)
                    if (pr[b] != 0) out.add_to(idx, base + a * width + b, f.mul(ca, pr[b]));
            }
        });
    }
    return out;
}

fp::FpMatrix QuotientCoalgebra::reduced_coproduct_matrix(int n) const {
    const fp::FpMatrix words = word_reduced_coproduct(n);
    const auto& cs = coset_words(n);
    fp::FpMatrix out(algebra_.field(), cs.size(), words.cols());
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const auto src = words.row(cs[k]);
        std::copy(src.begin(), src.end(), out.row(k).begin());
    }
    return out;
}

bool QuotientCoalgebra::coideal_verified(int n) const {
    if (n < 2) return true;
    const fp::FpMatrix words = word_reduced_coproduct(n);
    const fp::PrimeField& f = algebra_.field();
    const auto& comp = ideal(n);
    for (std::size_t r = 0; r < comp.rank(); ++r) {
        DenseVector acc(words.cols(), 0);
        for (const auto& [col, val] : comp.row_sparse(r)) {
            const auto src = words.row(col);
            for (std::size_t k = 0; k < acc.size(); ++k)
                if (src[k] != 0) acc[k] = f.add(acc[k], f.mul(val, src[k]));
        }
        if (std::any_of(acc.begin(), acc.end(), [](fp::Residue x) { return x != 0; })) return false;
    }
    return true;
}

QuotientCoalgebra left_ideal_quotient(const GradedSubspace& b, const TruncatedHopf& t, bool check_closure) {
    if (b.max_length() != t.max_length())
        throw DimensionMismatch("subalgebra and tensor algebra have different truncation bounds");
    if (b.dim(0) != 1) throw InvariantViolation("subalgebra must contain the unit");
    if (check_closure) require_product_closed(t, b);
    const std::size_t d = t.letters();
    std::vector<fp::EchelonBasis> ideal;
    ideal.emplace_back(t.field(), 1);
    for (int n = 1; n <= t.max_length(); ++n) {
        fp::EchelonBasis comp(t.field(), t.word_count(n));
        // IB * T in length n is (IB * T)_{n-1} * V + IB_n.
        const auto& prev = ideal.back();
        for (std::size_t r = 0; r < prev.rank(); ++r) {
            const auto row = prev.row_sparse(r);
            for (std::size_t a = 0; a < d; ++a) {
                fp::SparseVector shifted;
                shifted.reserve(row.size());
                for (const auto& [col, val] : row)
                    shifted.emplace_back(static_cast<std::uint32_t>(col * d + a), val);
                comp.insert(shifted);
            }
        }
        for (std::size_t r = 0; r < b.dim(n); ++r) comp.insert(b.at(n).row_sparse(r));
        ideal.push_back(std::move(comp));
    }
    return QuotientCoalgebra(t, std::move(ideal));
}

fp::EchelonBasis primitives(const QuotientCoalgebra& q, int n) {
    const fp::PrimeField& f = q.algebra().field();
    fp::EchelonBasis out(f, q.dim(n));
    if (n == 0) return out;
    const fp::FpMatrix delta = q.reduced_coproduct_matrix(n);
    const fp::FpMatrix ker = fp::kernel_basis(delta.transpose());
    for (std::size_t r = 0; r < ker.rows(); ++r) out.insert(ker.row(r));
    return out;
}

fp::EchelonBasis primitives(const TruncatedHopf& t, int n) {
    t.check_length(n);
    std::vector<fp::EchelonBasis> zero;
    for (int k = 0; k <= t.max_length(); ++k) zero.emplace_back(t.field(), t.word_count(k));
    return primitives(QuotientCoalgebra(t, std::move(zero)), n);
}

}  // namespace hopf
