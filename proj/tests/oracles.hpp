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

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library's algorithms.

#ifndef HOPF_FORGE_TESTS_ORACLES_HPP
#define HOPF_FORGE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Word = std::vector<std::uint32_t>;

inline std::int64_t mod(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

// Size of the span of the rows, by listing every combination; returns log_p.
inline std::size_t rank_by_enumeration(const std::vector<Vec>& rows, std::int64_t p) {
    std::set<Vec> span;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::vector<std::int64_t> c(rows.size(), 0);
    while (true) {
        Vec v(cols, 0);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t j = 0; j < cols; ++j) v[j] = mod(v[j] + c[r] * rows[r][j], p);
        span.insert(v);
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == p) c[i++] = 0;
        if (i == c.size()) break;
    }
    std::size_t rank = 0;
    for (std::size_t size = 1; size < span.size(); size *= static_cast<std::size_t>(p)) ++rank;
    return rank;
}

// Plain Gaussian elimination, for spans too large to enumerate.
inline std::size_t rank_gauss(std::vector<Vec> rows, std::int64_t p) {
    auto inv = [p](std::int64_t a) {
        for (std::int64_t b = 1; b < p; ++b)
            if (mod(a * b, p) == 1) return b;
        return std::int64_t{0};
    };
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && mod(rows[piv][c], p) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const std::int64_t s = inv(mod(rows[rank][c], p));
        for (auto& x : rows[rank]) x = mod(x * s, p);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && mod(rows[r][c], p) != 0) {
                const std::int64_t f = rows[r][c];
                for (std::size_t j = 0; j < cols; ++j) rows[r][j] = mod(rows[r][j] - f * rows[rank][j], p);
            }
        ++rank;
    }
    return rank;
}

inline std::int64_t leibniz_determinant(const std::vector<Vec>& m, std::int64_t p) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        std::int64_t term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term = mod(term * m[i][perm[i]], p);
        total = mod(total + term, p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline bool is_lyndon(const Word& w) {
    for (std::size_t r = 1; r < w.size(); ++r) {
        Word rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
        if (!(w < rot)) return false;
    }
    return true;
}

inline std::vector<Word> all_words(std::size_t d, std::size_t n) {
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (std::uint32_t a = 0; a < d; ++a) {
                Word x = w;
                x.push_back(a);
                next.push_back(x);
            }
        out = std::move(next);
    }
    return out;
}

inline std::size_t lyndon_count(std::size_t d, std::size_t n) {
    std::size_t count = 0;
    for (const auto& w : all_words(d, n)) count += is_lyndon(w);
    return count;
}

// Sign of a reordering: output position i holds input position order[i].
inline int inversion_sign(const std::vector<std::size_t>& order, const std::vector<int>& degrees) {
    int sign = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (order[i] > order[j] && (degrees[order[i]] & 1) && (degrees[order[j]] & 1)) sign = -sign;
    return sign;
}

// Elements of T(V) and T(V) (x) T(V) with integer coefficients mod p.
using Elem = std::map<Word, std::int64_t>;
using Pair = std::map<std::pair<Word, Word>, std::int64_t>;

inline int word_parity(const Word& w, const std::vector<int>& deg) {
    int s = 0;
    for (auto a : w) s += deg[a];
    return s & 1;
}

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
inline Pair pair_multiply(const Pair& x, const Pair& y, const std::vector<int>& deg, std::int64_t p) {
    Pair out;
    for (const auto& [k1, c1] : x)
        for (const auto& [k2, c2] : y) {
            const int s = word_parity(k1.second, deg) && word_parity(k2.first, deg) ? -1 : 1;
            auto& slot = out[{concat(k1.first, k2.first), concat(k1.second, k2.second)}];
            slot = mod(slot + s * c1 * c2, p);
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// Delta(w) as the product of Delta(x_i) = x_i (x) 1 + 1 (x) x_i.
inline Pair multiplicative_coproduct(const Word& w, const std::vector<int>& deg, std::int64_t p) {
    Pair acc{{{Word{}, Word{}}, 1}};
    for (auto a : w) acc = pair_multiply(acc, Pair{{{Word{a}, Word{}}, 1}, {{Word{}, Word{a}}, 1}}, deg, p);
    return acc;
}

inline Elem multiply(const Elem& x, const Elem& y, std::int64_t p) {
    Elem out;
    for (const auto& [a, c] : x)
        for (const auto& [b, d] : y) {
            auto& slot = out[concat(a, b)];
            slot = mod(slot + c * d, p);
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline Elem commutator(const Elem& x, const Elem& y, const std::vector<int>& deg, std::int64_t p) {
    Elem out = multiply(x, y, p);
    for (const auto& [a, c] : x)
        for (const auto& [b, d] : y) {
            const int s = word_parity(a, deg) && word_parity(b, deg) ? 1 : -1;
            auto& slot = out[concat(b, a)];
            slot = mod(slot + s * c * d, p);
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline Elem left_normed(const Word& w, const std::vector<int>& deg, std::int64_t p) {
    Elem acc{{Word{w[0]}, 1}};
    for (std::size_t i = 1; i < w.size(); ++i) acc = commutator(acc, Elem{{Word{w[i]}, 1}}, deg, p);
    return acc;
}

// dim L_n(V) as the rank of all left-normed brackets of length n.
inline std::size_t free_lie_dim(const std::vector<int>& deg, std::size_t n, std::int64_t p) {
    const auto words = all_words(deg.size(), n);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
    std::vector<Vec> rows;
    for (const auto& w : words) {
        Vec v(words.size(), 0);
        for (const auto& [u, c] : left_normed(w, deg, p)) v[index[u]] = c;
        rows.push_back(v);
    }
    return rank_gauss(rows, p);
}

// Coefficients of prod_{k >= 0, p^k <= N} (1 + t^{p^k})^{p - 1}, lengths 0..N.
inline std::vector<std::int64_t> closed_form_lengths(std::int64_t p, int n) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (std::int64_t w = 1; w <= n; w *= p)
        for (std::int64_t r = 0; r < p - 1; ++r)
            for (int i = n; i >= w; --i) c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - w)];
    return c;
}

// Same product graded by (length, degree), with the level-k generator of the
// i-th letter in length p^k and degree (p^k - 1)/(p - 1) * b' + deg_i, b' the
// degree sum.
inline std::map<std::pair<int, int>, std::int64_t> closed_form_table(std::int64_t p, const std::vector<int>& deg,
                                                                    int n) {
    const std::int64_t bprime = std::accumulate(deg.begin(), deg.end(), std::int64_t{0});
    std::map<std::pair<int, int>, std::int64_t> table{{{0, 0}, 1}};
    for (std::int64_t pk = 1; pk <= n; pk *= p)
        for (int d : deg) {
            const int w = static_cast<int>((pk - 1) / (p - 1) * bprime + d);
            auto next = table;
            for (const auto& [key, c] : table)
                if (key.first + pk <= n) next[{key.first + static_cast<int>(pk), key.second + w}] += c;
            table = std::move(next);
        }
    return table;
}

}  // namespace oracle

#endif  // HOPF_FORGE_TESTS_ORACLES_HPP
