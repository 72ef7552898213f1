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

#ifndef HOPF_FORGE_WORD_HPP
#define HOPF_FORGE_WORD_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hopf_forge/fp.hpp"

namespace hopf {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// A finite F_p-linear combination of words. Words of different lengths may
// coexist; zero coefficients are never stored.
class TensorElement {
public:
    explicit TensorElement(fp::PrimeField field) : field_(field) {}

    static TensorElement unit(fp::PrimeField field) { return of(field, Word{}); }
    static TensorElement of(fp::PrimeField field, Word w, fp::Residue coeff = 1) {
        TensorElement e(field);
        e.add(w, coeff);
        return e;
    }

    const fp::PrimeField& field() const noexcept { return field_; }
    const std::map<Word, fp::Residue>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    void add(const Word& w, fp::Residue coeff) {
        coeff %= field_.p();
        if (coeff == 0) return;
        auto [it, fresh] = terms_.try_emplace(w, coeff);
        if (fresh) return;
        it->second = field_.add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }

    fp::Residue coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    TensorElement& operator+=(const TensorElement& rhs) {
        for (const auto& [w, c] : rhs.terms_) add(w, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& rhs) {
        for (const auto& [w, c] : rhs.terms_) add(w, field_.neg(c));
        return *this;
    }
    TensorElement scaled(fp::Residue s) const {
        TensorElement out(field_);
        for (const auto& [w, c] : terms_) out.add(w, field_.mul(c, s));
        return out;
    }

    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    fp::PrimeField field_;
    std::map<Word, fp::Residue> terms_;
};

// An element of T(V) (x) T(V), as a combination of word pairs.
class TensorPair {
public:
    explicit TensorPair(fp::PrimeField field) : field_(field) {}

    const fp::PrimeField& field() const noexcept { return field_; }
    const std::map<std::pair<Word, Word>, fp::Residue>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const Word& left, const Word& right, fp::Residue coeff) {
        coeff %= field_.p();
        if (coeff == 0) return;
        auto [it, fresh] = terms_.try_emplace({left, right}, coeff);
        if (fresh) return;
        it->second = field_.add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }

    fp::Residue coefficient(const Word& left, const Word& right) const {
        auto it = terms_.find({left, right});
        return it == terms_.end() ? 0 : it->second;
    }

    TensorPair& operator+=(const TensorPair& rhs) {
        for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, c);
        return *this;
    }
    TensorPair& operator-=(const TensorPair& rhs) {
        for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, field_.neg(c));
        return *this;
    }

    friend bool operator==(const TensorPair&, const TensorPair&) = default;

private:
    fp::PrimeField field_;
    std::map<std::pair<Word, Word>, fp::Residue> terms_;
};

}  // namespace hopf

#endif  // HOPF_FORGE_WORD_HPP
