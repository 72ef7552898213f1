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

#include "hopf_forge/graded.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hopf_forge/error.hpp"

namespace hopf {

GradedModule::GradedModule(fp::PrimeField field, std::vector<Generator> generators,
                           std::optional<SteenrodTable> steenrod, SignMode mode)
    : field_(field), generators_(std::move(generators)), steenrod_(std::move(steenrod)), mode_(mode) {
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.name.empty()) throw PreconditionViolation("generator with empty name");
        if (g.degree < 0)
            throw PreconditionViolation("generator '" + g.name + "' has negative degree");
        if (!seen.insert(g.name).second)
            throw PreconditionViolation("duplicate generator name '" + g.name + "'");
    }
    if (!steenrod_) return;
    const int step = 2 * static_cast<int>(field_.p() - 1);
    for (auto& [key, image] : *steenrod_) {
        const auto [i, g] = key;
        if (i < 1) throw PreconditionViolation("Steenrod operation index must be at least 1");
        if (g >= generators_.size()) throw PreconditionViolation("Steenrod entry on unknown generator");
        const int target = generators_[g].degree - i * step;
        LetterCombination cleaned;
        for (auto [letter, c] : image) {
            if (letter >= generators_.size())
                throw PreconditionViolation("Steenrod image names an unknown generator");
            c %= field_.p();
            if (c == 0) continue;
            if (generators_[letter].degree != target)
                throw PreconditionViolation("P^" + std::to_string(i) + "(" + generators_[g].name +
                                            ") must land in degree " + std::to_string(target) +
                                            " but contains " + generators_[letter].name);
            cleaned.emplace_back(letter, c);
        }
        image = std::move(cleaned);
    }
}

GradedModule GradedModule::ungraded(fp::PrimeField field, std::size_t d, SignMode mode) {
    return with_degrees(field, std::vector<int>(d, 1), mode);
}

GradedModule GradedModule::with_degrees(fp::PrimeField field, const std::vector<int>& degrees,
                                        SignMode mode) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        gens.push_back({"x" + std::to_string(i + 1), degrees[i]});
    return GradedModule(field, std::move(gens), std::nullopt, mode);
}

std::optional<Letter> GradedModule::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name) return static_cast<Letter>(i);
    return std::nullopt;
}

std::vector<int> GradedModule::degrees() const {
    std::vector<int> out;
    for (const auto& g : generators_) out.push_back(g.degree);
    return out;
}

int GradedModule::word_degree(const Word& w) const {
    int total = 0;
    for (Letter l : w) total += degree(l);
    return total;
}

int GradedModule::word_parity(const Word& w) const {
    int total = 0;
    for (Letter l : w) total ^= parity(l);
    return total;
}

bool GradedModule::odd_only() const noexcept {
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const Generator& g) { return g.degree % 2 == 1; });
}

bool GradedModule::meets_periodicity_hypotheses() const noexcept {
    return odd_only() && dim() == field_.p() - 1;
}

const SteenrodTable& GradedModule::steenrod() const {
    if (!steenrod_) throw UnsupportedOperation("module carries no Steenrod operation table");
    return *steenrod_;
}

LetterCombination GradedModule::steenrod_image(int i, Letter g) const {
    if (i == 0) return {{g, 1}};
    const auto& table = steenrod();
    auto it = table.find({i, g});
    return it == table.end() ? LetterCombination{} : it->second;
}

GradedModule suspend(const GradedModule& m, int shift) {
    std::vector<Generator> gens = m.generators();
    for (auto& g : gens) {
        g.degree += shift;
        if (g.degree < 0)
            throw PreconditionViolation("suspension by " + std::to_string(shift) +
                                        " gives generator '" + g.name + "' a negative degree");
    }
    std::optional<SteenrodTable> table;
    if (m.has_steenrod()) table = m.steenrod();
    return GradedModule(m.field(), std::move(gens), std::move(table), m.sign_mode());
}

int koszul_sign(const std::vector<std::size_t>& order, const std::vector<int>& degrees) {
    if (order.size() != degrees.size())
        throw DimensionMismatch("permutation and degree list differ in length");
    std::vector<std::size_t> arr = order;
    std::vector<bool> seen(arr.size(), false);
    for (std::size_t v : arr) {
        if (v >= arr.size() || seen[v]) throw PreconditionViolation("not a permutation");
        seen[v] = true;
    }
    int sign = 1;
    for (std::size_t pass = 0; pass + 1 < arr.size(); ++pass) {
        bool swapped = false;
        for (std::size_t k = 0; k + 1 < arr.size() - pass; ++k) {
            if (arr[k] > arr[k + 1]) {
                if ((degrees[arr[k]] & 1) && (degrees[arr[k + 1]] & 1)) sign = -sign;
                std::swap(arr[k], arr[k + 1]);
                swapped = true;
            }
        }
        if (!swapped) break;
    }
    return sign;
}

int koszul_sign(const GradedModule& m, const Word& w, const std::vector<std::size_t>& order) {
    std::vector<int> parities;
    parities.reserve(w.size());
    for (Letter l : w) parities.push_back(m.parity(l));
    return koszul_sign(order, parities);
}

TensorElement steenrod_apply(const GradedModule& m, int i, const TensorElement& x) {
    if (!m.has_steenrod()) throw UnsupportedOperation("module carries no Steenrod operation table");
    if (i < 0) throw PreconditionViolation("negative Steenrod index");
    const fp::PrimeField& f = m.field();
    TensorElement out(f);
    for (const auto& [w, c] : x.terms()) {
        // Distribute i over the letters; each slot contributes P^{i_k}.
        Word current(w.size());
        std::function<void(std::size_t, int, fp::Residue)> expand = [&](std::size_t pos, int left,
                                                                        fp::Residue coeff) {
            if (pos == w.size()) {
                if (left == 0) out.add(current, coeff);
                return;
            }
            for (int here = 0; here <= left; ++here) {
                if (pos + 1 == w.size() && here != left) continue;
                for (auto [letter, v] : m.steenrod_image(here, w[pos])) {
                    current[pos] = letter;
                    expand(pos + 1, left - here, f.mul(coeff, v));
                }
            }
        };
        if (w.empty()) {
            if (i == 0) out.add(w, c);
            continue;
        }
        expand(0, i, c);
    }
    return out;
}

ModuleMap::ModuleMap(GradedModule source, GradedModule target, fp::FpMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (source_.field() != target_.field() || matrix_.field() != source_.field())
        throw DimensionMismatch("module map over mismatched fields");
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
        throw DimensionMismatch("module map matrix is " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) + ", expected " +
                                std::to_string(target_.dim()) + "x" + std::to_string(source_.dim()));
    for (std::size_t r = 0; r < matrix_.rows(); ++r)
        for (std::size_t c = 0; c < matrix_.cols(); ++c)
            if (matrix_(r, c) != 0 && target_.degree(static_cast<Letter>(r)) !=
                                          source_.degree(static_cast<Letter>(c)))
                throw PreconditionViolation("module map is not degree-preserving: " +
                                            source_.name(static_cast<Letter>(c)) + " -> " +
                                            target_.name(static_cast<Letter>(r)));
}

ModuleMap ModuleMap::identity(const GradedModule& m) {
    return ModuleMap(m, m, fp::FpMatrix::identity(m.field(), m.dim()));
}

ModuleMap ModuleMap::scalar(const GradedModule& m, std::int64_t c) {
    fp::FpMatrix mat(m.field(), m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) mat.set(i, i, c);
    return ModuleMap(m, m, std::move(mat));
}

LetterCombination ModuleMap::image(Letter g) const {
    LetterCombination out;
    for (std::size_t r = 0; r < matrix_.rows(); ++r)
        if (matrix_(r, g) != 0) out.emplace_back(static_cast<Letter>(r), matrix_(r, g));
    return out;
}

TensorElement ModuleMap::apply(const Word& w) const {
    const fp::PrimeField& f = source_.field();
    TensorElement out(f);
    Word current(w.size());
    std::function<void(std::size_t, fp::Residue)> expand = [&](std::size_t pos, fp::Residue coeff) {
        if (pos == w.size()) {
            out.add(current, coeff);
            return;
        }
        for (auto [letter, v] : image(w[pos])) {
            current[pos] = letter;
            expand(pos + 1, f.mul(coeff, v));
        }
    };
    expand(0, 1);
    return out;
}

TensorElement ModuleMap::apply(const TensorElement& x) const {
    TensorElement out(source_.field());
    for (const auto& [w, c] : x.terms()) out += apply(w).scaled(c);
    return out;
}

ModuleMap ModuleMap::compose(const ModuleMap& rhs) const {
    if (rhs.target_.degrees() != source_.degrees())
        throw DimensionMismatch("cannot compose module maps with mismatched shapes");
    return ModuleMap(rhs.source_, target_, matrix_ * rhs.matrix_);
}

ModuleMap ModuleMap::operator+(const ModuleMap& rhs) const {
    if (rhs.source_.degrees() != source_.degrees() || rhs.target_.degrees() != target_.degrees())
        throw DimensionMismatch("cannot add module maps with mismatched shapes");
    return ModuleMap(source_, target_, matrix_ + rhs.matrix_);
}

}  // namespace hopf
