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

#ifndef HOPF_FORGE_GRADED_HPP
#define HOPF_FORGE_GRADED_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf_forge/fp.hpp"
#include "hopf_forge/word.hpp"

namespace hopf {

struct Generator {
    std::string name;
    int degree;

    friend bool operator==(const Generator&, const Generator&) = default;
};

// Linear combination of generators, e.g. the value of P^i on a generator.
using LetterCombination = std::vector<std::pair<Letter, fp::Residue>>;

// Values of P^i_* on generators, keyed by (i, generator). Missing entries are zero.
using SteenrodTable = std::map<std::pair<int, Letter>, LetterCombination>;

// Whether transposing two letters picks up the sign (-1)^{|a||b|}. Plain mode
// treats every letter as even; it models ungraded letters over a ring.
enum class SignMode { koszul, plain };

// A finite graded F_p-module given by named homogeneous generators.
class GradedModule {
public:
    GradedModule(fp::PrimeField field, std::vector<Generator> generators,
                 std::optional<SteenrodTable> steenrod = std::nullopt,
                 SignMode mode = SignMode::koszul);

    // d generators x1..xd, all of degree 1.
    static GradedModule ungraded(fp::PrimeField field, std::size_t d,
                                 SignMode mode = SignMode::koszul);
    static GradedModule with_degrees(fp::PrimeField field, const std::vector<int>& degrees,
                                     SignMode mode = SignMode::koszul);

    const fp::PrimeField& field() const noexcept { return field_; }
    std::uint32_t p() const noexcept { return field_.p(); }
    std::size_t dim() const noexcept { return generators_.size(); }
    const std::vector<Generator>& generators() const noexcept { return generators_; }
    int degree(Letter i) const { return generators_.at(i).degree; }
    const std::string& name(Letter i) const { return generators_.at(i).name; }
    std::optional<Letter> index_of(const std::string& name) const;
    std::vector<int> degrees() const;

    SignMode sign_mode() const noexcept { return mode_; }
    int parity(Letter i) const { return mode_ == SignMode::plain ? 0 : (degree(i) & 1); }
    int word_degree(const Word& w) const;
    int word_parity(const Word& w) const;

    bool odd_only() const noexcept;
    // V_even = 0 and dim V = p - 1.
    bool meets_periodicity_hypotheses() const noexcept;

    bool has_steenrod() const noexcept { return steenrod_.has_value(); }
    const SteenrodTable& steenrod() const;
    // P^i_* applied to a generator; the empty combination is zero.
    LetterCombination steenrod_image(int i, Letter g) const;

    friend bool operator==(const GradedModule&, const GradedModule&) = default;

private:
    fp::PrimeField field_;
    std::vector<Generator> generators_;
    std::optional<SteenrodTable> steenrod_;
    SignMode mode_;
};

GradedModule suspend(const GradedModule& m, int shift);

// Sign of reordering graded letters. `order[k]` names the original position
// of the entry placed at position k; `degrees` are the original degrees.
// Computed by sorting with adjacent transpositions.
int koszul_sign(const std::vector<std::size_t>& order, const std::vector<int>& degrees);

// Koszul sign of rearranging the letters of `w` into `order`, using the parity
// convention of `m`.
int koszul_sign(const GradedModule& m, const Word& w, const std::vector<std::size_t>& order);

// P^i_* on tensors via the Cartan formula. Operations have even degree, so
// no signs arise. Throws UnsupportedOperation without a Steenrod table.
TensorElement steenrod_apply(const GradedModule& m, int i, const TensorElement& x);

// Degree-preserving linear map between graded modules. Column j of the matrix
// is the image of source generator j.
class ModuleMap {
public:
    ModuleMap(GradedModule source, GradedModule target, fp::FpMatrix matrix);

    static ModuleMap identity(const GradedModule& m);
    static ModuleMap scalar(const GradedModule& m, std::int64_t c);

    const GradedModule& source() const noexcept { return source_; }
    const GradedModule& target() const noexcept { return target_; }
    const fp::FpMatrix& matrix() const noexcept { return matrix_; }

    LetterCombination image(Letter g) const;
    // f^{(x)n} on a word.
    TensorElement apply(const Word& w) const;
    TensorElement apply(const TensorElement& x) const;

    // (*this) o rhs.
    ModuleMap compose(const ModuleMap& rhs) const;
    ModuleMap operator+(const ModuleMap& rhs) const;

private:
    GradedModule source_;
    GradedModule target_;
    fp::FpMatrix matrix_;
};

}  // namespace hopf

#endif  // HOPF_FORGE_GRADED_HPP
