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

#ifndef HOPF_FORGE_DECOMP_HPP
#define HOPF_FORGE_DECOMP_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf_forge/fp.hpp"
#include "hopf_forge/graded.hpp"
#include "hopf_forge/series.hpp"
#include "hopf_forge/tensor.hpp"

namespace hopf {

bool is_power_of(std::int64_t n, std::int64_t p) noexcept;

// L_n(V) for 2 <= n <= N with n not a power of p.
GradedSubspace b_generators(const TruncatedHopf& t);
// The subalgebra they generate.
GradedSubspace b_subalgebra(const TruncatedHopf& t);
// B(V) together with L_{p^s}(V) for every s >= k. k = 0 gives all of T(V).
GradedSubspace bk_subalgebra(const TruncatedHopf& t, int k);

struct ClosedForm {
    std::vector<std::size_t> dims;                  // by length 0..N
    std::map<std::pair<int, int>, std::size_t> table;  // (length, degree) -> dim
    std::map<int, std::size_t> degree_dims(int n) const;
};

// Expansion of the tensor product of E(lbar_p^k(V)) truncated at length N.
// Throws PreconditionViolation unless V is odd-only with dim V = p - 1.
ClosedForm amin_closed_form(const GradedModule& v, int max_length);

struct AminOracle {
    GradedSubspace b;
    QuotientCoalgebra quotient;
    // Set when V falls outside the closed-form hypotheses: the quotient only
    // bounds A^min from above.
    bool upper_bound_only;
};

inline constexpr std::size_t kMaxOracleWords = std::size_t{1} << 16;

// Throws ResourceLimit when T_N has more than kMaxOracleWords words.
AminOracle amin_oracle(const TruncatedHopf& t);

// chi(T) / chi(closed form).
PoincareSeries bmax_series(const GradedModule& v, Grading grading, int bound);

// sum_q q * dim H_q.
std::int64_t b_invariant(const std::map<int, std::size_t>& cells);

struct EhpReport {
    int p;
    std::int64_t b_y;
    std::int64_t shift;   // b_Y - p + 1
    std::int64_t b_prime; // sum of the degrees of V
    std::map<int, std::size_t> exterior_degrees;
    std::map<int, std::size_t> amin_lbar_degrees;
    std::vector<int> lbar_degrees;
    int degree_bound;
    SeriesComparison factorization;
    std::vector<std::pair<int, std::int64_t>> sphere_degrees;  // (k, degree)
    bool shift_matches() const noexcept { return shift == b_prime; }
};

// Y is taken with reduced homology the suspension of V.
EhpReport ehp_report(const GradedModule& v, int degree_bound = kDefaultDegreeBound, int max_k = 3);

// Largest degree at level k below the smallest at level k + 1, for k < max_k.
bool degree_separation_holds(const GradedModule& v, int max_k);

// The matrix of f^{(x)n} on Q_n; column j is the image of coset word j.
// With `check_ideal`, throws InvariantViolation when the ideal is not mapped
// into itself.
fp::FpMatrix induced_quotient_map(const QuotientCoalgebra& q, const ModuleMap& f, int n,
                                  bool check_ideal = true);

struct SelfmapDegree {
    std::vector<fp::FpMatrix> level_matrices;  // on Q_{p^j}, j < k
    std::vector<fp::Residue> level_dets;
    fp::Residue degree;
    // Scalar of f on the one-dimensional Q_{p^j - 1}, for 1 <= j <= k with p^j - 1 <= N.
    std::vector<fp::Residue> top_scalars;
};

SelfmapDegree selfmap_degree(const QuotientCoalgebra& q, const ModuleMap& f, int k, bool check_ideal = true);

// f_* + g_* on Q_{p^j}.
fp::FpMatrix convolution_primitive_sum(const QuotientCoalgebra& q, const ModuleMap& f,
                                       const ModuleMap& g, int j);
// (f * g)_* = mu (T(f) (x) T(g)) Delta on the embedded lbar_p^j generators,
// expressed in the basis of their projections.
fp::FpMatrix convolution_direct(const QuotientCoalgebra& q, const ModuleMap& f, const ModuleMap& g, int j);

// Images f^{(x)n}(u) of all length-n words as dense vectors.
std::vector<DenseVector> tensor_power_images(const TruncatedHopf& t, const ModuleMap& f, int n);

struct LengthRow {
    int n;
    std::size_t dim_t;
    std::size_t dim_b;
    std::size_t dim_ideal;
    std::size_t dim_amin_oracle;
    std::optional<std::size_t> dim_amin_closed;
    std::size_t dim_primitives;
};

struct DegreeRow {
    int n;
    int degree;
    std::size_t oracle;
    std::optional<std::size_t> closed;
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct DecompositionReport {
    std::uint32_t p;
    std::vector<Generator> generators;
    int max_length;
    bool upper_bound_only;
    std::vector<LengthRow> lengths;
    std::vector<DegreeRow> degrees;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

DecompositionReport decompose(const GradedModule& v, int max_length);

}  // namespace hopf

#endif  // HOPF_FORGE_DECOMP_HPP
