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

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "hopf_forge/cli.hpp"
#include "hopf_forge/decomp.hpp"
#include "hopf_forge/error.hpp"
#include "hopf_forge/jameshopf.hpp"
#include "hopf_forge/lie.hpp"
#include "hopf_forge/series.hpp"

namespace hopf {

const char* to_string(CheckStatus s) noexcept {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skip: return "SKIP";
    }
    return "?";
}

namespace {

struct Outcome {
    CheckStatus status;
    std::string detail;
};

Outcome pass(std::string detail) { return {CheckStatus::pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {CheckStatus::fail, std::move(detail)}; }
Outcome skip(std::string detail) { return {CheckStatus::skip, std::move(detail)}; }
Outcome verdict(bool ok, std::string detail) { return {ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)}; }

template <class T>
std::string join(const std::vector<T>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    return os.str();
}

class Suite {
public:
    Suite(const GradedModule& v, int max_length, std::uint64_t seed)
        : v_(v), n_(max_length), seed_(seed), t_(v, max_length) {}

    std::map<std::string, std::function<Outcome()>> checks() {
        return {
            {"antisymmetry", [this] { return antisymmetry(); }},
            {"coalgebra_axioms", [this] { return coalgebra_axioms(); }},
            {"coideal", [this] { return report_check("coideal"); }},
            {"coinvariants", [this] { return coinvariants(); }},
            {"convolution", [this] { return convolution(); }},
            {"degree_separation", [this] { return degree_separation(); }},
            {"ehp", [this] { return ehp(); }},
            {"jacobi", [this] { return jacobi(); }},
            {"james_hopf_inclusion", [this] { return james_hopf_inclusion(); }},
            {"james_hopf_lie_morphism", [this] { return james_hopf_lie_morphism(); }},
            {"lbar_dims", [this] { return lbar_dims(); }},
            {"lbar_transport", [this] { return transport(); }},
            {"lemma36", [this] { return section_search_check(); }},
            {"lie_rank", [this] { return lie_rank(); }},
            {"oracle_equivalence", [this] { return oracle_equivalence(); }},
            {"pbw", [this] { return pbw(); }},
            {"primitive_support", [this] { return report_check("primitive_support"); }},
            {"selfmap_multiplicativity", [this] { return selfmap_multiplicativity(); }},
            {"series_identities", [this] { return series_identities(); }},
            {"steenrod_replay", [this] { return steenrod_replay(); }},
            {"witt", [this] { return witt(); }},
        };
    }

private:
    bool hypotheses() const { return v_.meets_periodicity_hypotheses(); }
    int p() const { return static_cast<int>(v_.p()); }
    const fp::PrimeField& field() const { return v_.field(); }

    const DecompositionReport& report() {
        if (!report_) report_ = decompose(v_, n_);
        return *report_;
    }
    const AminOracle& oracle() {
        if (!oracle_) oracle_.emplace(amin_oracle(t_));
        return *oracle_;
    }

    Outcome report_check(const std::string& name) {
        for (const auto& c : report().checks)
            if (c.name == name) return verdict(c.pass, c.detail);
        return skip("needs V odd-only with dim V = p - 1");
    }

    ModuleMap random_map(std::mt19937_64& rng) const {
        std::uniform_int_distribution<std::int64_t> dist(0, p() - 1);
        fp::FpMatrix m(field(), v_.dim(), v_.dim());
        for (std::size_t i = 0; i < v_.dim(); ++i)
            for (std::size_t j = 0; j < v_.dim(); ++j)
                if (v_.degree(static_cast<Letter>(i)) == v_.degree(static_cast<Letter>(j))) m.set(i, j, dist(rng));
        return ModuleMap(v_, v_, m);
    }

    Word random_word(std::mt19937_64& rng, int len) const {
        std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(v_.dim() - 1));
        Word w(static_cast<std::size_t>(len));
        for (auto& l : w) l = letter(rng);
        return w;
    }

    Outcome antisymmetry() {
        if (v_.dim() == 0 || n_ < 2) return skip("needs a letter and N >= 2");
        const auto& f = field();
        for (Letter a = 0; a < v_.dim(); ++a)
            for (Letter b = 0; b < v_.dim(); ++b) {
                const auto x = TensorElement::of(f, {a});
                const auto y = TensorElement::of(f, {b});
                const bool odd = v_.parity(a) && v_.parity(b);
                const auto sum = bracket(t_, x, y) + bracket(t_, y, x).scaled(odd ? f.neg(1) : 1);
                if (!sum.is_zero()) return fail("letters " + v_.name(a) + ", " + v_.name(b));
            }
        std::mt19937_64 rng(seed_);
        std::size_t tried = 0;
        for (int len = 2; len <= std::min(n_, 6); ++len)
            for (int s = 0; s < 10; ++s, ++tried) {
                Word w = random_word(rng, len);
                Word swapped = w;
                std::swap(swapped[0], swapped[1]);
                const bool odd = v_.parity(w[0]) && v_.parity(w[1]);
                const TensorElement total = beta(t_, w) + beta(t_, swapped).scaled(odd ? f.neg(1) : 1);
                if (!total.is_zero()) return fail("beta on a random word of length " + std::to_string(len));
            }
        return pass("letter pairs and " + std::to_string(tried) + " random words");
    }

    Outcome jacobi() {
        if (n_ < 3 || v_.dim() == 0) return skip("needs N >= 3");
        const auto& f = field();
        std::mt19937_64 rng(seed_ + 1);
        std::size_t triples = 0;
        auto sign = [&](const Word& a, const Word& b) { return v_.word_parity(a) && v_.word_parity(b); };
        auto check = [&](const Word& a, const Word& b, const Word& c) {
            const auto x = TensorElement::of(f, a), y = TensorElement::of(f, b), z = TensorElement::of(f, c);
            TensorElement total(f);
            auto term = [&](const TensorElement& e, bool odd) { total += odd ? e.scaled(f.neg(1)) : e; };
            term(bracket(t_, x, bracket(t_, y, z)), sign(a, c));
            term(bracket(t_, y, bracket(t_, z, x)), sign(b, a));
            term(bracket(t_, z, bracket(t_, x, y)), sign(c, b));
            ++triples;
            return total.is_zero();
        };
        for (Letter a = 0; a < v_.dim(); ++a)
            for (Letter b = 0; b < v_.dim(); ++b)
                for (Letter c = 0; c < v_.dim(); ++c)
                    if (!check({a}, {b}, {c})) return fail("letters " + v_.name(a) + v_.name(b) + v_.name(c));
        for (int s = 0; s < 20; ++s) {
            std::uniform_int_distribution<int> len(1, std::max(1, n_ / 3));
            const Word a = random_word(rng, len(rng)), b = random_word(rng, len(rng)), c = random_word(rng, len(rng));
            if (static_cast<int>(a.size() + b.size() + c.size()) > n_) continue;
            if (!check(a, b, c)) return fail("random word triple");
        }
        return pass(std::to_string(triples) + " triples");
    }

    Outcome coalgebra_axioms() {
        const auto& m = v_;
        const auto& f = field();
        const int top = std::min(n_, 6);
        std::size_t words = 0;
        for (int len = 0; len <= top; ++len)
            for (std::size_t u = 0; u < t_.word_count(len); ++u, ++words) {
                const Word w = t_.word_at(len, u);
                const TensorPair d = coproduct(m, w);
                if (coassoc_left(m, w) != coassoc_right(m, w)) return fail("coassociativity at length " + std::to_string(len));
                if (twist(m, d) != d) return fail("cocommutativity at length " + std::to_string(len));
                if (counit_left(d) != TensorElement::of(f, w)) return fail("counit at length " + std::to_string(len));
            }
        std::size_t pairs = 0;
        for (int la = 0; la <= std::min(3, n_); ++la)
            for (int lb = 0; la + lb <= n_ && lb <= 3; ++lb)
                for (std::size_t a = 0; a < t_.word_count(la); ++a)
                    for (std::size_t b = 0; b < t_.word_count(lb); ++b, ++pairs) {
                        const Word wa = t_.word_at(la, a), wb = t_.word_at(lb, b);
                        Word ab = wa;
                        ab.insert(ab.end(), wb.begin(), wb.end());
                        if (coproduct(m, ab) != pair_product(m, coproduct(m, wa), coproduct(m, wb)))
                            return fail("multiplicativity on lengths " + std::to_string(la) + "+" + std::to_string(lb));
                    }
        return pass(std::to_string(words) + " words, " + std::to_string(pairs) + " products");
    }

    Outcome coinvariants() {
        if (v_.dim() > 3) return skip("needs dim V <= 3");
        std::vector<std::string> parts;
        const GradedModule plain(field(), v_.generators(), std::nullopt, SignMode::plain);
        for (std::size_t n = 1; n <= 4 && static_cast<int>(n) <= n_; ++n) {
            const auto r = coinvariants_check(plain, n);
            if (!r.equal) return fail("ungraded n=" + std::to_string(n) + ": " + std::to_string(r.lhs_dim) + " vs " + std::to_string(r.rhs_dim));
        }
        // Graded modules only below n = p.
        for (std::size_t n = 1; n < static_cast<std::size_t>(p()) && n <= 4 && static_cast<int>(n) <= n_; ++n) {
            const auto r = coinvariants_check(v_, n);
            if (!r.equal) return fail("graded n=" + std::to_string(n) + ": " + std::to_string(r.lhs_dim) + " vs " + std::to_string(r.rhs_dim));
        }
        return pass("ungraded n <= 4, graded n < p");
    }

    Outcome lie_rank() {
        for (std::size_t n = 2; n <= 6; ++n)
            for (SignMode mode : {SignMode::plain, SignMode::koszul}) {
                const LieN lie = lie_n_module(n, mode, field());
                if (lie.rank() != factorial(n - 1) || lie.beta_image_rank() != lie.rank())
                    return fail("Lie(" + std::to_string(n) + ") rank " + std::to_string(lie.rank()));
            }
        return pass("ranks 1,2,6,24,120");
    }

    Outcome witt() {
        for (std::size_t d = 1; d <= 3; ++d) {
            const GradedModule m = GradedModule::ungraded(field(), d, SignMode::plain);
            const TruncatedHopf t(m, 6);
            for (int n = 1; n <= 6; ++n) {
                const auto rank = free_lie_component(t, n).rank();
                if (rank != witt_dim(d, static_cast<std::uint64_t>(n)))
                    return fail("d=" + std::to_string(d) + " n=" + std::to_string(n));
            }
        }
        return pass("d <= 3, n <= 6");
    }

    Outcome pbw() {
        if (v_.sign_mode() != SignMode::koszul) return skip("needs Koszul signs");
        const auto degs = v_.degrees();
        if (degs.empty() || *std::min_element(degs.begin(), degs.end()) < 1) return skip("needs positive degrees");
        const int bound = n_ * *std::min_element(degs.begin(), degs.end());
        const GradedSubspace lie = free_lie_algebra(t_);
        std::vector<int> weights;
        for (int n = 1; n <= n_; ++n)
            for (const auto& [deg, dim] : lie.degree_dims(t_, n))
                weights.insert(weights.end(), dim, deg);
        const auto cmp = compare(graded_commutative_weights(Grading::degree, bound, weights),
                                 tensor_series(v_, Grading::degree, bound));
        return verdict(cmp.equal, cmp.equal ? "through degree " + std::to_string(bound)
                                            : "first mismatch at degree " + std::to_string(*cmp.first_mismatch));
    }

    Outcome oracle_equivalence() {
        if (!hypotheses()) return skip("needs V odd-only with dim V = p - 1");
        const auto& rep = report();
        bool ok = true;
        std::vector<std::size_t> dims;
        for (const auto& c : rep.checks)
            if (c.name == "closed_form_lengths" || c.name == "closed_form_degrees") ok = ok && c.pass;
        for (const auto& row : rep.lengths) dims.push_back(row.dim_amin_oracle);
        return verdict(ok, "dims " + join(dims));
    }

    Outcome series_identities() {
        if (!hypotheses()) return skip("needs V odd-only with dim V = p - 1");
        for (Grading g : {Grading::length, Grading::degree}) {
            const int bound = g == Grading::length ? kDefaultLengthBound : kDefaultDegreeBound;
            const auto cmp = compare(tensor_series(v_, g, bound),
                                     closed_form_amin_series(v_, g, bound) * bmax_series(v_, g, bound));
            if (!cmp.equal) return fail(std::string("T = A B by ") + to_string(g));
        }
        int levels = 0;
        const auto tower_dims = [&] {
            std::vector<std::size_t> out;
            std::int64_t pk = 1;
            for (int k = 0; pk <= n_; ++k, pk *= p()) out.push_back(lbar_iter(t_, k).embedded.size());
            return out;
        }();
        std::int64_t pk = 1;
        for (int k = 0; pk <= n_; ++k, pk *= p()) {
            const auto lhs = PoincareSeries::from_dims(Grading::length, bk_subalgebra(t_, k).dims());
            const auto rhs = PoincareSeries::from_dims(Grading::length, bk_subalgebra(t_, k + 1).dims()) *
                             exterior_weights(Grading::length, n_, std::vector<int>(tower_dims[static_cast<std::size_t>(k)], static_cast<int>(pk)));
            if (!compare(lhs, rhs).equal) return fail("tower identity at k=" + std::to_string(k));
            ++levels;
        }
        return pass("T = A B by length and degree; tower identity for " + std::to_string(levels) + " levels");
    }

    Outcome lbar_dims() {
        if (!hypotheses()) return skip("needs V odd-only with dim V = p - 1");
        std::int64_t pk = 1;
        int k = 0;
        for (; pk <= n_; ++k, pk *= p()) {
            const LbarIterate it = lbar_iter(t_, k);
            auto got = it.abstract.degrees();
            auto want = lbar_iterate_degrees(v_, k);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got != want || it.span.rank() != v_.dim()) return fail("level " + std::to_string(k) + " degrees " + join(got));
        }
        return pass(std::to_string(k) + " levels of dimension p - 1");
    }

    Outcome degree_separation() {
        if (!hypotheses()) return skip("needs V odd-only with dim V = p - 1");
        return verdict(degree_separation_holds(v_, 3), "levels 0..3");
    }

    Outcome ehp() {
        if (!hypotheses()) return skip("needs V odd-only with dim V = p - 1");
        const EhpReport r = ehp_report(v_);
        std::vector<std::int64_t> spheres;
        for (const auto& s : r.sphere_degrees) spheres.push_back(s.second);
        return verdict(r.shift_matches() && r.factorization.equal,
                       "b_Y=" + std::to_string(r.b_y) + " shift=" + std::to_string(r.shift) + " spheres " + join(spheres));
    }

    Outcome james_hopf_inclusion() {
        if (p() > n_) return skip("needs p <= N");
        for (std::size_t u = 0; u < t_.word_count(p()); ++u) {
            const TensorElement h = james_hopf(v_, p(), t_.word_at(p(), u));
            if (h != TensorElement::of(field(), Word{static_cast<Letter>(u)})) return fail("word " + std::to_string(u));
        }
        return pass(std::to_string(t_.word_count(p())) + " words");
    }

    Outcome james_hopf_lie_morphism() {
        if (2 * p() > n_) return skip("needs 2p <= N");
        const auto r = check_lie_morphism(t_, 24, seed_);
        return verdict(r.pass(), std::to_string(r.samples - r.failures) + "/" + std::to_string(r.samples) + " pairs");
    }

    Outcome transport() {
        if (!hypotheses()) return skip("needs V odd-only with dim V = p - 1");
        std::vector<std::string> parts;
        std::int64_t next = p();
        for (int k = 0; next <= n_; ++k, next *= p()) {
            const auto r = lbar_transport(t_, k);
            if (!r.equal) return fail("k=" + std::to_string(k));
            parts.push_back("k=" + std::to_string(k) + " rank " + std::to_string(r.lhs_rank) + " in " + std::to_string(r.ambient_dim));
        }
        if (parts.empty()) return skip("needs p <= N");
        return pass(join(parts));
    }

    Outcome section_search_check() {
        if (p() != 3) return skip("sweep runs at p = 3 only");
        const auto r = section_search(3);
        const bool ok = r.sections == 0 && r.identity_preserves_q && !r.identity_kills_kernel && !r.symmetrizer_preserves_q;
        return verdict(ok, std::to_string(r.sections) + " sections among " + std::to_string(r.candidates) + " candidates");
    }

    Outcome steenrod_replay() {
        if (p() > 5) return skip("replay runs at p <= 5");
        const auto r = steenrod_obstruction_replay(v_.p());
        const bool ok = r.alternating_solution && r.alpha_pattern && r.terminal_coefficient == 0;
        return verdict(ok, "q(alpha_i) multiples " + join(r.alpha_multiples) + ", terminal coefficient " +
                               std::to_string(r.terminal_coefficient));
    }

    int levels() const {
        int k = 0;
        for (std::int64_t pk = 1; pk <= n_; pk *= p()) ++k;
        return k;
    }

    Outcome selfmap_multiplicativity() {
        if (!hypotheses()) return skip("needs V odd-only with dim V = p - 1");
        const auto& q = oracle().quotient;
        const int k = levels();
        std::mt19937_64 rng(seed_ + 2);
        for (int s = 0; s < 20; ++s) {
            const ModuleMap f = random_map(rng), g = random_map(rng);
            const bool check = s == 0;
            const auto df = selfmap_degree(q, f, k, check), dg = selfmap_degree(q, g, k, check);
            const auto dfg = selfmap_degree(q, f.compose(g), k, check);
            for (int j = 0; j < k; ++j)
                if (dfg.level_matrices[static_cast<std::size_t>(j)] !=
                    df.level_matrices[static_cast<std::size_t>(j)] * dg.level_matrices[static_cast<std::size_t>(j)])
                    return fail("functoriality at level " + std::to_string(j) + ", pair " + std::to_string(s));
            if (dfg.degree != field().mul(df.degree, dg.degree)) return fail("pair " + std::to_string(s));
            for (std::size_t j = 0; j < df.top_scalars.size(); ++j) {
                fp::Residue prod = 1;
                for (std::size_t i = 0; i <= j; ++i) prod = field().mul(prod, df.level_dets[i]);
                if (df.top_scalars[j] != prod) return fail("top-length scalar at level " + std::to_string(j + 1));
            }
        }
        return pass("20 pairs, " + std::to_string(k) + " levels");
    }

    Outcome convolution() {
        if (!hypotheses()) return skip("needs V odd-only with dim V = p - 1");
        const auto& q = oracle().quotient;
        std::mt19937_64 rng(seed_ + 3);
        const int k = levels();
        for (int s = 0; s < 6; ++s) {
            const ModuleMap f = random_map(rng), g = random_map(rng);
            for (int j = 0; j < k; ++j) {
                const auto sum = convolution_primitive_sum(q, f, g, j);
                const auto direct = convolution_direct(q, f, g, j);
                if (sum != direct || fp::determinant(sum) != fp::determinant(direct))
                    return fail("pair " + std::to_string(s) + " level " + std::to_string(j));
            }
        }
        return pass("6 pairs, " + std::to_string(k) + " levels");
    }

    GradedModule v_;
    int n_;
    std::uint64_t seed_;
    TruncatedHopf t_;
    std::optional<DecompositionReport> report_;
    std::optional<AminOracle> oracle_;
};

}  // namespace

std::vector<std::string> verify_check_names() {
    const fp::PrimeField f(3);
    Suite s(GradedModule::ungraded(f, 2), 0, 0);
    std::vector<std::string> names;
    for (const auto& [name, fn] : s.checks()) names.push_back(name);
    return names;
}

std::vector<SuiteCheck> run_verify_suite(const GradedModule& v, int max_length, std::uint64_t seed,
                                         const std::optional<std::string>& only) {
    if (max_length < 0) throw PreconditionViolation("negative truncation bound");
    std::size_t words = 1;
    for (int n = 0; n < max_length && words <= kMaxOracleWords; ++n) words *= v.dim();
    if (words > kMaxOracleWords)
        throw ResourceLimit("verify suite limited to " + std::to_string(kMaxOracleWords) + " words per length at N = " +
                            std::to_string(max_length));
    Suite suite(v, max_length, seed);
    const auto checks = suite.checks();
    if (only && !checks.count(*only)) throw PreconditionViolation("unknown check '" + *only + "'");
    std::vector<SuiteCheck> out;
    for (const auto& [name, fn] : checks) {
        if (only && name != *only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const ResourceLimit& e) {
            o = skip(std::string("resource limit: ") + e.what());
        } catch (const TruncationOverflow& e) {
            o = skip(e.what());
        } catch (const std::exception& e) {
            o = fail(std::string("error: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back({name, o.status, o.detail, secs});
    }
    return out;
}

}  // namespace hopf
