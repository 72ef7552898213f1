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

#include "hopf_forge/cli.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "hopf_forge/config.hpp"
#include "hopf_forge/error.hpp"
#include "hopf_forge/lie.hpp"
#include "hopf_forge/series.hpp"

namespace hopf {

namespace {

using nlohmann::ordered_json;

ordered_json generators_json(const std::vector<Generator>& gens) {
    ordered_json out = ordered_json::array();
    for (const auto& g : gens) out.push_back({{"name", g.name}, {"degree", g.degree}});
    return out;
}

std::string generators_text(const std::vector<Generator>& gens) {
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        out += (i ? "," : "") + gens[i].name + ":" + std::to_string(gens[i].degree);
    return out;
}

std::string closed_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

GradedModule module_for(const RunConfig& c) {
    if (c.input) {
        GradedModule v = load_module_config(*c.input);
        if (c.p && *c.p != v.p())
            throw ParseError("--p " + std::to_string(*c.p) + " disagrees with p = " + std::to_string(v.p()) + " in " + *c.input);
        return v;
    }
    return default_module(c.p.value_or(3));
}

void validate(const RunConfig& c) {
    if (c.format != "text" && c.format != "json" && c.format != "csv")
        throw ParseError("unknown format '" + c.format + "'");
    if (c.max_length && *c.max_length < 0) throw ParseError("--max-length must be non-negative");
    if (c.k < 0) throw ParseError("--k must be non-negative");
    if (c.n < 1) throw ParseError("--n must be positive");
    if (c.d < 1) throw ParseError("--d must be positive");
    if (c.mode != "graded" && c.mode != "ungraded") throw ParseError("unknown mode '" + c.mode + "'");
}

int cmd_decompose(const RunConfig& c, std::ostream& out) {
    const GradedModule v = module_for(c);
    const DecompositionReport r = decompose(v, c.max_length.value_or(default_max_length(v.p())));
    if (c.format == "json") {
        out << decomposition_json(r) << "\n";
    } else if (c.format == "csv") {
        out << "n,quantity,value\n";
        for (const auto& row : r.lengths) {
            out << row.n << ",dim_T," << row.dim_t << "\n";
            out << row.n << ",dim_ideal," << row.dim_ideal << "\n";
            out << row.n << ",dim_amin_oracle," << row.dim_amin_oracle << "\n";
            if (row.dim_amin_closed) out << row.n << ",dim_amin_closed," << *row.dim_amin_closed << "\n";
            out << row.n << ",dim_primitives," << row.dim_primitives << "\n";
        }
    } else {
        out << "p = " << r.p << "  generators " << generators_text(r.generators) << "  N = " << r.max_length << "\n";
        if (r.upper_bound_only) out << "outside closed-form hypotheses: oracle is an upper bound only\n";
        out << std::setw(3) << "n" << std::setw(10) << "T" << std::setw(8) << "B" << std::setw(8) << "ideal"
            << std::setw(8) << "oracle" << std::setw(8) << "closed" << std::setw(8) << "prim" << "\n";
        for (const auto& row : r.lengths)
            out << std::setw(3) << row.n << std::setw(10) << row.dim_t << std::setw(8) << row.dim_b << std::setw(8)
                << row.dim_ideal << std::setw(8) << row.dim_amin_oracle << std::setw(8) << closed_text(row.dim_amin_closed)
                << std::setw(8) << row.dim_primitives << "\n";
        for (const auto& ch : r.checks)
            out << (ch.pass ? "PASS " : "FAIL ") << ch.name << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
    }
    return r.all_pass() ? kExitOk : kExitCheckFailure;
}

int cmd_lie(const RunConfig& c, std::ostream& out) {
    const fp::PrimeField field(c.p.value_or(3));
    const SignMode mode = c.mode == "graded" ? SignMode::koszul : SignMode::plain;
    const GradedModule v = c.input ? load_module_config(*c.input)
                                   : GradedModule::ungraded(field, static_cast<std::size_t>(c.d), mode);
    const int n = c.n;
    if (n > 7) throw ResourceLimit("Lie(n) is limited to n <= 7");
    const TruncatedHopf t(v, n);
    struct Row {
        int n;
        std::string witt;
        std::size_t l, lbar, lie_n;
    };
    std::vector<Row> rows;
    for (int i = 1; i <= n; ++i) {
        const SignMode lie_mode = v.sign_mode();
        rows.push_back({i, std::to_string(witt_dim(v.dim(), static_cast<std::uint64_t>(i))), free_lie_component(t, i).rank(),
                        lbar(t, i).dim(), lie_n_module(static_cast<std::size_t>(i), lie_mode, v.field()).rank()});
    }
    if (c.format == "json") {
        ordered_json j;
        j["p"] = v.p();
        j["generators"] = generators_json(v.generators());
        j["mode"] = v.sign_mode() == SignMode::koszul ? "graded" : "ungraded";
        j["rows"] = ordered_json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"n", r.n}, {"witt", r.witt}, {"dim_L", r.l}, {"dim_Lbar", r.lbar}, {"rank_Lie", r.lie_n}});
        out << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        out << "n,quantity,value\n";
        for (const auto& r : rows)
            out << r.n << ",witt," << r.witt << "\n"
                << r.n << ",dim_L," << r.l << "\n"
                << r.n << ",dim_Lbar," << r.lbar << "\n"
                << r.n << ",rank_Lie," << r.lie_n << "\n";
    } else {
        out << "p = " << v.p() << "  generators " << generators_text(v.generators()) << "  "
            << (v.sign_mode() == SignMode::koszul ? "graded" : "ungraded") << "\n";
        out << std::setw(3) << "n" << std::setw(8) << "Witt" << std::setw(8) << "L_n" << std::setw(8) << "Lbar_n"
            << std::setw(10) << "Lie(n)" << "\n";
        for (const auto& r : rows)
            out << std::setw(3) << r.n << std::setw(8) << r.witt << std::setw(8) << r.l << std::setw(8) << r.lbar
                << std::setw(10) << r.lie_n << "\n";
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const GradedModule v = module_for(c);
    const int n = c.max_length.value_or(default_max_length(v.p()));
    const auto results = run_verify_suite(v, n, c.seed, c.only);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.status != CheckStatus::fail;
    if (c.format == "json") {
        ordered_json j;
        j["p"] = v.p();
        j["generators"] = generators_json(v.generators());
        j["max_length"] = n;
        j["seed"] = c.seed;
        j["checks"] = ordered_json::array();
        for (const auto& r : results) j["checks"].push_back({{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}});
        out << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        out << "name,status,detail\n";
        for (const auto& r : results) out << r.name << "," << to_string(r.status) << ",\"" << r.detail << "\"\n";
    } else {
        out << "# verify p=" << v.p() << " N=" << n << " seed=" << c.seed << " generators " << generators_text(v.generators()) << "\n";
        for (const auto& r : results)
            out << to_string(r.status) << " " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    }
    for (const auto& r : results)
        err << std::fixed << std::setprecision(3) << r.seconds << "s " << r.name << "\n";
    return ok ? kExitOk : kExitCheckFailure;
}

int cmd_selfmap(const RunConfig& c, std::ostream& out) {
    const GradedModule v = module_for(c);
    if (!c.matrix) throw ParseError("selfmap needs --matrix");
    const ModuleMap f(v, v, parse_matrix(v.field(), *c.matrix));
    std::int64_t need = 1;
    for (int j = 1; j < c.k; ++j) need *= v.p();
    const int n = c.max_length.value_or(static_cast<int>(std::max<std::int64_t>(need, 1)));
    const TruncatedHopf t(v, n);
    const AminOracle oracle = amin_oracle(t);
    const SelfmapDegree d = selfmap_degree(oracle.quotient, f, c.k);
    if (c.format == "json") {
        ordered_json j;
        j["p"] = v.p();
        j["generators"] = generators_json(v.generators());
        j["k"] = c.k;
        j["level_dets"] = d.level_dets;
        j["degree"] = d.degree;
        j["top_scalars"] = d.top_scalars;
        out << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        out << "n,quantity,value\n";
        std::int64_t pj = 1;
        for (std::size_t j = 0; j < d.level_dets.size(); ++j, pj *= v.p()) out << pj << ",det," << d.level_dets[j] << "\n";
        out << "-,deg_k," << d.degree << "\n";
    } else {
        std::int64_t pj = 1;
        for (std::size_t j = 0; j < d.level_dets.size(); ++j, pj *= v.p())
            out << "level " << j << " (length " << pj << "): det = " << d.level_dets[j] << "\n";
        out << "deg^" << c.k << " = " << d.degree << "\n";
    }
    return kExitOk;
}

int cmd_series(const RunConfig& c, std::ostream& out) {
    const GradedModule v = module_for(c);
    const int lb = c.max_length.value_or(kDefaultLengthBound);
    struct Line {
        std::string name;
        PoincareSeries s;
    };
    std::vector<Line> lines;
    for (Grading g : {Grading::length, Grading::degree}) {
        const int bound = g == Grading::length ? lb : kDefaultDegreeBound;
        const std::string suffix = std::string(" by ") + to_string(g);
        lines.push_back({"T" + suffix, tensor_series(v, g, bound)});
        if (v.meets_periodicity_hypotheses()) {
            lines.push_back({"Amin" + suffix, closed_form_amin_series(v, g, bound)});
            lines.push_back({"Bmax" + suffix, bmax_series(v, g, bound)});
        }
    }
    std::optional<EhpReport> ehp;
    if (v.meets_periodicity_hypotheses()) ehp = ehp_report(v);
    if (c.format == "json") {
        ordered_json j;
        j["p"] = v.p();
        j["generators"] = generators_json(v.generators());
        j["series"] = ordered_json::array();
        for (const auto& l : lines) {
            ordered_json coeffs = ordered_json::array();
            for (const auto& x : l.s.coefficients()) coeffs.push_back(x.str());
            j["series"].push_back({{"name", l.name}, {"coefficients", coeffs}});
        }
        if (ehp) {
            ordered_json spheres = ordered_json::array();
            for (const auto& [k, deg] : ehp->sphere_degrees) spheres.push_back({{"k", k}, {"degree", deg}});
            j["ehp"] = {{"b_Y", ehp->b_y}, {"shift", ehp->shift}, {"b_prime", ehp->b_prime},
                        {"factorization", ehp->factorization.equal}, {"sphere_degrees", spheres}};
        }
        out << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        out << "n,quantity,value\n";
        for (const auto& l : lines)
            for (int i = 0; i <= l.s.bound(); ++i) out << i << "," << l.name << "," << l.s[i] << "\n";
    } else {
        for (const auto& l : lines) out << l.name << ": " << l.s.to_string() << "\n";
        if (ehp) {
            out << "b_Y = " << ehp->b_y << "  shift = " << ehp->shift << "  b' = " << ehp->b_prime
                << "  factorization " << (ehp->factorization.equal ? "holds" : "fails") << "\n";
            for (const auto& [k, deg] : ehp->sphere_degrees) out << "sphere degree k=" << k << ": " << deg << "\n";
        }
    }
    return ehp && !(ehp->factorization.equal && ehp->shift_matches()) ? kExitCheckFailure : kExitOk;
}

}  // namespace

int default_max_length(std::uint32_t p) { return p == 3 ? 9 : static_cast<int>(p); }

std::string decomposition_json(const DecompositionReport& r) {
    ordered_json j;
    j["p"] = r.p;
    j["generators"] = generators_json(r.generators);
    j["max_length"] = r.max_length;
    j["upper_bound_only"] = r.upper_bound_only;
    j["lengths"] = ordered_json::array();
    for (const auto& row : r.lengths) {
        ordered_json e = {{"n", row.n},
                          {"dim_T", row.dim_t},
                          {"dim_B", row.dim_b},
                          {"dim_ideal", row.dim_ideal},
                          {"dim_amin_oracle", row.dim_amin_oracle}};
        e["dim_amin_closed"] = row.dim_amin_closed ? ordered_json(*row.dim_amin_closed) : ordered_json(nullptr);
        e["dim_primitives"] = row.dim_primitives;
        j["lengths"].push_back(std::move(e));
    }
    j["degrees"] = ordered_json::array();
    for (const auto& row : r.degrees) {
        ordered_json e = {{"n", row.n}, {"degree", row.degree}, {"dim_oracle", row.oracle}};
        e["dim_closed"] = row.closed ? ordered_json(*row.closed) : ordered_json(nullptr);
        j["degrees"].push_back(std::move(e));
    }
    j["checks"] = ordered_json::array();
    for (const auto& ch : r.checks) j["checks"].push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
    return j.dump(2);
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        if (config.command == "decompose") return cmd_decompose(config, out);
        if (config.command == "lie") return cmd_lie(config, out);
        if (config.command == "verify") return cmd_verify(config, out, err);
        if (config.command == "selfmap") return cmd_selfmap(config, out);
        if (config.command == "series") return cmd_series(config, out);
        throw ParseError("unknown command '" + config.command + "'");
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const PreconditionViolation& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const TruncationOverflow& e) {
        err << "error: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}

}  // namespace hopf
