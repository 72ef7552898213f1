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

#include "hopf_forge/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "hopf_forge/error.hpp"

namespace hopf {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) out.push_back(trim(item));
    return out;
}

std::int64_t parse_int(const std::string& s, int line, const std::string& what) {
    std::int64_t value = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (s.empty() || ec != std::errc() || ptr != last) throw ParseError("expected an integer for " + what + ", got '" + s + "'", line);
    return value;
}

struct SteenrodLine {
    int line;
    int index;
    std::string source;
    std::string rhs;
};

LetterCombination parse_combination(const std::string& rhs, const std::vector<Generator>& gens,
                                    const fp::PrimeField& field, int line) {
    std::map<Letter, fp::Residue> acc;
    std::string s;
    for (char c : rhs)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty Steenrod value", line);
    if (s == "0") return {};
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' or '-' in '" + rhs + "'", line);
        }
        const std::size_t end = s.find_first_of("+-", pos);
        const std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end;
        std::int64_t coeff = 1;
        std::string name = term;
        const auto star = term.find('*');
        if (star != std::string::npos) {
            coeff = parse_int(term.substr(0, star), line, "a coefficient");
            name = term.substr(star + 1);
        }
        const auto it = std::find_if(gens.begin(), gens.end(), [&](const Generator& g) { return g.name == name; });
        if (it == gens.end()) throw ParseError("unknown generator '" + name + "'", line);
        const auto letter = static_cast<Letter>(it - gens.begin());
        acc[letter] = field.add(acc[letter], field.reduce(sign * coeff));
    }
    LetterCombination out;
    for (const auto& [l, c] : acc)
        if (c != 0) out.emplace_back(l, c);
    return out;
}

}  // namespace

GradedModule parse_module_config(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    std::optional<std::int64_t> p;
    std::optional<std::vector<Generator>> gens;
    int gens_line = 0;
    int p_line = 0;
    std::vector<SteenrodLine> steenrod_lines;
    bool steenrod_section = false;
    while (std::getline(is, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("unterminated section header", line_no);
            section = trim(line.substr(1, line.size() - 2));
            if (section != "module" && section != "steenrod") throw ParseError("unknown section [" + section + "]", line_no);
            steenrod_section = steenrod_section || section == "steenrod";
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) throw ParseError("entry outside of a section", line_no);
        if (section == "module") {
            if (key == "p") {
                p = parse_int(value, line_no, "p");
                p_line = line_no;
            } else if (key == "generators") {
                gens_line = line_no;
                gens.emplace();
                for (const std::string& item : split(value, ',')) {
                    const auto colon = item.find(':');
                    if (colon == std::string::npos) throw ParseError("generator '" + item + "' needs 'name:degree'", line_no);
                    const std::string name = trim(item.substr(0, colon));
                    const auto degree = parse_int(trim(item.substr(colon + 1)), line_no, "a degree");
                    if (name.empty()) throw ParseError("generator with empty name", line_no);
                    gens->push_back({name, static_cast<int>(degree)});
                }
            } else {
                throw ParseError("unknown key '" + key + "' in [module]", line_no);
            }
        } else {
            // P^i(name)
            if (key.size() < 6 || key.rfind("P^", 0) != 0 || key.back() != ')')
                throw ParseError("expected 'P^i(name)', got '" + key + "'", line_no);
            const auto open = key.find('(');
            if (open == std::string::npos) throw ParseError("expected 'P^i(name)', got '" + key + "'", line_no);
            const auto index = parse_int(key.substr(2, open - 2), line_no, "a Steenrod index");
            steenrod_lines.push_back({line_no, static_cast<int>(index), trim(key.substr(open + 1, key.size() - open - 2)), value});
        }
    }
    if (!p) throw ParseError("missing 'p' in [module]");
    if (!gens) throw ParseError("missing 'generators' in [module]");
    if (*p < 3 || *p >= 65536 || !fp::is_prime(static_cast<std::uint64_t>(*p)))
        throw ParseError("p must be an odd prime below 65536", p_line);
    const fp::PrimeField field(static_cast<std::uint32_t>(*p));

    std::optional<SteenrodTable> table;
    if (steenrod_section) {
        table.emplace();
        for (const auto& sl : steenrod_lines) {
            const auto it = std::find_if(gens->begin(), gens->end(), [&](const Generator& g) { return g.name == sl.source; });
            if (it == gens->end()) throw ParseError("unknown generator '" + sl.source + "'", sl.line);
            const auto letter = static_cast<Letter>(it - gens->begin());
            if ((*table).count({sl.index, letter})) throw ParseError("duplicate Steenrod entry", sl.line);
            if (sl.index < 0) throw ParseError("negative Steenrod index", sl.line);
            const auto image = parse_combination(sl.rhs, *gens, field, sl.line);
            const auto want = it->degree - 2 * sl.index * (static_cast<int>(*p) - 1);
            for (const auto& [l, coeff] : image)
                if ((*gens)[l].degree != want)
                    throw ParseError("P^" + std::to_string(sl.index) + "(" + sl.source + ") must have degree " +
                                         std::to_string(want) + ", but " + (*gens)[l].name + " has degree " +
                                         std::to_string((*gens)[l].degree),
                                     sl.line);
            (*table)[{sl.index, letter}] = image;
        }
    }
    try {
        return GradedModule(field, *gens, table);
    } catch (const PreconditionViolation& e) {
        throw ParseError(e.what(), steenrod_lines.empty() ? gens_line : 0);
    }
}

GradedModule load_module_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_module_config(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path, e);
    }
}

GradedModule default_module(std::uint32_t p) {
    return GradedModule::ungraded(fp::PrimeField(p), p - 1);
}

fp::FpMatrix parse_matrix(const fp::PrimeField& field, const std::string& text) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const std::string& row : split(text, ';')) {
        if (row.empty()) throw ParseError("empty matrix row in '" + text + "'");
        std::vector<std::int64_t> entries;
        for (const std::string& e : split(row, ',')) entries.push_back(parse_int(e, 0, "a matrix entry"));
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw ParseError("empty matrix");
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw ParseError("ragged matrix rows in '" + text + "'");
    return fp::FpMatrix::from_rows(field, rows);
}

}  // namespace hopf
