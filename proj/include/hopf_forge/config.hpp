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

#ifndef HOPF_FORGE_CONFIG_HPP
#define HOPF_FORGE_CONFIG_HPP

#include <string>

#include "hopf_forge/fp.hpp"
#include "hopf_forge/graded.hpp"

namespace hopf {

// Module description files:
//
//   [module]
//   p = 3
//   generators = x:1, y:5
//
//   [steenrod]
//   P^1(x) = 2*y - z
//
// '#' starts a comment. Every failure is a ParseError carrying the line.
GradedModule parse_module_config(const std::string& text);
GradedModule load_module_config(const std::string& path);

// Default test module: p - 1 generators x1.. of degree 1.
GradedModule default_module(std::uint32_t p);

// Rows separated by ';', entries by ','. Column j is the image of generator j.
fp::FpMatrix parse_matrix(const fp::PrimeField& field, const std::string& text);

}  // namespace hopf

#endif  // HOPF_FORGE_CONFIG_HPP
