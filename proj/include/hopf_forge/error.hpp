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

#ifndef HOPF_FORGE_ERROR_HPP
#define HOPF_FORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hopf {

// Base of every error the library raises. The CLI maps the subclasses onto
// exit codes: ParseError -> 2, ResourceLimit -> 3, everything else -> 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class TruncationOverflow : public Error {
public:
    TruncationOverflow(int length, int bound)
        : Error("tensor length " + std::to_string(length) + " exceeds truncation bound " +
                std::to_string(bound)),
          length_(length), bound_(bound) {}

    int length() const noexcept { return length_; }
    int bound() const noexcept { return bound_; }

private:
    int length_;
    int bound_;
};

class UnsupportedOperation : public Error {
public:
    using Error::Error;
};

class InvariantViolation : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

class ResourceLimit : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    // Prefixes the source name, keeping the line.
    ParseError(const std::string& source, const ParseError& inner)
        : Error(source + ": " + inner.what()), line_(inner.line_) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace hopf

#endif  // HOPF_FORGE_ERROR_HPP
