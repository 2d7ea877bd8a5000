// Copyright 2026 The extors Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>

#include "extors/ideal.hpp"
#include "extors/matrix.hpp"

namespace extors {

/// Input error with position information.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                           std::to_string(column)) {}
};

/// Parses a header of the form "ring QQ[x,y,z] order grevlex".
RingPtr parse_ring(const std::string& header);
std::string ring_header(const PolyRing& ring);

/// Polynomial text grammar: terms joined by + or -; a term is either a bare
/// coefficient or [coefficient '*'] var ['^' exp] ('*' var ['^' exp])*;
/// coefficients are integers or integer/positive-integer fractions.
/// Whitespace is insignificant. parse(print(f)) == f on canonical forms.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text,
                            std::size_t line = 1);
std::string to_string(const Polynomial& f);

std::string to_string(const Rational& c);

/// Ideal file: ring header line, then one generator per line. Blank lines
/// and lines starting with '#' are ignored.
Ideal parse_ideal_file(std::istream& in);
std::string print_ideal_file(const Ideal& ideal);

/// Matrix file: ring header line, "matrix r c", then r rows of c
/// semicolon-separated polynomial expressions.
PolyMatrix parse_matrix_file(std::istream& in);
std::string print_matrix_file(const PolyMatrix& m);

}  // namespace extors
