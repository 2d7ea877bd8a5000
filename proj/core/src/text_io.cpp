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

#include "extors/text_io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace extors {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t line;

  explicit Cursor(const std::string& t, std::size_t l) : text(t), line(l) {}

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line, pos + 1);
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos;
    if (pos < text.size() &&
        (std::isalpha(static_cast<unsigned char>(text[pos])) ||
         text[pos] == '_')) {
      ++pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_'))
        ++pos;
    }
    if (start == pos) fail("expected identifier");
    return text.substr(start, pos - start);
  }

  Integer natural() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) fail("expected integer");
    return Integer(text.substr(start, pos - start));
  }
};

std::size_t var_index(const PolyRing& ring, const std::string& name,
                      Cursor& cur) {
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    if (ring.vars()[i] == name) return i;
  cur.fail("unknown variable '" + name + "'");
}

// varpart := var ['^' nat] ('*' var ['^' nat])*; the first variable has
// already been read by the caller.
Monomial parse_varpart(const RingPtr& ring, Cursor& cur,
                       const std::string& first_var) {
  std::vector<int> exps(ring->nvars(), 0);
  std::string var = first_var;
  while (true) {
    std::size_t idx = var_index(*ring, var, cur);
    int e = 1;
    if (cur.consume('^')) e = static_cast<int>(cur.natural().get_si());
    exps[idx] += e;
    std::size_t mark = cur.pos;
    if (!cur.consume('*')) break;
    if (!std::isalpha(static_cast<unsigned char>(cur.peek())) &&
        cur.peek() != '_') {
      cur.pos = mark;  // the '*' belonged to something else; back off
      break;
    }
    var = cur.identifier();
  }
  return Monomial(std::move(exps));
}

Polynomial::Term parse_term(const RingPtr& ring, Cursor& cur) {
  char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    Integer num = cur.natural();
    Integer den(1);
    if (cur.consume('/')) {
      den = cur.natural();
      if (den == 0) cur.fail("zero denominator");
    }
    Rational coeff(num, den);
    coeff.canonicalize();
    if (cur.consume('*')) {
      std::string var = cur.identifier();
      return {parse_varpart(ring, cur, var), std::move(coeff)};
    }
    return {Monomial::one(ring->nvars()), std::move(coeff)};
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::string var = cur.identifier();
    return {parse_varpart(ring, cur, var), Rational(1)};
  }
  cur.fail("expected term");
}

}  // namespace

RingPtr parse_ring(const std::string& header) {
  Cursor cur(header, 1);
  if (cur.identifier() != "ring") cur.fail("expected 'ring'");
  std::string field = cur.identifier();
  if (field != "QQ")
    cur.fail("unsupported coefficient ring '" + field + "'");
  if (!cur.consume('[')) cur.fail("expected '['");
  std::vector<std::string> vars;
  do {
    vars.push_back(cur.identifier());
  } while (cur.consume(','));
  if (!cur.consume(']')) cur.fail("expected ']'");
  if (cur.identifier() != "order") cur.fail("expected 'order'");
  std::string order_name = cur.identifier();
  MonomialOrder order = MonomialOrder::grevlex();
  if (order_name == "grevlex")
    order = MonomialOrder::grevlex();
  else if (order_name == "lex")
    order = MonomialOrder::lex();
  else
    cur.fail("unknown order name '" + order_name + "'");
  if (!cur.done()) cur.fail("trailing input after ring header");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) cur.fail("duplicate variable '" + vars[i] + "'");
  return PolyRing::make(std::move(vars), order);
}

std::string ring_header(const PolyRing& ring) {
  std::string s = "ring QQ[";
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (i) s += ',';
    s += ring.vars()[i];
  }
  s += "] order " + ring.order().name();
  return s;
}

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text,
                            std::size_t line) {
  Cursor cur(text, line);
  std::vector<Polynomial::Term> terms;
  bool negative = false;
  if (cur.consume('-'))
    negative = true;
  else
    cur.consume('+');
  while (true) {
    Polynomial::Term t = parse_term(ring, cur);
    if (negative) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    if (cur.done()) break;
    if (cur.consume('-'))
      negative = true;
    else if (cur.consume('+'))
      negative = false;
    else
      cur.fail("expected '+' or '-'");
  }
  return Polynomial(ring, std::move(terms));
}

std::string to_string(const Rational& c) {
  return c.get_str();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const PolyRing& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational mag = abs(t.coeff);
    if (first) {
      if (t.coeff < 0) out += '-';
      first = false;
    } else {
      out += t.coeff < 0 ? '-' : '+';
    }
    bool printed_coeff = false;
    if (t.mon.is_one() || mag != 1) {
      out += mag.get_str();
      printed_coeff = true;
    }
    if (!t.mon.is_one()) {
      bool first_var = true;
      for (std::size_t i = 0; i < ring.nvars(); ++i) {
        int e = t.mon.exponent(i);
        if (e == 0) continue;
        if (printed_coeff || !first_var) out += '*';
        out += ring.vars()[i];
        if (e > 1) out += '^' + std::to_string(e);
        first_var = false;
        printed_coeff = true;
      }
    }
  }
  return out;
}

namespace {

// Next content line (skipping blanks and '#' comments); false at EOF.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i == line.size() || line[i] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Ideal parse_ideal_file(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw ParseError("missing ring header", 1, 1);
  RingPtr ring = parse_ring(line);
  std::vector<Polynomial> gens;
  while (next_line(in, line, lineno))
    gens.push_back(parse_polynomial(ring, line, lineno));
  return Ideal(ring, std::move(gens));
}

std::string print_ideal_file(const Ideal& ideal) {
  std::string out = ring_header(*ideal.ring()) + "\n";
  for (const Polynomial& g : ideal.generators()) out += to_string(g) + "\n";
  return out;
}

PolyMatrix parse_matrix_file(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw ParseError("missing ring header", 1, 1);
  RingPtr ring = parse_ring(line);
  if (!next_line(in, line, lineno))
    throw ParseError("missing matrix header", lineno + 1, 1);
  std::istringstream hdr(line);
  std::string word;
  std::size_t rows = 0, cols = 0;
  hdr >> word >> rows >> cols;
  if (word != "matrix" || hdr.fail())
    throw ParseError("expected 'matrix <rows> <cols>'", lineno, 1);
  PolyMatrix m(ring, rows, cols);
  if (cols == 0) return m;  // rows carry no entries, no row lines
  for (std::size_t i = 0; i < rows; ++i) {
    if (!next_line(in, line, lineno))
      throw ParseError("missing matrix row", lineno + 1, 1);
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream row(line);
    while (std::getline(row, cell, ';')) cells.push_back(cell);
    if (cells.size() != cols)
      throw ParseError("expected " + std::to_string(cols) + " entries",
                       lineno, 1);
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = parse_polynomial(ring, cells[j], lineno);
  }
  return m;
}

std::string print_matrix_file(const PolyMatrix& m) {
  std::string out = ring_header(*m.ring()) + "\n";
  out += "matrix " + std::to_string(m.rows()) + " " +
         std::to_string(m.cols()) + "\n";
  if (m.cols() == 0) return out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ';';
      out += to_string(m.at(i, j));
    }
    out += "\n";
  }
  return out;
}

}  // namespace extors
