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

#include "extors/ring.hpp"

namespace extors {

int MonomialOrder::grevlex_compare_range(const Monomial& a, const Monomial& b,
                                         std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the rightmost differing exponent decides, smaller wins.
  for (std::size_t i = hi; i > lo; --i) {
    int d = a.exponent(i - 1) - b.exponent(i - 1);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_compare_range(a, b, 0, n);
    case Kind::lex:
      for (std::size_t i = 0; i < n; ++i) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d < 0 ? -1 : 1;
      }
      return 0;
    case Kind::elimination: {
      std::size_t lo = 0;
      for (std::size_t size : blocks_) {
        std::size_t hi = std::min(lo + size, n);
        int c = grevlex_compare_range(a, b, lo, hi);
        if (c != 0) return c;
        lo = hi;
      }
      if (lo < n) return grevlex_compare_range(a, b, lo, n);
      return 0;
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::elimination: {
      std::string s = "elim(";
      for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(blocks_[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace extors
