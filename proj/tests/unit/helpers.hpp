#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "lagorb/linalg.hpp"

namespace lagorb::test {

inline const FieldTag Q = FieldTag::rationals();

inline Rational q(const std::string& text) { return scalar_traits<Rational>::parse(text, Q); }

/// Column vector of length n with the given (index, value) entries.
inline QMat vec(std::size_t n, std::initializer_list<std::pair<std::size_t, Rational>> entries) {
  QMat v(Q, n, 1);
  for (const auto& [i, x] : entries) v(i, 0) = x;
  return v;
}

inline QSubspace span_of(std::size_t n, const std::vector<QMat>& cols) {
  return QSubspace::span(QMat::from_columns(Q, n, cols));
}

}  // namespace lagorb::test

#define CHECK_THROWS_CODE(expr, expected)                 \
  do {                                                    \
    bool thrown_ = false;                                 \
    try {                                                 \
      (void)(expr);                                       \
    } catch (const ::lagorb::Error& e_) {                 \
      thrown_ = true;                                     \
      CHECK(e_.code() == (expected));                     \
    }                                                     \
    CHECK_MESSAGE(thrown_, "expected an lagorb::Error");  \
  } while (false)
