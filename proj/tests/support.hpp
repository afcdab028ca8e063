#pragma once

#include <doctest.h>

#include "diracsym/weight.hpp"

namespace doctest {
template <>
struct StringMaker<diracsym::Weight> {
  static String convert(const diracsym::Weight& w) { return diracsym::toText(w).c_str(); }
};
template <>
struct StringMaker<diracsym::Rational> {
  static String convert(const diracsym::Rational& r) { return diracsym::toText(r).c_str(); }
};
}  // namespace doctest
