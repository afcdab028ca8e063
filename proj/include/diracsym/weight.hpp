#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace diracsym {

using Rational = boost::rational<long long>;

/// Renders a rational as "p/q" (always with a denominator).
std::string toText(const Rational& r);

/// Raised for malformed user input (unknown type labels, bad parameters).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an identity that must hold by construction fails.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A weight stored as 2*lambda in fundamental-weight coordinates.
///
/// Doubling keeps rho-shifts, rho_n and spin weights integral, so every
/// character computation stays in exact integer arithmetic.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<int> c) : coords(c) {}

  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }

  bool isZero() const;
  /// True when lambda itself (not 2*lambda) is an integral weight.
  bool isIntegral() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight operator-() const;
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (auto& c : a.coords) c *= k;
    return a;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords <=> b.coords; }
};

std::string toText(const Weight& w);

}  // namespace diracsym
