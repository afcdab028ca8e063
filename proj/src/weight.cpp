#include "diracsym/weight.hpp"

#include <algorithm>
#include <sstream>

namespace diracsym {

std::string toText(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool Weight::isZero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool Weight::isIntegral() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c % 2 == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.coords.size() != coords.size()) throw InputError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.coords.size() != coords.size()) throw InputError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

std::string toText(const Weight& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) os << ',';
    os << w.coords[i];
  }
  os << ']';
  return os.str();
}

}  // namespace diracsym
