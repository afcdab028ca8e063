#pragma once

#include <map>
#include <optional>
#include <string>

#include "diracsym/rootsys.hpp"
#include "diracsym/weight.hpp"

namespace diracsym::charring {

using rootsys::SubsystemDatum;
using rootsys::SubsystemPtr;

/// Finitely supported integer combination of exponentials e(lambda).
class FormalChar {
 public:
  FormalChar() = default;
  static FormalChar monomial(const Weight& w, long long c = 1);

  const std::map<Weight, long long>& terms() const { return terms_; }
  long long coeff(const Weight& w) const;
  void add(const Weight& w, long long c);
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Sum of all coefficients (the dimension of a genuine character).
  long long mass() const;
  /// Weight negation, i.e. complex conjugation on the compact torus.
  FormalChar conjugate() const;
  FormalChar shifted(const Weight& w) const;

  FormalChar& operator+=(const FormalChar& o);
  FormalChar& operator-=(const FormalChar& o);
  FormalChar operator-() const;
  friend FormalChar operator+(FormalChar a, const FormalChar& b) { return a += b; }
  friend FormalChar operator-(FormalChar a, const FormalChar& b) { return a -= b; }
  friend FormalChar operator*(long long k, const FormalChar& f);
  friend bool operator==(const FormalChar&, const FormalChar&) = default;

 private:
  std::map<Weight, long long> terms_;
};

FormalChar convolve(const FormalChar& f, const FormalChar& g);
inline FormalChar operator*(const FormalChar& f, const FormalChar& g) { return convolve(f, g); }

std::string toText(const FormalChar& f);

/// Signed multiset of irreducibles of a subsystem, keyed by dominant highest weight.
struct VirtualModule {
  SubsystemPtr sub;
  std::map<Weight, long long> entries;

  void add(const Weight& w, long long c);
  bool empty() const { return entries.empty(); }
  friend bool operator==(const VirtualModule& a, const VirtualModule& b) { return a.entries == b.entries; }
};

/// Sum over W_sub of eps(w) e(w lambda).
FormalChar weylNumerator(const SubsystemDatum& sub, const Weight& lambda);
/// Weyl denominator of the subsystem; sum and product forms are checked against each other.
FormalChar weylDenominator(const SubsystemDatum& sub);
/// Product over the given positive roots of (e(beta/2) - e(-beta/2)).
FormalChar rootProduct(const SubsystemDatum& ambient, const std::vector<int>& roots);

/// Exact quotient by highest-term elimination; throws InternalError on a remainder.
FormalChar divideExact(const FormalChar& num, const FormalChar& den, const rootsys::CartanDatum& d);
/// As divideExact, but returns nothing instead of throwing on a remainder.
std::optional<FormalChar> tryDivide(const FormalChar& num, const FormalChar& den,
                                    const rootsys::CartanDatum& d);

/// True when every sub coroot pairs with lambda to a nonnegative integer.
bool isDominantIntegral(const SubsystemDatum& sub, const Weight& lambda);
FormalChar weylCharacter(const SubsystemDatum& sub, const Weight& lambda);
Rational weylDimension(const SubsystemDatum& sub, const Weight& lambda);

bool isInvariant(const FormalChar& f, const SubsystemDatum& sub);
VirtualModule decomposeIntoIrreducibles(const FormalChar& f, SubsystemPtr sub);
FormalChar characterOf(const VirtualModule& m);

long long torusInnerProduct(const FormalChar& f, const FormalChar& g);

/// Highest weight under the 2 rho^vee order with a lexicographic tie-break.
Weight leadingWeight(const FormalChar& f, const rootsys::CartanDatum& d);

}  // namespace diracsym::charring
