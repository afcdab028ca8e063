#pragma once

#include <map>
#include <utility>
#include <vector>

#include "diracsym/charring.hpp"
#include "diracsym/rootsys.hpp"

namespace diracsym::kl {

using rootsys::RootSystem;
using rootsys::RootSystemPtr;

/// Integer polynomial in q, coefficients from degree 0 upward, no trailing zeros.
using Poly = std::vector<long long>;

Poly polyAdd(const Poly& a, const Poly& b);
Poly polySub(const Poly& a, const Poly& b);
Poly polyShift(const Poly& a, int k);   // multiply by q^k
Poly polyScale(const Poly& a, long long k);
Poly polyMul(const Poly& a, const Poly& b);
long long polyAtOne(const Poly& a);
int polyDegree(const Poly& a);          // -1 for the zero polynomial

/// bruhat[x][w] == true iff x <= w, by the subword criterion on reduced words.
std::vector<std::vector<bool>> bruhatOrder(const RootSystem& sys);

class KLTable {
 public:
  explicit KLTable(RootSystemPtr sys);

  const RootSystem& system() const { return *sys_; }
  RootSystemPtr systemPtr() const { return sys_; }
  bool leq(int x, int w) const { return bruhat_[x][w]; }
  const Poly& P(int x, int w) const { return p_[index(x, w)]; }
  /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}; zero unless x < w.
  long long mu(int x, int w) const;

 private:
  std::size_t index(int x, int w) const { return static_cast<std::size_t>(x) * n_ + w; }
  RootSystemPtr sys_;
  std::size_t n_ = 0;
  std::vector<std::vector<bool>> bruhat_;
  std::vector<Poly> p_;
};

/// I: simple roots of the Levi; J: singular simple roots (structural only).
struct ParabolicData {
  std::vector<int> I, J;
  std::vector<int> WI;   // minimal length representatives of W_I \ W
  std::vector<int> JWI;
  int longestI = 0;      // w_I
};

ParabolicData makeParabolicData(const RootSystem& sys, std::vector<int> I, std::vector<int> J = {});

struct ParabolicTable {
  ParabolicData data;
  std::map<std::pair<int, int>, Poly> entries;  // (x, w) in W^I, nonzero polynomials only
  const Poly& at(int x, int w) const;
};

/// Relative polynomials for the regular block (J empty): P^I_{x,w} = P_{w_I x, w_I w}.
ParabolicTable parabolicKLV(const KLTable& table, const ParabolicData& data);

struct HighestWeightResult {
  charring::VirtualModule plus, minus;  // Levi-types F(w_I x . mu + rho(u))
  Weight antidominant;                  // mu + rho
  int w = 0;                            // position of lambda: lambda = w_I w . mu
};

/// Dirac cohomology of the simple highest weight module L(lambda) in O^q
/// for regular integral infinitesimal character.
HighestWeightResult hdHighestWeight(const KLTable& table, const std::vector<int>& I, const Weight& lambda);

/// Euler characteristic ch V * prod over Delta(u) of (1 - e(-alpha)) for the
/// finite-dimensional V of highest weight lambda; checked against the Levi Dirac index.
charring::FormalChar uHomologyEulerChar(const RootSystemPtr& sys, const std::vector<int>& I,
                                        const Weight& lambda);

}  // namespace diracsym::kl
