#pragma once

#include <string>
#include <variant>

#include "diracsym/charring.hpp"
#include "diracsym/dirac.hpp"
#include "diracsym/rootsys.hpp"

namespace diracsym::elliptic {

using charring::FormalChar;
using rootsys::GroupDatum;

struct SupertemperedNumerator {
  FormalChar numerator;  // sum over W_K of eps(w) e(w mu)
  Weight parameter;
  int signExponent = 0;  // q(G)
  std::string datum;     // type and grading, for mismatch detection
};

SupertemperedNumerator supertemperedNumerator(const GroupDatum& g, const Weight& mu);

struct PairingReport {
  Rational value;
  std::string left, right;
  long long weylOrder = 0;  // |W(G(R),T(R))|, taken as |W_K|
  std::string note;
};

PairingReport ellipticPairing(const GroupDatum& g, const SupertemperedNumerator& a,
                              const SupertemperedNumerator& b);

/// Elliptic iff the Dirac index is not identically zero.
bool isElliptic(const FormalChar& index);

/// Dirac index of a principal series of SL(2,R) with K-types n*alpha/2, n of the
/// given parity: the K-type sum telescopes, so the closed form is zero.
FormalChar sl2PrincipalSeriesIndex(int parity);

/// Elliptic pairing of supertempered numerators against the K~-pairing of the
/// discrete-series Dirac indices; throws InternalError if they differ.
PairingReport indexPairingCheck(const GroupDatum& g, const Weight& lambda, const Weight& lambdaPrime);

struct DiscreteSeriesTarget { Weight lambda; };
struct FiniteDimTarget { Weight lambda; };
using TraceTarget = std::variant<DiscreteSeriesTarget, FiniteDimTarget>;

/// tr pi'(f_pi) as dim Hom between the Dirac cohomologies of target and source.
Rational pseudoCoefficientTrace(const GroupDatum& g, const TraceTarget& target, const Weight& source);

std::string datumKey(const GroupDatum& g);

}  // namespace diracsym::elliptic
