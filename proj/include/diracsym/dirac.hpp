#pragma once

#include <variant>
#include <vector>

#include "diracsym/charring.hpp"
#include "diracsym/rootsys.hpp"

namespace diracsym::dirac {

using charring::FormalChar;
using charring::VirtualModule;
using rootsys::GroupDatum;
using rootsys::SubsystemDatum;
using rootsys::SubsystemPtr;

/// q = l + u cut out by a dominant integral element H (one entry per simple root).
struct ThetaStableParabolic {
  std::vector<int> defining;   // H in simple-coroot pairing form: H(alpha_i) = defining[i]
  SubsystemPtr levi;
  SubsystemPtr leviCompact;    // l cap k
  std::vector<int> nilradical; // positive roots with H(beta) > 0
  Weight rhoU, rhoUP;          // rho(u), rho(u cap p)
};

ThetaStableParabolic makeParabolic(const GroupDatum& g, const std::vector<int>& defining);

struct DiracCohomology {
  VirtualModule plus, minus;
  /// ch H_D+ - ch H_D-
  FormalChar index() const;
  /// The ungraded K~-module H_D+ + H_D-.
  VirtualModule total() const;
  friend bool operator==(const DiracCohomology& a, const DiracCohomology& b) {
    return a.plus == b.plus && a.minus == b.minus;
  }
};

/// Kostant's cohomology for a pair of nested subsystems:
/// types w(lambda + rho_outer) - rho_inner over W(outer)^1, graded by eps(w).
DiracCohomology kostant(const SubsystemPtr& outer, const SubsystemPtr& inner, const Weight& lambda);

DiracCohomology hdFiniteDim(const GroupDatum& g, const Weight& lambda);

struct AqResult {
  DiracCohomology hd;
  Weight lowestKType;  // lambda + 2 rho(u cap p)
};

AqResult hdAq(const GroupDatum& g, const ThetaStableParabolic& q, const Weight& lambda);

struct HCParameter {
  Weight lambda;       // made K-dominant
  int orientation = 1; // eps(w) of the W_K element used to normalize
  int noncompactNegative = 0;
};

/// Validates and K-normalizes a Harish-Chandra parameter (regular, integral).
HCParameter normalizeParameter(const GroupDatum& g, const Weight& lambda);

DiracCohomology hdDiscreteSeries(const GroupDatum& g, const Weight& lambda);

struct FiniteDimSource { Weight lambda; };
struct AqSource { std::vector<int> defining; Weight lambda; };
struct DiscreteSeriesSource { Weight lambda; };
using IndexSource = std::variant<FiniteDimSource, AqSource, DiscreteSeriesSource>;

/// Dirac index ch H_D+ - ch H_D- as a character of the compact torus.
FormalChar diracIndex(const GroupDatum& g, const IndexSource& source);

/// H_D(g,t; X_lambda) computed in stages; returns sum over W_K of e(w lambda).
FormalChar hdInStages(const GroupDatum& g, const Weight& lambda);

struct DiracInequality {
  bool holds = false;
  bool equality = false;
  bool inOrbit = false;
  Rational lhs, rhs;
  Weight shifted;  // w(mu - rho_n) + rho_c
};

DiracInequality diracInequalityHolds(const GroupDatum& g, const Weight& bigLambda, const Weight& mu);

struct GKDimension {
  long long dim = 0;
  bool infinitesimalCharacterMatches = false;
  long long expected = 0;  // |W(l)| / |W(l cap k)|
};

GKDimension gkCohomologyDim(const GroupDatum& g, const ThetaStableParabolic& q, const Weight& lambda,
                            const Weight& f);

/// dim Hom between two K~-modules given by highest-weight multiplicities.
long long homDimension(const VirtualModule& a, const VirtualModule& b);

bool parityCheck(const DiracCohomology& h);

/// True when some Weyl conjugate of `a` equals `b`.
bool inWeylOrbit(const rootsys::RootSystem& sys, const Weight& a, const Weight& b);

}  // namespace diracsym::dirac
