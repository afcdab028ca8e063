#pragma once

#include <vector>

#include "diracsym/charring.hpp"
#include "diracsym/rootsys.hpp"

namespace diracsym::endoscopy {

using charring::FormalChar;
using charring::VirtualModule;
using rootsys::GroupDatum;
using rootsys::SubsystemPtr;

/// Equal-rank endoscopic subsystem H of G given by positive-root indices,
/// graded by the real form of G.
SubsystemPtr endoscopicSubsystem(const GroupDatum& g, const std::vector<int>& roots);

struct TransferDatum {
  GroupDatum ambient;
  SubsystemPtr sub;
  int signExponent = 0;  // q(G) - q(H)
  FormalChar factor;     // ch S+(g/h) - ch S-(g/h), +1 on e(rho - rho_H)
};

/// Spin form of the transfer factor. chi_{G,H} is the trivial character.
TransferDatum transferFactorSpin(const GroupDatum& g, const SubsystemPtr& h);

/// Quotient form A_G(rho) / A_H(rho_H); needs rho - rho_H integral, and is checked against the spin form.
FormalChar transferFactorQuotient(const GroupDatum& g, const SubsystemPtr& h);

/// Transfer of the finite-dimensional module of highest weight lambda, under the
/// quotient form's lattice precondition: signed H-types w(lambda + rho) - rho_H,
/// checked against factor * ch V.
VirtualModule transferFiniteDim(const GroupDatum& g, const SubsystemPtr& h, const Weight& lambda);

struct TransferTerm {
  Weight lambda;  // Harish-Chandra parameter for H, (H cap K)-dominant
  int sign = 1;
};

/// Discrete series transfer: lambda (made K-dominant) goes to the H-parameters
/// w lambda, w running over W_K modulo W_{H cap K}, with sign eps(w).
std::vector<TransferTerm> transferDiscreteSeriesIndex(const GroupDatum& g, const SubsystemPtr& h, const Weight& lambda);

/// Transfer G -> M -> H agrees with G -> H for nested M containing H.
bool functorialityHolds(const GroupDatum& g, const SubsystemPtr& m, const SubsystemPtr& h, const Weight& lambda);

}  // namespace diracsym::endoscopy
