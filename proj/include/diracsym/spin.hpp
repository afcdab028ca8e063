#pragma once

#include "diracsym/charring.hpp"
#include "diracsym/rootsys.hpp"

namespace diracsym::spin {

using charring::FormalChar;
using charring::VirtualModule;

struct SpinDecomposition {
  VirtualModule ktypes;      // every E_{w rho - rho_c}, multiplicity one
  VirtualModule plus, minus; // split by (-1)^{l(w)}
  FormalChar difference;     // ch S+ - ch S-, normalized with +1 on e(rho_n)
  int signExponent = 0;      // q(G); the global (-1)^q is kept as metadata
};

/// K~-types of the spin module of p for an equal-rank datum.
SpinDecomposition spinModuleKTypes(const rootsys::GroupDatum& g);

/// Product over positive roots of `outer` missing from `inner` of
/// (e(beta/2) - e(-beta/2)); the coefficient of e(rho(s+)) is +1.
FormalChar spinCharacterDifference(const rootsys::SubsystemDatum& outer,
                                   const rootsys::SubsystemDatum& inner);

/// Positive roots of `outer` not in `inner`.
std::vector<int> complementRoots(const rootsys::SubsystemDatum& outer,
                                 const rootsys::SubsystemDatum& inner);

}  // namespace diracsym::spin
