#pragma once

// Independent reference computations used only by tests and the acceptance
// binary. Nothing here calls the division, coset or KL code it is meant to check.

#include <map>
#include <vector>

#include "diracsym/charring.hpp"
#include "diracsym/rootsys.hpp"

namespace diracsym::oracle {

using charring::FormalChar;

/// Character of the irreducible of the full system via Freudenthal's formula.
FormalChar freudenthal(const rootsys::CartanDatum& d, const Weight& lambda);

/// Sum over subsets S of the noncompact positive roots of
/// (+-1)^{|S|} e(sum_S beta - rho_n): the exterior algebra of p+ shifted by -rho_n.
FormalChar exteriorSpin(const rootsys::GroupDatum& g, bool alternating);

/// Elements w of the group generated by the `outer` reflections with
/// w^{-1} beta > 0 for every positive root beta of `inner`, as matrices.
std::vector<rootsys::IntMatrix> cosetRepsByRoots(const rootsys::CartanDatum& d,
                                                 const std::vector<int>& outer,
                                                 const std::vector<int>& inner);

/// Full Weyl orbit of a weight by closure under simple reflections.
std::vector<Weight> orbit(const rootsys::CartanDatum& d, const Weight& lambda);

/// Bruhat order as the transitive closure of x < x t (t a reflection, length up).
std::vector<std::vector<bool>> bruhatByReflections(const rootsys::RootSystem& sys);

/// KL polynomials through R-polynomials and the bar-involution identity.
/// Entry [x][w] is the coefficient list of P_{x,w} (empty unless x <= w).
std::vector<std::vector<std::vector<long long>>> klViaR(const rootsys::RootSystem& sys);

}  // namespace diracsym::oracle
