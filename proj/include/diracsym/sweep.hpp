#pragma once

#include <vector>

#include "diracsym/rootsys.hpp"

namespace diracsym::sweep {

/// Dominant integral weights whose fundamental-weight coordinates sum to at most `height`.
std::vector<Weight> dominantWindow(int rank, int height);

/// Regular integral Harish-Chandra parameters with sum |coordinate| <= bound,
/// made K-dominant and listed once per W_K-orbit.
std::vector<Weight> parameterWindow(const rootsys::GroupDatum& g, int bound);

/// Every positive-root subset closed under its own reflections, graded by g.
std::vector<rootsys::SubsystemPtr> closedSubsystems(const rootsys::GroupDatum& g);

/// Every equal-rank grading of the type, in bit order.
std::vector<rootsys::GroupDatum> allForms(const std::string& type);

}  // namespace diracsym::sweep
