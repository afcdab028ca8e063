#include "diracsym/sweep.hpp"

#include <cstdlib>
#include <set>

namespace diracsym::sweep {

namespace {

template <class F>
void boxVisit(int rank, int lo, int hi, F&& visit) {
  std::vector<int> c(rank, lo);
  while (true) {
    visit(c);
    int i = 0;
    while (i < rank && ++c[i] > hi) c[i++] = lo;
    if (i == rank) break;
  }
}

}  // namespace

std::vector<Weight> dominantWindow(int rank, int height) {
  std::vector<Weight> out;
  boxVisit(rank, 0, height, [&](const std::vector<int>& c) {
    int h = 0;
    for (int x : c) h += x;
    if (h > height) return;
    Weight w = Weight::zero(rank);
    for (int i = 0; i < rank; ++i) w[i] = 2 * c[i];
    out.push_back(w);
  });
  std::set<Weight> sorted(out.begin(), out.end());
  return {sorted.begin(), sorted.end()};
}

std::vector<Weight> parameterWindow(const rootsys::GroupDatum& g, int bound) {
  std::set<Weight> out;
  boxVisit(g.rank(), -bound, bound, [&](const std::vector<int>& c) {
    int h = 0;
    for (int x : c) h += std::abs(x);
    if (h > bound) return;
    Weight w = Weight::zero(g.rank());
    for (int i = 0; i < g.rank(); ++i) w[i] = 2 * c[i];
    if (!g.full->isRegular(w)) return;
    out.insert(rootsys::dominantConjugate(w, *g.compact).first);
  });
  return {out.begin(), out.end()};
}

std::vector<rootsys::SubsystemPtr> closedSubsystems(const rootsys::GroupDatum& g) {
  std::vector<rootsys::SubsystemPtr> out;
  int n = static_cast<int>(g.system->datum().positiveRoots.size());
  for (int m = 0; m < (1 << n); ++m) {
    std::vector<int> roots;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) roots.push_back(i);
    try {
      out.push_back(rootsys::makeSubsystem(g.system, roots, g.grading));
    } catch (const InputError&) {
    }
  }
  return out;
}

std::vector<rootsys::GroupDatum> allForms(const std::string& type) {
  std::vector<rootsys::GroupDatum> out;
  int rank = rootsys::buildCartanDatum(type).rank;
  for (const auto& bits : rootsys::allGradings(rank)) out.push_back(rootsys::buildGroupDatum(type, bits));
  return out;
}

}  // namespace diracsym::sweep
