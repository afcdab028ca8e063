#include "diracsym/endoscopy.hpp"

#include <algorithm>

#include "diracsym/dirac.hpp"
#include "diracsym/spin.hpp"

namespace diracsym::endoscopy {

namespace {

SubsystemPtr regrade(const GroupDatum& g, const SubsystemPtr& h) {
  if (!h || h->system != g.system) throw InputError("subsystem does not belong to this group");
  return rootsys::makeSubsystem(g.system, h->roots, g.grading);
}

bool nested(const rootsys::SubsystemDatum& outer, const rootsys::SubsystemDatum& inner) {
  return std::includes(outer.roots.begin(), outer.roots.end(), inner.roots.begin(), inner.roots.end());
}

VirtualModule signedTypes(const dirac::DiracCohomology& hd) {
  VirtualModule v = hd.plus;
  for (const auto& [w, c] : hd.minus.entries) v.add(w, -c);
  return v;
}

void requireLattice(const GroupDatum& g, const rootsys::SubsystemDatum& sub) {
  Weight gap = g.rho - sub.rho;
  if (!gap.isIntegral())
    throw InputError("rho - rho_H = " + toText(gap) + " is not integral; the quotient form is undefined");
}

}  // namespace

SubsystemPtr endoscopicSubsystem(const GroupDatum& g, const std::vector<int>& roots) {
  return rootsys::makeSubsystem(g.system, roots, g.grading);
}

TransferDatum transferFactorSpin(const GroupDatum& g, const SubsystemPtr& h) {
  auto sub = regrade(g, h);
  TransferDatum t;
  t.ambient = g;
  t.sub = sub;
  t.factor = spin::spinCharacterDifference(*g.full, *sub);
  t.signExponent = g.q - sub->q;
  return t;
}

FormalChar transferFactorQuotient(const GroupDatum& g, const SubsystemPtr& h) {
  auto sub = regrade(g, h);
  requireLattice(g, *sub);
  const auto& d = g.system->datum();
  auto q = charring::tryDivide(charring::weylNumerator(*g.full, g.rho), charring::weylNumerator(*sub, sub->rho), d);
  if (!q) throw InputError("A_G(rho) is not divisible by A_H(rho_H)");
  if (*q != transferFactorSpin(g, sub).factor) throw InternalError("quotient and spin transfer factors differ");
  return *q;
}

VirtualModule transferFiniteDim(const GroupDatum& g, const SubsystemPtr& h, const Weight& lambda) {
  auto sub = regrade(g, h);
  requireLattice(g, *sub);
  VirtualModule out = signedTypes(dirac::kostant(g.full, sub, lambda));
  FormalChar lhs = transferFactorSpin(g, sub).factor * charring::weylCharacter(*g.full, lambda);
  FormalChar rhs;
  for (const auto& [mu, c] : out.entries) rhs += c * charring::weylCharacter(*sub, mu);
  if (lhs != rhs) throw InternalError("finite-dimensional transfer identity fails");
  return out;
}

std::vector<TransferTerm> transferDiscreteSeriesIndex(const GroupDatum& g, const SubsystemPtr& h, const Weight& lambda) {
  auto sub = regrade(g, h);
  auto p = dirac::normalizeParameter(g, lambda);
  auto hk = rootsys::intersect(*sub, *g.compact, g.grading);
  const auto& sys = *g.system;
  std::vector<TransferTerm> out;
  FormalChar summed;
  for (int w : rootsys::cosetReps(*g.compact, *hk)) {
    TransferTerm t{sys.apply(w, p.lambda), sys.elem(w).sign};
    if (!sub->isRegular(t.lambda)) throw InternalError("transferred parameter is singular for H");
    if (!hk->isDominant(t.lambda)) throw InternalError("transferred parameter is not (H cap K)-dominant");
    summed += t.sign * charring::weylNumerator(*hk, t.lambda);
    out.push_back(t);
  }
  FormalChar numG = charring::weylNumerator(*g.compact, p.lambda);
  if (summed != numG) throw InternalError("discrete series numerators do not transfer");
  FormalChar factor = transferFactorSpin(g, sub).factor;
  if (factor * numG * charring::weylDenominator(*sub) != charring::weylDenominator(*g.full) * summed)
    throw InternalError("discrete series character identity fails");
  return out;
}

bool functorialityHolds(const GroupDatum& g, const SubsystemPtr& m, const SubsystemPtr& h, const Weight& lambda) {
  auto mid = regrade(g, m);
  auto sub = regrade(g, h);
  if (!nested(*mid, *sub)) throw InputError("H is not contained in M");
  FormalChar direct = transferFactorSpin(g, sub).factor;
  FormalChar staged = transferFactorSpin(g, mid).factor * spin::spinCharacterDifference(*mid, *sub);
  if (direct != staged) return false;
  VirtualModule once = transferFiniteDim(g, sub, lambda);
  VirtualModule twice;
  twice.sub = sub;
  for (const auto& [mu, c] : transferFiniteDim(g, mid, lambda).entries)
    for (const auto& [nu, e] : signedTypes(dirac::kostant(mid, sub, mu)).entries) twice.add(nu, c * e);
  return once.entries == twice.entries;
}

}  // namespace diracsym::endoscopy
