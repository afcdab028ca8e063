#include "diracsym/dirac.hpp"

#include "diracsym/spin.hpp"

namespace diracsym::dirac {

using charring::weylCharacter;

ThetaStableParabolic makeParabolic(const GroupDatum& g, const std::vector<int>& defining) {
  const auto& d = g.system->datum();
  if (static_cast<int>(defining.size()) != d.rank)
    throw InputError("parabolic needs one entry per simple root");
  for (int h : defining)
    if (h < 0) throw InputError("defining element must be dominant (entries >= 0)");
  ThetaStableParabolic q;
  q.defining = defining;
  std::vector<int> leviSimple;
  for (int i = 0; i < d.rank; ++i)
    if (defining[i] == 0) leviSimple.push_back(i);
  q.levi = rootsys::leviSubsystem(g.system, leviSimple, g.grading);
  q.leviCompact = rootsys::intersect(*q.levi, *g.compact, g.grading);
  q.rhoU = g.rho - q.levi->rho;
  q.rhoUP = Weight::zero(d.rank);
  for (int i = 0; i < static_cast<int>(d.positiveRoots.size()); ++i) {
    const auto& r = d.positiveRoots[i];
    int h = 0;
    for (int k = 0; k < d.rank; ++k) h += r.simpleCoeffs[k] * defining[k];
    if (h <= 0) continue;
    q.nilradical.push_back(i);
    if (!g.isCompactRoot(i)) q.rhoUP += r.weight;
  }
  for (auto& c : q.rhoUP.coords) c /= 2;
  return q;
}

FormalChar DiracCohomology::index() const { return characterOf(plus) - characterOf(minus); }

VirtualModule DiracCohomology::total() const {
  VirtualModule t = plus;
  for (const auto& [w, c] : minus.entries) t.add(w, c);
  return t;
}

DiracCohomology kostant(const SubsystemPtr& outer, const SubsystemPtr& inner, const Weight& lambda) {
  if (!charring::isDominantIntegral(*outer, lambda))
    throw InputError("weight " + toText(lambda) + " is not dominant integral");
  const auto& sys = *outer->system;
  DiracCohomology h;
  h.plus.sub = h.minus.sub = inner;
  Weight shifted = lambda + outer->rho;
  for (int w : rootsys::cosetReps(*outer, *inner)) {
    Weight mu = sys.apply(w, shifted) - inner->rho;
    if (!charring::isDominantIntegral(*inner, mu)) throw InternalError("Kostant type is not dominant");
    (sys.elem(w).sign > 0 ? h.plus : h.minus).add(mu, 1);
  }
  return h;
}

DiracCohomology hdFiniteDim(const GroupDatum& g, const Weight& lambda) {
  if (g.l0 != 0) throw InputError("only equal-rank data are supported");
  return kostant(g.full, g.compact, lambda);
}

AqResult hdAq(const GroupDatum& g, const ThetaStableParabolic& q, const Weight& lambda) {
  const auto& d = g.system->datum();
  if (lambda.rank() != d.rank) throw InputError("weight rank mismatch");
  if (!lambda.isIntegral()) throw InputError("A_q(lambda) needs an integral lambda");
  for (int r : q.levi->roots)
    if (d.pairing(lambda, r) != 0) throw InputError("lambda is not orthogonal to the Levi roots");
  for (int r : q.nilradical)
    if (d.pairing(lambda, r) < 0) throw InputError("lambda is negative on a root of u");
  const auto& sys = *g.system;
  AqResult res;
  res.hd.plus.sub = res.hd.minus.sub = g.compact;
  Weight shifted = lambda + g.rho;
  for (int w : rootsys::cosetReps(*q.levi, *q.leviCompact)) {
    Weight mu = sys.apply(w, shifted) - g.rhoC;
    if (!charring::isDominantIntegral(*g.compact, mu)) throw InternalError("A_q type is not K-dominant");
    (sys.elem(w).sign > 0 ? res.hd.plus : res.hd.minus).add(mu, 1);
  }
  res.lowestKType = lambda + 2 * q.rhoUP;
  return res;
}

HCParameter normalizeParameter(const GroupDatum& g, const Weight& lambda) {
  const auto& d = g.system->datum();
  if (lambda.rank() != d.rank) throw InputError("weight rank mismatch");
  if (!lambda.isIntegral()) throw InputError("Harish-Chandra parameter " + toText(lambda) + " is not integral");
  if (!g.full->isRegular(lambda)) throw InputError("Harish-Chandra parameter " + toText(lambda) + " is singular");
  auto [dom, w] = rootsys::dominantConjugate(lambda, *g.compact);
  HCParameter p;
  p.lambda = dom;
  p.orientation = g.system->elem(w).sign;
  for (std::size_t i = 0; i < d.positiveRoots.size(); ++i)
    if (d.pairing(dom, static_cast<int>(i)) < 0) ++p.noncompactNegative;
  return p;
}

DiracCohomology hdDiscreteSeries(const GroupDatum& g, const Weight& lambda) {
  HCParameter p = normalizeParameter(g, lambda);
  DiracCohomology h;
  h.plus.sub = h.minus.sub = g.compact;
  Weight mu = p.lambda - g.rhoC;
  if (!charring::isDominantIntegral(*g.compact, mu)) throw InternalError("discrete series type is not K-dominant");
  (p.noncompactNegative % 2 == 0 ? h.plus : h.minus).add(mu, 1);
  return h;
}

FormalChar diracIndex(const GroupDatum& g, const IndexSource& source) {
  if (auto* f = std::get_if<FiniteDimSource>(&source)) {
    FormalChar idx = hdFiniteDim(g, f->lambda).index();
    FormalChar viaSpin = charring::convolve(weylCharacter(*g.full, f->lambda),
                                            spin::spinCharacterDifference(*g.full, *g.compact));
    if (idx != viaSpin) throw InternalError("Kostant index differs from ch V (ch S+ - ch S-)");
    return idx;
  }
  if (auto* a = std::get_if<AqSource>(&source)) return hdAq(g, makeParabolic(g, a->defining), a->lambda).hd.index();
  return hdDiscreteSeries(g, std::get<DiscreteSeriesSource>(source).lambda).index();
}

FormalChar hdInStages(const GroupDatum& g, const Weight& lambda) {
  HCParameter p = normalizeParameter(g, lambda);
  FormalChar direct;
  for (int w : g.compact->weyl) direct.add(g.system->apply(w, lambda), 1);
  DiracCohomology gk = hdDiscreteSeries(g, lambda);
  FormalChar staged;
  for (const auto& [mu, c] : gk.total().entries) {
    auto kt = kostant(g.compact, g.torus, mu);
    for (const auto& [nu, m] : kt.total().entries) staged.add(nu, c * m);
  }
  if (staged != direct) throw InternalError("cohomology in stages disagrees with the W_K orbit sum");
  return direct;
}

bool inWeylOrbit(const rootsys::RootSystem& sys, const Weight& a, const Weight& b) {
  for (int w = 0; w < sys.order(); ++w)
    if (sys.apply(w, a) == b) return true;
  return false;
}

DiracInequality diracInequalityHolds(const GroupDatum& g, const Weight& bigLambda, const Weight& mu) {
  const auto& d = g.system->datum();
  if (bigLambda.rank() != d.rank || mu.rank() != d.rank) throw InputError("weight rank mismatch");
  auto [dom, w] = rootsys::dominantConjugate(mu - g.rhoN, *g.compact);
  DiracInequality r;
  r.shifted = dom + g.rhoC;
  r.lhs = d.form(r.shifted, r.shifted);
  r.rhs = d.form(bigLambda, bigLambda);
  r.holds = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  r.inOrbit = inWeylOrbit(*g.system, r.shifted, bigLambda);
  if (r.inOrbit && !r.equality) throw InternalError("orbit member with different norm");
  return r;
}

long long homDimension(const VirtualModule& a, const VirtualModule& b) {
  long long s = 0;
  for (const auto& [w, c] : a.entries) {
    auto it = b.entries.find(w);
    if (it != b.entries.end()) s += c * it->second;
  }
  return s;
}

GKDimension gkCohomologyDim(const GroupDatum& g, const ThetaStableParabolic& q, const Weight& lambda,
                            const Weight& f) {
  GKDimension r;
  AqResult x = hdAq(g, q, lambda);
  r.expected = q.levi->order() / q.leviCompact->order();
  if (!charring::isDominantIntegral(*g.full, f)) throw InputError("F must be dominant integral");
  r.infinitesimalCharacterMatches = inWeylOrbit(*g.system, f + g.rho, lambda + g.rho);
  if (!r.infinitesimalCharacterMatches) return r;
  r.dim = homDimension(hdFiniteDim(g, f).total(), x.hd.total());
  if (r.dim != r.expected) throw InternalError("(g,K)-cohomology dimension differs from |W(l)/W(l cap k)|");
  return r;
}

bool parityCheck(const DiracCohomology& h) { return homDimension(h.plus, h.minus) == 0; }

}  // namespace diracsym::dirac
