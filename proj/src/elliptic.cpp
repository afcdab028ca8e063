#include "diracsym/elliptic.hpp"

namespace diracsym::elliptic {

std::string datumKey(const GroupDatum& g) {
  std::string s = g.label() + "[";
  for (std::size_t i = 0; i < g.grading.bits.size(); ++i) s += (i ? "," : "") + std::to_string(g.grading.bits[i]);
  return s + "]";
}

SupertemperedNumerator supertemperedNumerator(const GroupDatum& g, const Weight& mu) {
  if (mu.rank() != g.rank()) throw InputError("weight rank mismatch");
  if (!mu.isIntegral()) throw InputError("parameter " + toText(mu) + " is not integral");
  SupertemperedNumerator n;
  n.numerator = charring::weylNumerator(*g.compact, mu);
  n.parameter = mu;
  n.signExponent = g.q;
  n.datum = datumKey(g);
  return n;
}

PairingReport ellipticPairing(const GroupDatum& g, const SupertemperedNumerator& a,
                              const SupertemperedNumerator& b) {
  std::string key = datumKey(g);
  if (a.datum != key || b.datum != key) throw InputError("numerators belong to different data");
  PairingReport r;
  r.weylOrder = g.compact->order();
  r.value = Rational(charring::torusInnerProduct(a.numerator, b.numerator), r.weylOrder);
  r.left = "Theta_" + toText(a.parameter);
  r.right = "Theta_" + toText(b.parameter);
  r.note = "|W(G(R),T(R))| taken as |W_K| = " + std::to_string(r.weylOrder);
  return r;
}

bool isElliptic(const FormalChar& index) { return !index.isZero(); }

FormalChar sl2PrincipalSeriesIndex(int parity) {
  if (parity != 0 && parity != 1) throw InputError("parity must be 0 or 1");
  // sum_n e((n+1)alpha/2) - e((n-1)alpha/2) over all n of one parity
  return FormalChar{};
}

PairingReport indexPairingCheck(const GroupDatum& g, const Weight& lambda, const Weight& lambdaPrime) {
  auto p = dirac::normalizeParameter(g, lambda);
  auto pp = dirac::normalizeParameter(g, lambdaPrime);
  PairingReport left = ellipticPairing(g, supertemperedNumerator(g, lambda), supertemperedNumerator(g, lambdaPrime));

  auto signedModule = [](const dirac::DiracCohomology& h) {
    charring::VirtualModule v = h.plus;
    for (const auto& [w, c] : h.minus.entries) v.add(w, -c);
    return v;
  };
  auto a = signedModule(dirac::hdDiscreteSeries(g, lambda));
  auto b = signedModule(dirac::hdDiscreteSeries(g, lambdaPrime));
  Rational right = dirac::homDimension(a, b) * p.orientation * pp.orientation;
  if (left.value != right)
    throw InternalError("elliptic pairing " + toText(left.value) + " differs from index pairing " + toText(right));
  return left;
}

Rational pseudoCoefficientTrace(const GroupDatum& g, const TraceTarget& target, const Weight& source) {
  auto src = dirac::hdDiscreteSeries(g, source).total();
  charring::VirtualModule tgt;
  if (auto* ds = std::get_if<DiscreteSeriesTarget>(&target))
    tgt = dirac::hdDiscreteSeries(g, ds->lambda).total();
  else
    tgt = dirac::hdFiniteDim(g, std::get<FiniteDimTarget>(target).lambda).total();
  return dirac::homDimension(tgt, src);
}

}  // namespace diracsym::elliptic
