#include "diracsym/spin.hpp"

#include <algorithm>

namespace diracsym::spin {

std::vector<int> complementRoots(const rootsys::SubsystemDatum& outer,
                                 const rootsys::SubsystemDatum& inner) {
  if (outer.system != inner.system) throw InputError("subsystems live in different root systems");
  if (!std::includes(outer.roots.begin(), outer.roots.end(), inner.roots.begin(), inner.roots.end()))
    throw InputError("inner subsystem is not contained in the outer one");
  std::vector<int> out;
  std::set_difference(outer.roots.begin(), outer.roots.end(), inner.roots.begin(), inner.roots.end(),
                      std::back_inserter(out));
  return out;
}

FormalChar spinCharacterDifference(const rootsys::SubsystemDatum& outer,
                                   const rootsys::SubsystemDatum& inner) {
  auto roots = complementRoots(outer, inner);
  FormalChar f = charring::rootProduct(outer, roots);
  Weight top = outer.rho - inner.rho;
  if (f.coeff(top) != 1) throw InternalError("spin difference is not normalized at rho(s+)");
  return f;
}

SpinDecomposition spinModuleKTypes(const rootsys::GroupDatum& g) {
  if (g.l0 != 0) throw InputError("only equal-rank data are supported");
  SpinDecomposition s;
  s.ktypes.sub = s.plus.sub = s.minus.sub = g.compact;
  const auto& sys = *g.system;
  FormalChar signedSum;
  long long dim = 0;
  for (int w : g.cosetReps) {
    Weight mu = sys.apply(w, g.rho) - g.rhoC;
    int sign = sys.elem(w).sign;
    s.ktypes.add(mu, 1);
    (sign > 0 ? s.plus : s.minus).add(mu, 1);
    FormalChar ch = charring::weylCharacter(*g.compact, mu);
    signedSum += sign * ch;
    dim += ch.mass();
  }
  if (dim != (1LL << g.q)) throw InternalError("spin module dimension is not 2^q");
  s.difference = spinCharacterDifference(*g.full, *g.compact);
  if (signedSum != s.difference) throw InternalError("spin K-types do not reproduce ch S+ - ch S-");
  s.signExponent = g.q;
  return s;
}

}  // namespace diracsym::spin
