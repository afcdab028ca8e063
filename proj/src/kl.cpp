#include "diracsym/kl.hpp"

#include <algorithm>
#include <set>

#include "diracsym/dirac.hpp"

namespace diracsym::kl {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

const Poly kZero;

}  // namespace

Poly polyAdd(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly polySub(const Poly& a, const Poly& b) { return polyAdd(a, polyScale(b, -1)); }

Poly polyShift(const Poly& a, int k) {
  if (a.empty()) return a;
  Poly r(k, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

Poly polyScale(const Poly& a, long long k) {
  Poly r = a;
  for (auto& c : r) c *= k;
  trim(r);
  return r;
}

Poly polyMul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

long long polyAtOne(const Poly& a) {
  long long s = 0;
  for (auto c : a) s += c;
  return s;
}

int polyDegree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

std::vector<std::vector<bool>> bruhatOrder(const RootSystem& sys) {
  const int n = sys.order();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int w = 0; w < n; ++w) {
    std::set<int> sub{0};
    for (int s : sys.elem(w).word) {
      std::vector<int> cur(sub.begin(), sub.end());
      for (int u : cur) sub.insert(sys.multiply(u, sys.simpleReflection(s)));
    }
    for (int x : sub) le[x][w] = true;
  }
  return le;
}

KLTable::KLTable(RootSystemPtr sys) : sys_(std::move(sys)) {
  const auto& S = *sys_;
  n_ = static_cast<std::size_t>(S.order());
  bruhat_ = bruhatOrder(S);
  p_.assign(n_ * n_, Poly{});
  const int n = static_cast<int>(n_);
  p_[index(0, 0)] = {1};
  for (int w = 1; w < n; ++w) {
    const auto& word = S.elem(w).word;
    int sref = S.simpleReflection(word.back());
    int v = S.multiply(w, sref);
    int lw = S.elem(w).length;
    std::vector<int> below;  // z < v with zs < z and mu(z, v) != 0
    for (int z = 0; z < n; ++z) {
      if (z == v || !leq(z, v)) continue;
      if (S.elem(S.multiply(z, sref)).length > S.elem(z).length) continue;
      if (mu(z, v) != 0) below.push_back(z);
    }
    for (int x = 0; x < n; ++x) {
      if (!leq(x, w)) continue;
      int xs = S.multiply(x, sref);
      int c = S.elem(xs).length < S.elem(x).length ? 1 : 0;
      Poly r = polyAdd(polyShift(P(xs, v), 1 - c), polyShift(P(x, v), c));
      for (int z : below) {
        if (!leq(x, z)) continue;
        r = polySub(r, polyShift(polyScale(P(x, z), mu(z, v)), (lw - S.elem(z).length) / 2));
      }
      p_[index(x, w)] = r;
    }
  }
}

long long KLTable::mu(int x, int w) const {
  if (x == w || !leq(x, w)) return 0;
  int d = sys_->elem(w).length - sys_->elem(x).length - 1;
  if (d % 2 != 0) return 0;
  const Poly& p = P(x, w);
  std::size_t k = static_cast<std::size_t>(d / 2);
  return k < p.size() ? p[k] : 0;
}

ParabolicData makeParabolicData(const RootSystem& sys, std::vector<int> I, std::vector<int> J) {
  const int rank = sys.rank();
  auto validate = [&](std::vector<int>& v, const char* name) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (int i : v)
      if (i < 0 || i >= rank) throw InputError(std::string(name) + " contains an invalid simple root index");
  };
  validate(I, "I");
  validate(J, "J");
  ParabolicData d;
  d.I = I;
  d.J = J;
  std::set<int> wi{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int u : frontier)
      for (int i : I) {
        int v = sys.multiply(u, sys.simpleReflection(i));
        if (wi.insert(v).second) next.push_back(v);
      }
    frontier = next;
  }
  for (int u : wi)
    if (sys.elem(u).length > sys.elem(d.longestI).length) d.longestI = u;
  auto minimal = [&](int w) {
    for (int i : I)
      if (sys.elem(sys.multiply(sys.simpleReflection(i), w)).length < sys.elem(w).length) return false;
    return true;
  };
  for (int w = 0; w < sys.order(); ++w)
    if (minimal(w)) d.WI.push_back(w);
  for (int w : d.WI) {
    bool ok = true;
    for (int j : J) {
      int ws = sys.multiply(w, sys.simpleReflection(j));
      if (sys.elem(ws).length < sys.elem(w).length || !minimal(ws)) ok = false;
    }
    if (ok) d.JWI.push_back(w);
  }
  if (d.WI.size() * wi.size() != static_cast<std::size_t>(sys.order()))
    throw InternalError("parabolic coset count mismatch");
  return d;
}

const Poly& ParabolicTable::at(int x, int w) const {
  auto it = entries.find({x, w});
  return it == entries.end() ? kZero : it->second;
}

ParabolicTable parabolicKLV(const KLTable& table, const ParabolicData& data) {
  if (!data.J.empty()) throw InputError("singular blocks (J nonempty) are not supported");
  const auto& S = table.system();
  ParabolicTable t;
  t.data = data;
  for (int x : data.WI)
    for (int w : data.WI) {
      const Poly& p = table.P(S.multiply(data.longestI, x), S.multiply(data.longestI, w));
      if (p.empty()) continue;
      if (x != w && polyDegree(p) > (S.elem(w).length - S.elem(x).length - 1) / 2)
        throw InternalError("relative polynomial violates the degree bound");
      t.entries[{x, w}] = p;
    }
  return t;
}

HighestWeightResult hdHighestWeight(const KLTable& table, const std::vector<int>& I, const Weight& lambda) {
  const auto& S = table.system();
  const auto& d = S.datum();
  if (lambda.rank() != d.rank) throw InputError("weight rank mismatch");
  if (!lambda.isIntegral()) throw InputError("highest weight must be integral");
  auto full = rootsys::fullSubsystem(table.systemPtr());
  Weight shifted = lambda + full->rho;
  if (!full->isRegular(shifted)) throw InputError("infinitesimal character is singular");
  ParabolicData data = makeParabolicData(S, I);
  for (int i : data.I)
    if (lambda[i] < 0) throw InputError("lambda is not dominant for the Levi");
  auto [dom, u] = rootsys::dominantConjugate(-shifted, *full);
  HighestWeightResult r;
  r.antidominant = -dom;
  int y = S.inverse(u);
  r.w = S.multiply(data.longestI, y);
  if (std::find(data.WI.begin(), data.WI.end(), r.w) == data.WI.end())
    throw InternalError("position of lambda is not a minimal coset representative");
  auto levi = rootsys::leviSubsystem(table.systemPtr(), data.I);
  r.plus.sub = r.minus.sub = levi;
  ParabolicTable t = parabolicKLV(table, data);
  for (int x : data.WI) {
    long long m = polyAtOne(t.at(x, r.w));
    if (m == 0) continue;
    Weight nu = S.apply(S.multiply(data.longestI, x), r.antidominant) - levi->rho;
    bool even = (S.elem(r.w).length - S.elem(x).length) % 2 == 0;
    (even ? r.plus : r.minus).add(nu, m);
  }
  return r;
}

charring::FormalChar uHomologyEulerChar(const RootSystemPtr& sys, const std::vector<int>& I,
                                        const Weight& lambda) {
  auto full = rootsys::fullSubsystem(sys);
  if (!charring::isDominantIntegral(*full, lambda)) throw InputError("lambda must be dominant integral");
  ParabolicData data = makeParabolicData(*sys, I);
  auto levi = rootsys::leviSubsystem(sys, data.I);
  const auto& d = sys->datum();
  charring::FormalChar ec = charring::weylCharacter(*full, lambda);
  Weight zero = Weight::zero(d.rank);
  for (int b = 0; b < static_cast<int>(d.positiveRoots.size()); ++b) {
    if (levi->contains(b)) continue;
    ec = ec * (charring::FormalChar::monomial(zero) - charring::FormalChar::monomial(-d.positiveRoots[b].weight));
  }
  Weight rhoU = full->rho - levi->rho;
  charring::FormalChar index = dirac::kostant(full, levi, lambda).index();
  if (ec.shifted(rhoU) != index) throw InternalError("u-Euler characteristic does not match the Levi Dirac index");
  return ec;
}

}  // namespace diracsym::kl
