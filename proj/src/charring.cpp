#include "diracsym/charring.hpp"

#include <sstream>

namespace diracsym::charring {

FormalChar FormalChar::monomial(const Weight& w, long long c) {
  FormalChar f;
  f.add(w, c);
  return f;
}

long long FormalChar::coeff(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void FormalChar::add(const Weight& w, long long c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

long long FormalChar::mass() const {
  long long s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

FormalChar FormalChar::conjugate() const {
  FormalChar r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(-w, c);
  return r;
}

FormalChar FormalChar::shifted(const Weight& s) const {
  FormalChar r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w + s, c);
  return r;
}

FormalChar& FormalChar::operator+=(const FormalChar& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FormalChar& FormalChar::operator-=(const FormalChar& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FormalChar FormalChar::operator-() const { return -1 * *this; }

FormalChar operator*(long long k, const FormalChar& f) {
  FormalChar r;
  if (k == 0) return r;
  for (const auto& [w, c] : f.terms_) r.terms_.emplace(w, k * c);
  return r;
}

FormalChar convolve(const FormalChar& f, const FormalChar& g) {
  FormalChar r;
  for (const auto& [a, x] : f.terms())
    for (const auto& [b, y] : g.terms()) r.add(a + b, x * y);
  return r;
}

std::string toText(const FormalChar& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    os << (first ? "" : " ") << (c < 0 ? "-" : (first ? "" : "+")) << (c < 0 ? -c : c) << "e"
       << toText(w);
    first = false;
  }
  return first ? "0" : os.str();
}

void VirtualModule::add(const Weight& w, long long c) {
  if (c == 0) return;
  auto [it, fresh] = entries.emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) entries.erase(it);
}

FormalChar weylNumerator(const SubsystemDatum& sub, const Weight& lambda) {
  FormalChar r;
  for (int w : sub.weyl) r.add(sub.system->apply(w, lambda), sub.system->elem(w).sign);
  return r;
}

FormalChar rootProduct(const SubsystemDatum& ambient, const std::vector<int>& roots) {
  const auto& d = ambient.system->datum();
  FormalChar r = FormalChar::monomial(Weight::zero(d.rank));
  for (int b : roots) {
    Weight half = d.positiveRoots.at(b).weight;
    for (auto& c : half.coords) c /= 2;
    FormalChar f = FormalChar::monomial(half) - FormalChar::monomial(-half);
    r = convolve(r, f);
  }
  return r;
}

FormalChar weylDenominator(const SubsystemDatum& sub) {
  FormalChar sum = weylNumerator(sub, sub.rho);
  FormalChar prod = rootProduct(sub, sub.roots);
  if (sum != prod) throw InternalError("Weyl denominator sum and product forms differ");
  return sum;
}

namespace {

bool above(const Weight& a, const Weight& b, const rootsys::CartanDatum& d) {
  long long oa = d.order(a), ob = d.order(b);
  if (oa != ob) return oa > ob;
  return a > b;
}

}  // namespace

Weight leadingWeight(const FormalChar& f, const rootsys::CartanDatum& d) {
  if (f.isZero()) throw InternalError("leading weight of zero character");
  const Weight* best = nullptr;
  for (const auto& [w, c] : f.terms())
    if (!best || above(w, *best, d)) best = &w;
  return *best;
}

std::optional<FormalChar> tryDivide(const FormalChar& num, const FormalChar& den,
                                    const rootsys::CartanDatum& d) {
  if (den.isZero()) throw InternalError("division by zero character");
  FormalChar quotient;
  if (num.isZero()) return quotient;
  const Weight dlead = leadingWeight(den, d);
  const long long dc = den.coeff(dlead);
  long long numMin = d.order(num.terms().begin()->first), denMin = d.order(dlead);
  for (const auto& [w, c] : num.terms()) numMin = std::min(numMin, d.order(w));
  for (const auto& [w, c] : den.terms()) denMin = std::min(denMin, d.order(w));
  FormalChar rest = num;
  while (!rest.isZero()) {
    Weight lead = leadingWeight(rest, d);
    long long c = rest.coeff(lead);
    if (c % dc != 0) return std::nullopt;
    Weight qw = lead - dlead;
    if (d.order(qw) < numMin - denMin) return std::nullopt;
    FormalChar term = FormalChar::monomial(qw, c / dc);
    quotient += term;
    rest -= convolve(term, den);
  }
  return quotient;
}

FormalChar divideExact(const FormalChar& num, const FormalChar& den, const rootsys::CartanDatum& d) {
  auto q = tryDivide(num, den, d);
  if (!q) throw InternalError("exact division left a remainder");
  return *q;
}

bool isDominantIntegral(const SubsystemDatum& sub, const Weight& lambda) {
  const auto& d = sub.system->datum();
  for (int r : sub.roots) {
    int p = d.pairing(lambda, r);
    if (p % 2 != 0) return false;
  }
  return sub.isDominant(lambda);
}

FormalChar weylCharacter(const SubsystemDatum& sub, const Weight& lambda) {
  const auto& d = sub.system->datum();
  if (lambda.rank() != d.rank) throw InputError("weight rank mismatch");
  if (!isDominantIntegral(sub, lambda))
    throw InputError("weight " + toText(lambda) + " is not dominant integral for the subsystem");
  if (sub.roots.empty()) return FormalChar::monomial(lambda);
  return divideExact(weylNumerator(sub, lambda + sub.rho), weylDenominator(sub), d);
}

Rational weylDimension(const SubsystemDatum& sub, const Weight& lambda) {
  const auto& d = sub.system->datum();
  Rational r = 1;
  Weight shifted = lambda + sub.rho;
  for (int b : sub.roots) r *= Rational(d.pairing(shifted, b), d.pairing(sub.rho, b));
  return r;
}

bool isInvariant(const FormalChar& f, const SubsystemDatum& sub) {
  for (int s : sub.simple) {
    int w = sub.system->reflection(s);
    for (const auto& [lam, c] : f.terms())
      if (f.coeff(sub.system->apply(w, lam)) != c) return false;
  }
  return true;
}

VirtualModule decomposeIntoIrreducibles(const FormalChar& f, SubsystemPtr sub) {
  if (!isInvariant(f, *sub)) throw InputError("character is not invariant under the subsystem Weyl group");
  const auto& d = sub->system->datum();
  VirtualModule m;
  m.sub = sub;
  FormalChar rest = f;
  while (!rest.isZero()) {
    Weight lead = leadingWeight(rest, d);
    long long c = rest.coeff(lead);
    if (!isDominantIntegral(*sub, lead)) throw InputError("highest remaining weight is not dominant integral");
    m.add(lead, c);
    rest -= c * weylCharacter(*sub, lead);
  }
  return m;
}

FormalChar characterOf(const VirtualModule& m) {
  FormalChar r;
  for (const auto& [w, c] : m.entries) r += c * weylCharacter(*m.sub, w);
  return r;
}

long long torusInnerProduct(const FormalChar& f, const FormalChar& g) {
  long long s = 0;
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& big = f.size() <= g.size() ? g : f;
  for (const auto& [w, c] : small.terms()) s += c * big.coeff(w);
  return s;
}

}  // namespace diracsym::charring
