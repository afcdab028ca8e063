#include "diracsym/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace diracsym::rootsys {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Weight IntMatrix::apply(const Weight& w) const {
  if (w.rank() != n_) throw InputError("weight rank " + std::to_string(w.rank()) +
                                       " does not match rank " + std::to_string(n_));
  Weight r = Weight::zero(n_);
  for (int i = 0; i < n_; ++i) {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * w[j];
    r[i] = s;
  }
  return r;
}

long long IntMatrix::determinant() const {
  std::vector<std::vector<Rational>> m(n_, std::vector<Rational>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[i][j] = (*this)(i, j);
  Rational det = 1;
  for (int c = 0; c < n_; ++c) {
    int p = c;
    while (p < n_ && m[p][c] == Rational(0)) ++p;
    if (p == n_) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n_; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k < n_; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det.numerator();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      int x = a(i, k);
      if (!x) continue;
      for (int j = 0; j < a.n_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

int Root::height() const { return std::accumulate(simpleCoeffs.begin(), simpleCoeffs.end(), 0); }

namespace {

struct SimpleFactor {
  std::vector<std::vector<int>> cartan;
  std::vector<Rational> d;
};

SimpleFactor simpleFactor(std::string_view t) {
  if (t == "A1") return {{{2}}, {1}};
  if (t == "A2") return {{{2, -1}, {-1, 2}}, {1, 1}};
  if (t == "A3") return {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}};
  if (t == "B2") return {{{2, -2}, {-1, 2}}, {1, Rational(1, 2)}};
  if (t == "C2") return {{{2, -1}, {-2, 2}}, {Rational(1, 2), 1}};
  if (t == "G2") return {{{2, -1}, {-3, 2}}, {Rational(1, 3), 1}};
  throw InputError("unknown Cartan type '" + std::string(t) + "'");
}

std::vector<std::vector<Rational>> inverse(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == Rational(0)) ++p;
    if (p == n) throw InternalError("singular Cartan matrix");
    std::swap(m[p], m[c]);
    Rational piv = m[c][c];
    for (auto& x : m[c]) x /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == Rational(0)) continue;
      Rational f = m[r][c];
      for (int k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace

int CartanDatum::pairing(const Weight& lambda, int root) const {
  if (lambda.rank() != rank) throw InputError("weight rank mismatch");
  const auto& cc = positiveRoots.at(root).corootCoeffs;
  int s = 0;
  for (int k = 0; k < rank; ++k) s += cc[k] * lambda[k];
  return s;
}

std::optional<std::pair<int, int>> CartanDatum::locate(const Weight& doubledRoot) const {
  auto it = rootIndex.find(doubledRoot);
  if (it == rootIndex.end()) return std::nullopt;
  return it->second;
}

Rational CartanDatum::form(const Weight& a, const Weight& b) const {
  if (a.rank() != rank || b.rank() != rank) throw InputError("weight rank mismatch");
  Rational s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (a[i] && b[j]) s += omegaGram[i][j] * (a[i] * b[j]);
  return s / 4;
}

long long CartanDatum::order(const Weight& w) const {
  long long s = 0;
  for (int i = 0; i < rank; ++i) s += orderFunctional[i] * w[i];
  return s;
}

CartanDatum buildCartanDatum(std::string_view label) {
  CartanDatum d;
  d.label = std::string(label);
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = label.find('x', start);
    parts.push_back(label.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  std::vector<SimpleFactor> factors;
  for (auto p : parts) {
    factors.push_back(simpleFactor(p));
    d.rank += static_cast<int>(factors.back().d.size());
  }
  if (d.rank > 4) throw InputError("total rank exceeds 4 in '" + d.label + "'");
  d.cartan.assign(d.rank, std::vector<int>(d.rank, 0));
  int off = 0;
  for (const auto& f : factors) {
    int n = static_cast<int>(f.d.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d.cartan[off + i][off + j] = f.cartan[i][j];
      d.halfSquaredLength.push_back(f.d[i]);
    }
    off += n;
  }

  const int n = d.rank;
  std::vector<Root> found;
  std::set<std::vector<int>> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r;
    r.weight = Weight::zero(n);
    for (int j = 0; j < n; ++j) r.weight[j] = 2 * d.cartan[i][j];
    r.simpleCoeffs.assign(n, 0);
    r.simpleCoeffs[i] = 1;
    r.corootCoeffs.assign(n, 0);
    r.corootCoeffs[i] = 1;
    seen.insert(r.simpleCoeffs);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    found.push_back(r);
    for (int j = 0; j < n; ++j) {
      int c = r.weight[j] / 2;
      if (c == 0) continue;
      Root s = r;
      for (int k = 0; k < n; ++k) s.weight[k] -= 2 * c * d.cartan[j][k];
      s.simpleCoeffs[j] -= c;
      int dc = 0;
      for (int k = 0; k < n; ++k) dc += r.corootCoeffs[k] * d.cartan[j][k];
      s.corootCoeffs[j] -= dc;
      bool positive = std::all_of(s.simpleCoeffs.begin(), s.simpleCoeffs.end(),
                                  [](int x) { return x >= 0; });
      if (!positive || seen.count(s.simpleCoeffs)) continue;
      seen.insert(s.simpleCoeffs);
      queue.push_back(s);
    }
  }
  std::sort(found.begin(), found.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.simpleCoeffs > b.simpleCoeffs;
  });
  d.positiveRoots = std::move(found);
  for (int i = 0; i < static_cast<int>(d.positiveRoots.size()); ++i) {
    d.rootIndex[d.positiveRoots[i].weight] = {i, 1};
    d.rootIndex[-d.positiveRoots[i].weight] = {i, -1};
  }

  auto inv = inverse(d.cartan);
  d.omegaGram.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.omegaGram[i][j] = inv[i][j] * d.halfSquaredLength[j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.omegaGram[i][j] != d.omegaGram[j][i]) throw InternalError("invariant form not symmetric");

  d.orderFunctional.assign(n, 0);
  for (const auto& r : d.positiveRoots)
    for (int k = 0; k < n; ++k) d.orderFunctional[k] += r.corootCoeffs[k];
  return d;
}

std::vector<WeylElem> weylGroup(const CartanDatum& d) {
  const int n = d.rank;
  std::vector<IntMatrix> gens;
  for (int i = 0; i < n; ++i) {
    IntMatrix m = IntMatrix::identity(n);
    for (int j = 0; j < n; ++j) m(j, i) -= d.cartan[i][j];
    gens.push_back(m);
  }
  std::vector<WeylElem> out;
  std::map<IntMatrix, int> seen;
  WeylElem e;
  e.matrix = IntMatrix::identity(n);
  out.push_back(e);
  seen[e.matrix] = 0;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      IntMatrix m = out[head].matrix * gens[i];
      if (seen.count(m)) continue;
      WeylElem w;
      w.word = out[head].word;
      w.word.push_back(i);
      w.matrix = m;
      w.length = static_cast<int>(w.word.size());
      w.sign = (w.length % 2) ? -1 : 1;
      seen[m] = static_cast<int>(out.size());
      out.push_back(std::move(w));
    }
  }
  return out;
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
  weyl_ = weylGroup(datum_);
  const std::size_t N = weyl_.size();
  for (std::size_t i = 0; i < N; ++i) index_[weyl_[i].matrix] = static_cast<int>(i);
  mult_.resize(N * N);
  inverse_.assign(N, -1);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      int c = indexOf(weyl_[a].matrix * weyl_[b].matrix);
      mult_[a * N + b] = c;
      if (c == 0) inverse_[a] = static_cast<int>(b);
    }
  for (int i = 0; i < datum_.rank; ++i) simple_.push_back(static_cast<int>(i + 1));
  for (int i = 0; i < datum_.rank; ++i)
    if (weyl_[simple_[i]].word != std::vector<int>{i}) throw InternalError("simple reflection order");
  const int n = datum_.rank;
  for (const auto& r : datum_.positiveRoots) {
    IntMatrix m = IntMatrix::identity(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m(j, k) -= r.corootCoeffs[k] * (r.weight[j] / 2);
    reflections_.push_back(indexOf(m));
  }
  for (std::size_t i = 0; i < N; ++i)
    if (weyl_[i].length > weyl_[longest_].length) longest_ = static_cast<int>(i);
}

int RootSystem::indexOf(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw InternalError("matrix is not a Weyl group element");
  return it->second;
}

RootSystemPtr makeRootSystem(std::string_view label) {
  return std::make_shared<const RootSystem>(buildCartanDatum(label));
}

int RealFormGrading::epsilon(const Root& root) const {
  if (bits.empty()) return 0;
  int s = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) s += bits[i] * root.simpleCoeffs[i];
  return ((s % 2) + 2) % 2;
}

bool SubsystemDatum::contains(int root) const {
  return std::binary_search(roots.begin(), roots.end(), root);
}

bool SubsystemDatum::isDominant(const Weight& lambda) const {
  const auto& d = system->datum();
  return std::all_of(simple.begin(), simple.end(), [&](int r) { return d.pairing(lambda, r) >= 0; });
}

bool SubsystemDatum::isRegular(const Weight& lambda) const {
  const auto& d = system->datum();
  return std::all_of(roots.begin(), roots.end(), [&](int r) { return d.pairing(lambda, r) != 0; });
}

int SubsystemDatum::length(int w) const {
  const auto& d = system->datum();
  int len = 0;
  for (int r : roots) {
    auto loc = d.locate(system->apply(w, d.positiveRoots[r].weight));
    if (!loc) throw InternalError("Weyl element does not permute roots");
    if (loc->second < 0) ++len;
  }
  return len;
}

SubsystemPtr makeSubsystem(RootSystemPtr system, std::vector<int> roots,
                           const RealFormGrading& grading) {
  const auto& d = system->datum();
  const int nroots = static_cast<int>(d.positiveRoots.size());
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (int r : roots)
    if (r < 0 || r >= nroots) throw InputError("positive root index " + std::to_string(r) + " out of range");

  auto sub = std::make_shared<SubsystemDatum>();
  sub->system = system;
  sub->roots = roots;
  for (int b : roots)
    for (int g : roots) {
      auto loc = d.locate(system->apply(system->reflection(b), d.positiveRoots[g].weight));
      if (!loc || !sub->contains(loc->first))
        throw InputError("root set is not closed under its reflections");
    }

  // Simple iff no positive subsystem root differs from it by another one.
  for (int r : roots) {
    bool decomposable = false;
    for (int a : roots) {
      if (a == r) continue;
      Weight diff = d.positiveRoots[r].weight - d.positiveRoots[a].weight;
      auto loc = d.locate(diff);
      if (loc && loc->second > 0 && sub->contains(loc->first)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) sub->simple.push_back(r);
  }

  sub->rho = Weight::zero(d.rank);
  for (int r : roots) sub->rho += d.positiveRoots[r].weight;
  for (auto& c : sub->rho.coords) c /= 2;
  for (int r : roots) sub->q += grading.epsilon(d.positiveRoots[r]);

  std::vector<int> gens;
  for (int s : sub->simple) gens.push_back(system->reflection(s));
  std::set<int> seen{0};
  sub->weyl.push_back(0);
  for (std::size_t head = 0; head < sub->weyl.size(); ++head)
    for (int g : gens) {
      int w = system->multiply(sub->weyl[head], g);
      if (seen.insert(w).second) sub->weyl.push_back(w);
    }
  return sub;
}

SubsystemPtr fullSubsystem(RootSystemPtr system, const RealFormGrading& grading) {
  std::vector<int> all(system->datum().positiveRoots.size());
  std::iota(all.begin(), all.end(), 0);
  return makeSubsystem(std::move(system), std::move(all), grading);
}

SubsystemPtr leviSubsystem(RootSystemPtr system, const std::vector<int>& levi,
                           const RealFormGrading& grading) {
  const auto& d = system->datum();
  std::vector<int> roots;
  for (int i = 0; i < static_cast<int>(d.positiveRoots.size()); ++i) {
    const auto& c = d.positiveRoots[i].simpleCoeffs;
    bool inside = true;
    for (int k = 0; k < d.rank; ++k)
      if (c[k] != 0 && std::find(levi.begin(), levi.end(), k) == levi.end()) inside = false;
    if (inside) roots.push_back(i);
  }
  return makeSubsystem(std::move(system), std::move(roots), grading);
}

SubsystemPtr intersect(const SubsystemDatum& a, const SubsystemDatum& b,
                       const RealFormGrading& grading) {
  std::vector<int> roots;
  std::set_intersection(a.roots.begin(), a.roots.end(), b.roots.begin(), b.roots.end(),
                        std::back_inserter(roots));
  return makeSubsystem(a.system, std::move(roots), grading);
}

bool GroupDatum::isCompactRoot(int root) const {
  return grading.epsilon(system->datum().positiveRoots.at(root)) == 0;
}

GroupDatum buildGroupDatum(std::string_view type, std::vector<int> grading) {
  GroupDatum g;
  g.system = makeRootSystem(type);
  const auto& d = g.system->datum();
  if (grading.empty()) grading.assign(d.rank, 0);
  if (static_cast<int>(grading.size()) != d.rank)
    throw InputError("grading has " + std::to_string(grading.size()) + " entries, rank is " +
                     std::to_string(d.rank));
  for (int b : grading)
    if (b != 0 && b != 1) throw InputError("grading entries must be 0 or 1");
  g.grading.bits = std::move(grading);
  std::vector<int> compact;
  for (int i = 0; i < static_cast<int>(d.positiveRoots.size()); ++i)
    if (g.grading.epsilon(d.positiveRoots[i]) == 0) compact.push_back(i);
  g.full = fullSubsystem(g.system, g.grading);
  g.compact = makeSubsystem(g.system, compact, g.grading);
  g.torus = makeSubsystem(g.system, {}, g.grading);
  g.rho = g.full->rho;
  g.rhoC = g.compact->rho;
  g.rhoN = g.rho - g.rhoC;
  g.q = g.full->q;
  g.cosetReps = cosetReps(*g.full, *g.compact);
  return g;
}

std::vector<int> cosetReps(const SubsystemDatum& outer, const SubsystemDatum& inner) {
  if (!std::includes(outer.roots.begin(), outer.roots.end(), inner.roots.begin(), inner.roots.end()))
    throw InputError("inner subsystem is not contained in the outer one");
  std::vector<int> reps;
  for (int w : outer.weyl)
    if (inner.isDominant(outer.system->apply(w, outer.rho))) reps.push_back(w);
  if (reps.size() * inner.weyl.size() != outer.weyl.size())
    throw InternalError("coset representative count mismatch");
  return reps;
}

std::pair<Weight, int> dominantConjugate(const Weight& lambda, const SubsystemDatum& sub) {
  const auto& sys = *sub.system;
  const auto& d = sys.datum();
  Weight cur = lambda;
  int w = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : sub.simple) {
      if (d.pairing(cur, s) < 0) {
        int r = sys.reflection(s);
        cur = sys.apply(r, cur);
        w = sys.multiply(r, w);
        moved = true;
        break;
      }
    }
  }
  return {cur, w};
}

std::vector<std::vector<int>> allGradings(int rank) {
  std::vector<std::vector<int>> out;
  for (int m = 0; m < (1 << rank); ++m) {
    std::vector<int> g(rank);
    for (int i = 0; i < rank; ++i) g[i] = (m >> i) & 1;
    out.push_back(g);
  }
  return out;
}

}  // namespace diracsym::rootsys
