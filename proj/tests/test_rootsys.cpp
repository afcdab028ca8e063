#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "diracsym/rootsys.hpp"
#include "support.hpp"

using namespace diracsym;
using namespace diracsym::rootsys;

namespace {

// Closure of the simple-reflection matrices under multiplication, no words involved.
std::set<IntMatrix> bruteClosure(const CartanDatum& d) {
  std::set<IntMatrix> out{IntMatrix::identity(d.rank)};
  std::vector<IntMatrix> gens;
  for (int i = 0; i < d.rank; ++i) {
    IntMatrix m = IntMatrix::identity(d.rank);
    for (int j = 0; j < d.rank; ++j) m(j, i) -= d.cartan[i][j];
    gens.push_back(m);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IntMatrix> cur(out.begin(), out.end());
    for (const auto& a : cur)
      for (const auto& g : gens)
        if (out.insert(a * g).second) grew = true;
  }
  return out;
}

int negatedCount(const RootSystem& sys, int w) {
  int n = 0;
  for (const auto& r : sys.datum().positiveRoots)
    if (sys.datum().locate(sys.apply(w, r.weight))->second < 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("positive root counts") {
  std::vector<std::pair<std::string, std::size_t>> cases = {
      {"A1", 1}, {"A2", 3}, {"A3", 6}, {"B2", 4}, {"C2", 4}, {"G2", 6}, {"A1xA1", 2}, {"A1xG2", 7}};
  for (const auto& [t, n] : cases) {
    auto d = buildCartanDatum(t);
    CHECK(d.positiveRoots.size() == n);
    for (const auto& r : d.positiveRoots)
      CHECK(std::all_of(r.simpleCoeffs.begin(), r.simpleCoeffs.end(), [](int c) { return c >= 0; }));
    for (int i = 0; i < d.rank; ++i) {
      CHECK(d.cartan[i][i] == 2);
      for (int j = 0; j < d.rank; ++j)
        if (i != j) CHECK(d.cartan[i][j] <= 0);
    }
  }
}

TEST_CASE("unknown labels and oversized products are rejected") {
  CHECK_THROWS_AS(buildCartanDatum("D4"), InputError);
  CHECK_THROWS_AS(buildCartanDatum("A3xA2"), InputError);
  CHECK_THROWS_AS(buildGroupDatum("A2", {1}), InputError);
  CHECK_THROWS_AS(buildGroupDatum("A2", {1, 2}), InputError);
}

TEST_CASE("Weyl group orders and lengths") {
  std::vector<std::pair<std::string, std::size_t>> cases = {
      {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"C2", 8}, {"G2", 12}, {"A1xB2", 16}};
  for (const auto& [t, n] : cases) {
    auto sys = makeRootSystem(t);
    CHECK(sys->weyl().size() == n);
    CHECK(bruteClosure(sys->datum()).size() == n);
    for (int w = 0; w < sys->order(); ++w) {
      const auto& e = sys->elem(w);
      CHECK(e.length == static_cast<int>(e.word.size()));
      CHECK(e.length == negatedCount(*sys, w));
      CHECK(e.sign == e.matrix.determinant());
      IntMatrix m = IntMatrix::identity(sys->rank());
      for (int i : e.word) m = m * sys->elem(sys->simpleReflection(i)).matrix;
      CHECK(m == e.matrix);
      CHECK(sys->multiply(w, sys->inverse(w)) == 0);
    }
    CHECK(sys->elem(sys->longest()).length == static_cast<int>(sys->datum().positiveRoots.size()));
  }
  auto a2 = makeRootSystem("A2");
  std::multiset<int> lens;
  for (const auto& e : a2->weyl()) lens.insert(e.length);
  CHECK(lens == std::multiset<int>{0, 1, 1, 2, 2, 3});
  CHECK(makeRootSystem("B2")->elem(makeRootSystem("B2")->longest()).length == 4);
}

TEST_CASE("rho is regular") {
  for (std::string t : {"A1", "A2", "A3", "B2", "C2", "G2", "A1xA1"}) {
    auto sys = makeRootSystem(t);
    auto full = fullSubsystem(sys);
    for (int w = 1; w < sys->order(); ++w) CHECK(sys->apply(w, full->rho) != full->rho);
  }
}

TEST_CASE("invariant form normalization") {
  for (std::string t : {"A2", "B2", "C2", "G2", "A3"}) {
    auto d = buildCartanDatum(t);
    Rational longest = 0;
    for (const auto& r : d.positiveRoots) longest = std::max(longest, d.form(r.weight, r.weight));
    CHECK(longest == Rational(2));
    for (std::size_t i = 0; i < d.positiveRoots.size(); ++i)
      for (std::size_t j = 0; j < d.positiveRoots.size(); ++j) {
        const auto& a = d.positiveRoots[i].weight;
        const auto& b = d.positiveRoots[j].weight;
        // 2(a,b)/(b,b) equals <a, b^vee>
        CHECK(2 * d.form(a, b) / d.form(b, b) == Rational(d.pairing(a, static_cast<int>(j)), 2));
      }
  }
}

TEST_CASE("group data for sl(2,R) and compact A1") {
  auto g = buildGroupDatum("A1", {1});
  CHECK(g.q == 1);
  CHECK(g.rho == Weight{2});
  CHECK(g.rhoC == Weight{0});
  CHECK(g.rhoN == Weight{2});
  CHECK(g.cosetReps.size() == 2);
  auto c = buildGroupDatum("A1", {0});
  CHECK(c.q == 0);
  CHECK(c.rhoC == Weight{2});
  CHECK(c.rhoN == Weight{0});
  CHECK(c.cosetReps == std::vector<int>{0});
}

TEST_CASE("compact subsystems close under addition for every grading") {
  for (std::string t : {"A1", "A2", "A3", "B2", "C2", "G2", "A1xA1"}) {
    auto sys = makeRootSystem(t);
    for (const auto& bits : allGradings(sys->rank())) {
      auto g = buildGroupDatum(t, bits);
      const auto& d = g.system->datum();
      int n = static_cast<int>(d.positiveRoots.size());
      std::vector<Weight> all;
      std::vector<int> eps;
      for (int i = 0; i < n; ++i) {
        all.push_back(d.positiveRoots[i].weight);
        all.push_back(-d.positiveRoots[i].weight);
        int e = g.isCompactRoot(i) ? 0 : 1;
        eps.push_back(e);
        eps.push_back(e);
      }
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = 0; b < all.size(); ++b) {
          auto loc = d.locate(all[a] + all[b]);
          if (!loc) continue;
          CHECK((g.isCompactRoot(loc->first) ? 0 : 1) == (eps[a] + eps[b]) % 2);
        }
      CHECK(g.rho == g.rhoC + g.rhoN);
      CHECK(static_cast<int>(g.cosetReps.size()) * g.compact->order() == sys->order());
    }
  }
}

TEST_CASE("coset representatives") {
  auto sys = makeRootSystem("B2");
  auto full = fullSubsystem(sys);
  auto longA1A1 = makeSubsystem(sys, {0, 3});
  auto reps = cosetReps(*full, *longA1A1);
  CHECK(reps.size() == 2);
  int brute = 0;
  for (int w = 0; w < sys->order(); ++w)
    if (longA1A1->isDominant(sys->apply(w, full->rho))) ++brute;
  CHECK(brute == 2);
  auto torus = makeSubsystem(sys, {});
  CHECK(cosetReps(*full, *torus).size() == 8);
  auto a2 = makeRootSystem("A2");
  CHECK(cosetReps(*fullSubsystem(a2), *fullSubsystem(a2)) == std::vector<int>{0});
  CHECK_THROWS_AS(cosetReps(*longA1A1, *full), InputError);
  auto shortA1A1 = makeSubsystem(sys, {1, 2});
  CHECK(shortA1A1->order() == 4);
  CHECK_THROWS_AS(makeSubsystem(sys, {0, 1}), InputError);
}

TEST_CASE("G2 long-short A1xA1") {
  auto sys = makeRootSystem("G2");
  const auto& d = sys->datum();
  int idx = -1;
  for (int i = 0; i < 6; ++i)
    if (d.positiveRoots[i].simpleCoeffs == std::vector<int>{3, 2}) idx = i;
  REQUIRE(idx >= 0);
  auto sub = makeSubsystem(sys, {0, idx});
  CHECK(sub->order() == 4);
  CHECK(sub->simple.size() == 2);
  CHECK(cosetReps(*fullSubsystem(sys), *sub).size() == 3);
}

TEST_CASE("dominant conjugate") {
  auto a1 = makeRootSystem("A1");
  auto [w1, e1] = dominantConjugate(Weight{-3}, *fullSubsystem(a1));
  CHECK(w1 == Weight{3});
  CHECK(e1 == a1->simpleReflection(0));
  auto [w0, e0] = dominantConjugate(Weight{2}, *fullSubsystem(a1));
  CHECK(w0 == Weight{2});
  CHECK(e0 == 0);

  auto b2 = makeRootSystem("B2");
  auto full = fullSubsystem(b2);
  for (int x = -5; x <= 5; ++x)
    for (int y = -5; y <= 5; ++y) {
      Weight lam{x, y};
      auto [dom, w] = dominantConjugate(lam, *full);
      CHECK(b2->apply(w, lam) == dom);
      int found = 0;
      int minLen = 100;
      for (int v = 0; v < b2->order(); ++v) {
        Weight img = b2->apply(v, lam);
        if (full->isDominant(img)) {
          CHECK(img == dom);
          ++found;
          minLen = std::min(minLen, b2->elem(v).length);
        }
      }
      CHECK(found >= 1);
      CHECK(b2->elem(w).length == minLen);
    }
}
