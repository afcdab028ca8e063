#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diracsym/elliptic.hpp"
#include "diracsym/sweep.hpp"
#include "support.hpp"

using namespace diracsym;
using namespace diracsym::elliptic;

namespace {

FormalChar e(std::initializer_list<int> w, long long c = 1) { return FormalChar::monomial(Weight(w), c); }

// K-types n*alpha/2 (|n| <= N, fixed parity) tensored with S+ - S-.
FormalChar truncatedPrincipalSeries(int n, int parity) {
  FormalChar f;
  for (int k = -n; k <= n; ++k) {
    if (((k % 2) + 2) % 2 != parity) continue;
    f.add(Weight{2 * k + 2}, 1);
    f.add(Weight{2 * k - 2}, -1);
  }
  return f;
}

}  // namespace

TEST_CASE("supertempered numerators of SL(2,R)") {
  auto g = rootsys::buildGroupDatum("A1", {1});
  auto a = supertemperedNumerator(g, Weight{2});
  CHECK(a.numerator == e({2}));
  CHECK(a.signExponent == 1);
  CHECK(ellipticPairing(g, a, a).value == Rational(1));
  CHECK(ellipticPairing(g, a, supertemperedNumerator(g, Weight{4})).value == Rational(0));
  CHECK(ellipticPairing(g, a, supertemperedNumerator(g, Weight{-2})).value == Rational(0));
  CHECK_THROWS_AS(supertemperedNumerator(g, Weight{1}), InputError);

  auto compact = rootsys::buildGroupDatum("A1", {0});
  auto c = supertemperedNumerator(compact, Weight{2});
  CHECK(c.numerator == e({2}) - e({-2}));
  CHECK(ellipticPairing(compact, c, c).value == Rational(1));
  CHECK_THROWS_AS(ellipticPairing(g, a, c), InputError);
}

TEST_CASE("numerators are skew under W_K") {
  for (std::string type : {"A2", "B2", "G2"})
    for (const auto& g : sweep::allForms(type)) {
      auto n = supertemperedNumerator(g, g.rho);
      CHECK(static_cast<int>(n.numerator.size()) == g.compact->order());
      CHECK(ellipticPairing(g, n, n).value == Rational(1));
      CHECK(ellipticPairing(g, n, n).note.find(std::to_string(g.compact->order())) != std::string::npos);
      for (const auto& mu : sweep::dominantWindow(g.rank(), 3))
        for (int w : g.compact->weyl) {
          auto moved = supertemperedNumerator(g, g.system->apply(w, mu));
          CHECK(moved.numerator == g.system->elem(w).sign * supertemperedNumerator(g, mu).numerator);
        }
      // a weight fixed by a compact reflection has vanishing numerator
      for (int r : g.compact->roots) {
        Weight fixed = g.rho + g.system->apply(g.system->reflection(r), g.rho);
        CHECK(supertemperedNumerator(g, fixed).numerator.isZero());
      }
    }
}

TEST_CASE("elliptic Gram matrix of discrete series is the identity") {
  for (std::string type : {"A1", "A2", "B2", "G2", "A1xA1"}) {
    for (const auto& g : sweep::allForms(type)) {
      auto params = sweep::parameterWindow(g, type == "G2" ? 8 : 6);
      REQUIRE_FALSE(params.empty());
      for (std::size_t i = 0; i < params.size(); ++i)
        for (std::size_t j = 0; j < params.size(); ++j) {
          auto r = ellipticPairing(g, supertemperedNumerator(g, params[i]), supertemperedNumerator(g, params[j]));
          CHECK(r.value == Rational(i == j ? 1 : 0));
          CHECK(r.weylOrder == g.compact->order());
        }
    }
  }
}

TEST_CASE("elliptic pairing agrees with the pairing of Dirac indices") {
  for (std::string type : {"A1", "A2", "B2", "G2"}) {
    for (const auto& g : sweep::allForms(type)) {
      auto params = sweep::parameterWindow(g, 6);
      std::vector<Weight> moved;
      for (const auto& p : params)
        for (int w : g.compact->weyl) moved.push_back(g.system->apply(w, p));
      for (const auto& a : moved)
        for (const auto& b : params) {
          auto r = indexPairingCheck(g, a, b);
          auto pa = dirac::normalizeParameter(g, a);
          CHECK(r.value == Rational(pa.lambda == b ? pa.orientation : 0));
        }
    }
  }
}

TEST_CASE("ellipticity via the Dirac index") {
  auto g = rootsys::buildGroupDatum("A1", {1});
  CHECK(isElliptic(dirac::diracIndex(g, dirac::DiscreteSeriesSource{Weight{4}})));
  CHECK(isElliptic(dirac::diracIndex(g, dirac::FiniteDimSource{Weight{0}})));
  for (int parity : {0, 1}) {
    FormalChar closed = sl2PrincipalSeriesIndex(parity);
    CHECK_FALSE(isElliptic(closed));
    // truncations telescope to boundary terms that leave every fixed window
    for (int window = 0; window <= 10; ++window)
      for (int n = window + 2; n <= window + 12; ++n) {
        FormalChar t = truncatedPrincipalSeries(n, parity);
        for (int k = -window; k <= window; ++k) CHECK(t.coeff(Weight{2 * k}) == closed.coeff(Weight{2 * k}));
      }
  }
  CHECK_THROWS_AS(sl2PrincipalSeriesIndex(2), InputError);

  for (std::string type : {"A2", "B2"})
    for (const auto& h : sweep::allForms(type))
      for (const auto& p : sweep::parameterWindow(h, 4))
        CHECK(isElliptic(dirac::diracIndex(h, dirac::DiscreteSeriesSource{p})));
}

TEST_CASE("pseudo-coefficient traces") {
  auto g = rootsys::buildGroupDatum("A1", {1});
  CHECK(pseudoCoefficientTrace(g, FiniteDimTarget{Weight{0}}, Weight{2}) == Rational(1));
  CHECK(pseudoCoefficientTrace(g, FiniteDimTarget{Weight{0}}, Weight{-2}) == Rational(1));
  CHECK(pseudoCoefficientTrace(g, FiniteDimTarget{Weight{0}}, Weight{4}) == Rational(0));
  CHECK(pseudoCoefficientTrace(g, FiniteDimTarget{Weight{2}}, Weight{4}) == Rational(1));

  for (std::string type : {"A1", "A2", "B2", "G2"})
    for (const auto& h : sweep::allForms(type)) {
      auto params = sweep::parameterWindow(h, 6);
      for (const auto& a : params)
        for (const auto& b : params)
          CHECK(pseudoCoefficientTrace(h, DiscreteSeriesTarget{a}, b) == Rational(a == b ? 1 : 0));
      // a finite-dimensional module is seen by the pseudo-coefficients of the
      // discrete series sharing its infinitesimal character
      for (const auto& lam : sweep::dominantWindow(h.rank(), 2)) {
        int seen = 0;
        for (int w : h.cosetReps) {
          Weight p = h.system->apply(w, lam + h.rho);
          if (pseudoCoefficientTrace(h, FiniteDimTarget{lam}, p) == Rational(1)) ++seen;
        }
        CHECK(seen == static_cast<int>(h.cosetReps.size()));
      }
    }
}
