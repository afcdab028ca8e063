#include "diracsym/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "diracsym/dirac.hpp"
#include "diracsym/elliptic.hpp"
#include "diracsym/endoscopy.hpp"
#include "diracsym/kl.hpp"
#include "diracsym/spin.hpp"
#include "diracsym/sweep.hpp"

namespace diracsym::verify {

using charring::FormalChar;
using charring::VirtualModule;
using io::json;
using io::toJson;
using rootsys::GroupDatum;

namespace {

struct Counterexample {
  json detail;
};

// Tracks the datum and parameters under test so that failures, including
// InternalError from deep inside the library, come with their inputs.
class Runner {
 public:
  explicit Runner(Result& r) : r_(r) {}

  void at(const GroupDatum& g) {
    context_ = {{"type", g.label()}, {"grading", g.grading.bits}};
  }
  void set(const std::string& key, json value) { context_[key] = std::move(value); }
  void unset(const std::string& key) { context_.erase(key); }

  void expect(bool ok, const std::function<json()>& detail = {}) {
    ++r_.checks;
    if (ok) return;
    json d = context_;
    if (detail)
      for (const auto& [k, v] : detail().items()) d[k] = v;
    throw Counterexample{d};
  }

  const json& context() const { return context_; }

 private:
  Result& r_;
  json context_ = json::object();
};

std::vector<std::vector<int>> subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (int m = 0; m < (1 << rank); ++m) {
    std::vector<int> s;
    for (int i = 0; i < rank; ++i)
      if (m >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

std::vector<std::vector<int>> definingElements(int rank) {
  std::vector<std::vector<int>> out;
  for (int m = 0; m < (1 << rank); ++m) {
    std::vector<int> h(rank);
    for (int i = 0; i < rank; ++i) h[i] = (m >> i) & 1;
    out.push_back(h);
  }
  return out;
}

std::vector<Weight> admissible(const dirac::ThetaStableParabolic& q, int rank, int height) {
  std::vector<Weight> out;
  for (const auto& w : sweep::dominantWindow(rank, height)) {
    bool ok = true;
    for (int i = 0; i < rank; ++i)
      if (q.defining[i] == 0 && w[i] != 0) ok = false;
    if (ok) out.push_back(w);
  }
  return out;
}

FormalChar characterOf(const VirtualModule& v, const rootsys::SubsystemDatum& sub) {
  FormalChar f;
  for (const auto& [mu, c] : v.entries) f += c * charring::weylCharacter(sub, mu);
  return f;
}

FormalChar signedCharacter(const dirac::DiracCohomology& h, const rootsys::SubsystemDatum& sub) {
  return characterOf(h.plus, sub) - characterOf(h.minus, sub);
}

using Suite = std::function<void(Runner&, const std::vector<GroupDatum>&, int)>;

void kostantIndex(Runner& run, const std::vector<GroupDatum>& forms, int bound) {
  for (const auto& g : forms) {
    run.at(g);
    FormalChar spinDiff = spin::spinCharacterDifference(*g.full, *g.compact);
    for (const auto& lam : sweep::dominantWindow(g.rank(), bound)) {
      run.set("lambda", toJson(lam));
      FormalChar lhs = charring::weylCharacter(*g.full, lam) * spinDiff;
      FormalChar rhs = signedCharacter(dirac::hdFiniteDim(g, lam), *g.compact);
      run.expect(lhs == rhs, [&] { return json{{"lhs", toJson(lhs)}, {"rhs", toJson(rhs)}}; });
      FormalChar idx = dirac::diracIndex(g, dirac::FiniteDimSource{lam});
      run.expect(idx == rhs, [&] { return json{{"index", toJson(idx)}, {"rhs", toJson(rhs)}}; });
    }
  }
}

void spinHdTrivial(Runner& run, const std::vector<GroupDatum>& forms, int) {
  for (const auto& g : forms) {
    run.at(g);
    auto s = spin::spinModuleKTypes(g);
    auto h = dirac::hdFiniteDim(g, Weight::zero(g.rank()));
    run.expect(s.plus == h.plus && s.minus == h.minus, [&] {
      return json{{"spin", {{"plus", toJson(s.plus)}, {"minus", toJson(s.minus)}}}, {"hd", toJson(h)}};
    });
    run.expect(s.ktypes == h.total());
  }
}

void inflChar(Runner& run, const std::vector<GroupDatum>& forms, int bound) {
  for (const auto& g : forms) {
    run.at(g);
    const auto& sys = *g.system;
    auto inspect = [&](const dirac::DiracCohomology& h, const Weight& infl) {
      for (const auto& [mu, c] : h.total().entries) {
        run.set("ktype", toJson(mu));
        run.expect(dirac::inWeylOrbit(sys, infl, mu + g.rhoC),
                   [&] { return json{{"infinitesimalCharacter", toJson(infl)}}; });
        auto di = dirac::diracInequalityHolds(g, infl, mu + g.rhoN);
        run.expect(di.holds && di.equality, [&] {
          return json{{"lhs", toJson(di.lhs)}, {"rhs", toJson(di.rhs)}, {"shifted", toJson(di.shifted)}};
        });
      }
      run.unset("ktype");
    };
    run.set("module", "finite-dimensional");
    for (const auto& lam : sweep::dominantWindow(g.rank(), bound)) {
      run.set("lambda", toJson(lam));
      inspect(dirac::hdFiniteDim(g, lam), lam + g.rho);
    }
    run.set("module", "discrete series");
    for (const auto& lam : sweep::parameterWindow(g, bound)) {
      run.set("lambda", toJson(lam));
      inspect(dirac::hdDiscreteSeries(g, lam), lam);
    }
    run.set("module", "A_q(lambda)");
    for (const auto& hvec : definingElements(g.rank())) {
      auto q = dirac::makeParabolic(g, hvec);
      run.set("defining", hvec);
      for (const auto& lam : admissible(q, g.rank(), std::min(bound, 2))) {
        run.set("lambda", toJson(lam));
        inspect(dirac::hdAq(g, q, lam).hd, lam + g.rho);
      }
    }
    run.unset("defining");
  }
}

void gramOrthonormal(Runner& run, const std::vector<GroupDatum>& forms, int bound) {
  for (const auto& g : forms) {
    run.at(g);
    auto params = sweep::parameterWindow(g, bound);
    std::vector<elliptic::SupertemperedNumerator> nums;
    for (const auto& p : params) nums.push_back(elliptic::supertemperedNumerator(g, p));
    for (std::size_t i = 0; i < params.size(); ++i)
      for (std::size_t j = 0; j < params.size(); ++j) {
        run.set("lambda", toJson(params[i]));
        run.set("lambdaPrime", toJson(params[j]));
        auto r = elliptic::ellipticPairing(g, nums[i], nums[j]);
        run.expect(r.value == Rational(i == j ? 1 : 0), [&] { return json{{"value", toJson(r.value)}}; });
        for (int w : g.compact->weyl) {
          Weight moved = g.system->apply(w, params[i]);
          run.set("lambda", toJson(moved));
          auto t = elliptic::indexPairingCheck(g, moved, params[j]);
          Rational expected(i == j ? g.system->elem(w).sign : 0);
          run.expect(t.value == expected, [&] { return json{{"value", toJson(t.value)}}; });
        }
      }
  }
}

void pseudoCoeff(Runner& run, const std::vector<GroupDatum>& forms, int bound) {
  for (const auto& g : forms) {
    run.at(g);
    auto params = sweep::parameterWindow(g, bound);
    for (const auto& a : params)
      for (const auto& b : params) {
        run.set("target", toJson(a));
        run.set("source", toJson(b));
        Rational t = elliptic::pseudoCoefficientTrace(g, elliptic::DiscreteSeriesTarget{a}, b);
        run.expect(t == Rational(a == b ? 1 : 0), [&] { return json{{"trace", toJson(t)}}; });
      }
  }
}

void transferDual(Runner& run, const std::vector<GroupDatum>& forms, int) {
  for (const auto& g : forms) {
    run.at(g);
    FormalChar numG = charring::weylNumerator(*g.full, g.rho);
    for (const auto& h : sweep::closedSubsystems(g)) {
      run.set("sub", h->roots);
      auto t = endoscopy::transferFactorSpin(g, h);
      run.expect(t.signExponent == g.q - h->q);
      FormalChar lifted = t.factor * charring::weylNumerator(*h, h->rho);
      run.expect(lifted == numG, [&] { return json{{"factorTimesSubNumerator", toJson(lifted)}}; });
      if ((g.rho - h->rho).isIntegral()) {
        FormalChar q = endoscopy::transferFactorQuotient(g, h);
        run.expect(q == t.factor, [&] { return json{{"spin", toJson(t.factor)}, {"quotient", toJson(q)}}; });
      } else {
        bool rejected = false;
        try {
          endoscopy::transferFactorQuotient(g, h);
        } catch (const InputError&) {
          rejected = true;
        }
        run.expect(rejected, [] { return json{{"reason", "non-integral rho - rho_H was accepted"}}; });
      }
    }
  }
}

void transferFindim(Runner& run, const std::vector<GroupDatum>& forms, int bound) {
  for (const auto& g : forms) {
    run.at(g);
    for (const auto& h : sweep::closedSubsystems(g)) {
      if (!(g.rho - h->rho).isIntegral()) continue;
      run.set("sub", h->roots);
      FormalChar factor = endoscopy::transferFactorSpin(g, h).factor;
      for (const auto& lam : sweep::dominantWindow(g.rank(), bound)) {
        run.set("lambda", toJson(lam));
        auto v = endoscopy::transferFiniteDim(g, h, lam);
        FormalChar lhs = factor * charring::weylCharacter(*g.full, lam);
        FormalChar rhs = characterOf(v, *h);
        run.expect(lhs == rhs, [&] { return json{{"types", toJson(v)}}; });
      }
    }
  }
}

void transferDs(Runner& run, const std::vector<GroupDatum>& forms, int bound) {
  for (const auto& g : forms) {
    run.at(g);
    for (const auto& h : sweep::closedSubsystems(g)) {
      run.set("sub", h->roots);
      auto hk = rootsys::intersect(*h, *g.compact, g.grading);
      for (const auto& lam : sweep::parameterWindow(g, bound)) {
        run.set("lambda", toJson(lam));
        auto terms = endoscopy::transferDiscreteSeriesIndex(g, h, lam);
        FormalChar summed;
        for (const auto& t : terms) summed += t.sign * charring::weylNumerator(*hk, t.lambda);
        run.expect(summed == charring::weylNumerator(*g.compact, lam));
        run.expect(static_cast<long long>(terms.size()) * hk->order() == g.compact->order());
      }
    }
  }
}

void klCore(Runner& run, const std::vector<GroupDatum>& forms, int bound) {
  std::set<std::string> seen;
  for (const auto& g : forms) {
    if (!seen.insert(g.label()).second) continue;
    run.at(g);
    auto sys = g.system;
    kl::KLTable table(sys);
    const int n = sys->order();
    for (int x = 0; x < n; ++x)
      for (int w = 0; w < n; ++w) {
        const auto& p = table.P(x, w);
        if (!table.leq(x, w)) {
          run.expect(p.empty());
          continue;
        }
        run.set("x", sys->elem(x).word);
        run.set("w", sys->elem(w).word);
        run.expect(!p.empty() && p[0] == 1, [&] { return json{{"poly", p}}; });
        run.expect(std::all_of(p.begin(), p.end(), [](long long c) { return c >= 0; }));
        if (x != w)
          run.expect(kl::polyDegree(p) <= (sys->elem(w).length - sys->elem(x).length - 1) / 2,
                     [&] { return json{{"poly", p}}; });
        else
          run.expect(p == kl::Poly{1});
        if (g.label() == "A2") run.expect(p == kl::Poly{1}, [&] { return json{{"poly", p}}; });
      }
    run.unset("x");
    run.unset("w");

    auto full = rootsys::fullSubsystem(sys);
    const auto& d = sys->datum();
    int height = sys->rank() >= 3 ? std::min(bound, 2) : bound;
    for (const auto& I : subsets(sys->rank())) {
      run.set("levi", I);
      auto levi = rootsys::leviSubsystem(sys, I);
      Weight rhoU = full->rho - levi->rho;
      for (const auto& lam : sweep::dominantWindow(sys->rank(), height)) {
        run.set("lambda", toJson(lam));
        auto r = kl::hdHighestWeight(table, I, lam);
        auto k = dirac::kostant(full, levi, lam);
        run.expect(r.plus == k.plus && r.minus == k.minus, [&] {
          return json{{"highestWeight", {{"plus", toJson(r.plus)}, {"minus", toJson(r.minus)}}},
                      {"kostant", toJson(k)}};
        });
        FormalChar ec = kl::uHomologyEulerChar(sys, I, lam);
        run.expect(ec.shifted(rhoU) == k.index(), [&] { return json{{"euler", toJson(ec)}}; });
        FormalChar wedge = charring::weylCharacter(*full, lam);
        int nu = 0;
        for (int b = 0; b < static_cast<int>(d.positiveRoots.size()); ++b) {
          if (levi->contains(b)) continue;
          ++nu;
          wedge = wedge * (FormalChar::monomial(Weight::zero(d.rank)) - FormalChar::monomial(d.positiveRoots[b].weight));
        }
        run.expect((nu % 2 ? -1 : 1) * wedge.shifted(-rhoU) == k.index());
      }
    }
    run.unset("levi");
    run.unset("lambda");
  }
}

void stages(Runner& run, const std::vector<GroupDatum>& forms, int bound) {
  for (const auto& g : forms) {
    run.at(g);
    for (const auto& lam : sweep::parameterWindow(g, bound)) {
      run.set("lambda", toJson(lam));
      FormalChar staged = dirac::hdInStages(g, lam);
      FormalChar orbitSum;
      for (int w : g.compact->weyl) orbitSum.add(g.system->apply(w, lam), 1);
      run.expect(staged == orbitSum, [&] { return json{{"stages", toJson(staged)}, {"expected", toJson(orbitSum)}}; });
    }
  }
}

void gkDim(Runner& run, const std::vector<GroupDatum>& forms, int bound) {
  for (const auto& g : forms) {
    run.at(g);
    for (const auto& hvec : definingElements(g.rank())) {
      auto q = dirac::makeParabolic(g, hvec);
      run.set("defining", hvec);
      for (const auto& lam : admissible(q, g.rank(), bound)) {
        run.set("lambda", toJson(lam));
        auto r = dirac::gkCohomologyDim(g, q, lam, lam);
        run.expect(r.infinitesimalCharacterMatches && r.dim == r.expected &&
                       r.expected * q.leviCompact->order() == q.levi->order(),
                   [&] { return json{{"dim", r.dim}, {"expected", r.expected}}; });
      }
    }
  }
}

void parity(Runner& run, const std::vector<GroupDatum>& forms, int bound) {
  std::set<std::string> seen;
  for (const auto& g : forms) {
    run.at(g);
    auto check = [&](const dirac::DiracCohomology& h) {
      run.expect(dirac::parityCheck(h), [&] { return json{{"hd", toJson(h)}}; });
    };
    run.set("module", "finite-dimensional");
    for (const auto& lam : sweep::dominantWindow(g.rank(), bound)) {
      run.set("lambda", toJson(lam));
      check(dirac::hdFiniteDim(g, lam));
    }
    run.set("module", "discrete series");
    for (const auto& lam : sweep::parameterWindow(g, bound)) {
      run.set("lambda", toJson(lam));
      check(dirac::hdDiscreteSeries(g, lam));
    }
    run.set("module", "A_q(lambda)");
    for (const auto& hvec : definingElements(g.rank())) {
      auto q = dirac::makeParabolic(g, hvec);
      for (const auto& lam : admissible(q, g.rank(), std::min(bound, 2))) {
        run.set("lambda", toJson(lam));
        check(dirac::hdAq(g, q, lam).hd);
      }
    }
    if (seen.insert(g.label()).second && g.rank() <= 2) {
      run.set("module", "highest weight");
      kl::KLTable table(g.system);
      auto full = rootsys::fullSubsystem(g.system);
      for (const auto& I : subsets(g.rank())) {
        for (const auto& lam : sweep::dominantWindow(g.rank(), std::min(bound, 3))) {
          Weight anti = -(lam + 2 * full->rho);
          for (const Weight& mu : {lam, anti}) {
            bool ok = true;
            for (int i : I)
              if (mu[i] < 0) ok = false;
            if (!ok) continue;
            run.set("lambda", toJson(mu));
            auto r = kl::hdHighestWeight(table, I, mu);
            check(dirac::DiracCohomology{r.plus, r.minus});
          }
        }
      }
    }
    // a singular-style input with one type in both parities must be flagged
    run.set("module", "negative control");
    run.unset("lambda");
    dirac::DiracCohomology bad;
    bad.plus.sub = bad.minus.sub = g.compact;
    bad.plus.add(g.rho - g.rhoC, 1);
    bad.minus.add(g.rho - g.rhoC, 1);
    run.expect(!dirac::parityCheck(bad));
  }
}

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> r = {
      {"kostant-index", kostantIndex}, {"spin-hd-trivial", spinHdTrivial}, {"infl-char", inflChar},
      {"gram-orthonormal", gramOrthonormal}, {"pseudo-coeff", pseudoCoeff}, {"transfer-dual", transferDual},
      {"transfer-findim", transferFindim}, {"transfer-ds", transferDs}, {"kl-core", klCore},
      {"stages", stages}, {"gk-dim", gkDim}, {"parity", parity}};
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> s = {
      {"kostant-index", 1, {"A1", "A2", "B2", "G2"}, 4, "ch V (ch S+ - ch S-) equals the signed Kostant K-types"},
      {"spin-hd-trivial", 2, {"A1", "A2", "A3", "B2", "C2", "G2", "A1xA1"}, 0, "spin K-types equal H_D of the trivial module"},
      {"infl-char", 3, {"A1", "A2", "B2", "G2"}, 4, "H_D types lie in the W-orbit of the infinitesimal character, with Dirac equality"},
      {"gram-orthonormal", 4, {"A1", "A2", "B2", "G2"}, 4, "elliptic Gram matrix of discrete series is the identity"},
      {"pseudo-coeff", 5, {"A1", "A2", "B2", "G2"}, 4, "pseudo-coefficient traces are a Kronecker delta"},
      {"transfer-dual", 6, {"A1", "A2", "B2", "C2", "G2", "A3"}, 0, "spin and quotient transfer factors agree"},
      {"transfer-findim", 7, {"A1", "A2", "B2", "G2"}, 5, "finite-dimensional transfer identity"},
      {"transfer-ds", 7, {"A1", "A2", "B2", "G2"}, 4, "discrete series transfer identity"},
      {"kl-core", 8, {"A1", "A2", "B2", "A3"}, 4, "KL table properties, highest weight H_D and the Euler identity"},
      {"stages", 9, {"A1", "A2", "B2", "G2"}, 4, "H_D in stages is the W_K-orbit sum"},
      {"gk-dim", 10, {"A2", "B2"}, 2, "(g,K)-cohomology of A_q(lambda) has dimension |W(l)/W(l cap k)|"},
      {"parity", 11, {"A1", "A2", "B2", "G2"}, 4, "H_D is concentrated in one parity per type"},
  };
  return s;
}

const SuiteInfo& suiteInfo(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return s;
  std::string known;
  for (const auto& s : suites()) known += (known.empty() ? "" : ", ") + s.name;
  throw InputError("unknown suite \"" + name + "\"; known suites: " + known);
}

json Result::toJson() const {
  json j = {{"suite", suite}, {"ok", ok}, {"checks", checks}};
  if (!ok) j["counterexample"] = counterexample;
  return j;
}

Result run(const std::string& name, const Options& options) {
  const SuiteInfo& info = suiteInfo(name);
  if (options.grading && !options.type) throw InputError("--grading needs --type");
  if (options.bound && *options.bound < 0) throw InputError("bound must be nonnegative");
  int bound = options.bound.value_or(info.bound);

  std::vector<GroupDatum> forms;
  if (options.type) {
    if (options.grading)
      forms.push_back(rootsys::buildGroupDatum(*options.type, *options.grading));
    else
      forms = sweep::allForms(*options.type);
  } else {
    for (const auto& t : info.types)
      for (auto& g : sweep::allForms(t)) forms.push_back(std::move(g));
  }

  Result result;
  result.suite = name;
  Runner runner(result);
  try {
    registry().at(name)(runner, forms, bound);
  } catch (const Counterexample& c) {
    result.ok = false;
    result.counterexample = c.detail;
  } catch (const InternalError& e) {
    result.ok = false;
    result.counterexample = runner.context();
    result.counterexample["internalError"] = e.what();
  }
  return result;
}

}  // namespace diracsym::verify
