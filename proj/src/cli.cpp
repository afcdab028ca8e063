#include "diracsym/cli.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

#include <CLI11.hpp>

#include "diracsym/dirac.hpp"
#include "diracsym/elliptic.hpp"
#include "diracsym/endoscopy.hpp"
#include "diracsym/kl.hpp"
#include "diracsym/serialize.hpp"
#include "diracsym/verify.hpp"

namespace diracsym::cli {

using io::json;
using io::toJson;

namespace {

struct Datum {
  io::DatumFile file;
  rootsys::GroupDatum group;
};

Datum loadDatum(const CliConfig& c) {
  Datum d;
  if (!c.datumPath.empty()) {
    d.file = io::readDatumFile(c.datumPath);
  } else if (!c.type.empty()) {
    d.file.type = c.type;
    d.file.grading = io::parseIntList(c.grading);
  } else {
    throw InputError("give --datum FILE or --type TYPE");
  }
  d.group = rootsys::buildGroupDatum(d.file.type, d.file.grading);
  return d;
}

Weight weightArg(const std::string& text, const char* name, int rank) {
  if (text.empty()) throw InputError(std::string("missing --") + name);
  Weight w(io::parseIntList(text));
  if (w.rank() != rank)
    throw InputError(std::string("--") + name + " has " + std::to_string(w.rank()) + " entries, rank is " +
                     std::to_string(rank));
  return w;
}

rootsys::SubsystemPtr subArg(const CliConfig& c, const Datum& d) {
  if (!c.subRoots.empty()) return endoscopy::endoscopicSubsystem(d.group, io::parseIntList(c.subRoots));
  if (c.sub.empty()) throw InputError("give --sub NAME (from the datum file) or --sub-roots LIST");
  auto it = d.file.subsystems.find(c.sub);
  if (it == d.file.subsystems.end()) throw InputError("datum file has no subsystem named " + c.sub);
  return endoscopy::endoscopicSubsystem(d.group, it->second);
}

json subJson(const rootsys::SubsystemPtr& h) {
  return {{"roots", h->roots}, {"simple", h->simple}, {"rho", toJson(h->rho)}, {"q", h->q}, {"weylOrder", h->order()}};
}

json datumCommand(const CliConfig& c) {
  Datum d = loadDatum(c);
  json j = io::describe(d.group);
  json subs = json::object();
  for (const auto& [name, roots] : d.file.subsystems) subs[name] = subJson(endoscopy::endoscopicSubsystem(d.group, roots));
  j["subsystems"] = subs;
  return j;
}

json hdCommand(const CliConfig& c) {
  Datum d = loadDatum(c);
  const auto& g = d.group;
  if (c.mode == "findim") return toJson(dirac::hdFiniteDim(g, weightArg(c.lambda, "lambda", g.rank())));
  if (c.mode == "ds") return toJson(dirac::hdDiscreteSeries(g, weightArg(c.lambda, "lambda", g.rank())));
  if (c.mode == "aq") {
    auto q = dirac::makeParabolic(g, io::parseIntList(c.defining));
    auto r = dirac::hdAq(g, q, weightArg(c.lambda, "lambda", g.rank()));
    json j = toJson(r.hd);
    j["lowestKType"] = toJson(r.lowestKType);
    return j;
  }
  if (c.mode == "hw") {
    kl::KLTable table(g.system);
    auto r = kl::hdHighestWeight(table, io::parseIntList(c.levi), weightArg(c.lambda, "lambda", g.rank()));
    return {{"plus", toJson(r.plus)}, {"minus", toJson(r.minus)}, {"position", g.system->elem(r.w).word}};
  }
  throw InputError("unknown hd mode " + c.mode);
}

json indexCommand(const CliConfig& c) {
  Datum d = loadDatum(c);
  const auto& g = d.group;
  Weight lam = weightArg(c.lambda, "lambda", g.rank());
  dirac::IndexSource src;
  if (c.source == "findim")
    src = dirac::FiniteDimSource{lam};
  else if (c.source == "ds")
    src = dirac::DiscreteSeriesSource{lam};
  else if (c.source == "aq")
    src = dirac::AqSource{io::parseIntList(c.defining), lam};
  else
    throw InputError("--source must be findim, aq or ds");
  charring::FormalChar idx = dirac::diracIndex(g, src);
  return {{"index", toJson(idx)}, {"elliptic", elliptic::isElliptic(idx)}};
}

json reportJson(const elliptic::PairingReport& r) {
  return {{"value", toJson(r.value)}, {"left", r.left}, {"right", r.right}, {"note", r.note}};
}

json pairingCommand(const CliConfig& c) {
  Datum d = loadDatum(c);
  const auto& g = d.group;
  Weight a = weightArg(c.lambda, "lambda", g.rank());
  Weight b = weightArg(c.lambdaPrime, "lambda2", g.rank());
  if (c.mode == "ell")
    return reportJson(elliptic::ellipticPairing(g, elliptic::supertemperedNumerator(g, a),
                                                elliptic::supertemperedNumerator(g, b)));
  if (c.mode == "t81") return reportJson(elliptic::indexPairingCheck(g, a, b));
  throw InputError("unknown pairing mode " + c.mode);
}

json klCommand(const CliConfig& c) {
  Datum d = loadDatum(c);
  const auto& sys = *d.group.system;
  kl::KLTable table(d.group.system);
  using Key = std::tuple<int, int, std::vector<int>, std::vector<int>>;
  std::vector<std::pair<Key, json>> rows;
  auto emit = [&](int x, int w, const kl::Poly& p) {
    const auto &ex = sys.elem(x), &ew = sys.elem(w);
    rows.push_back({Key{ew.length, ex.length, ew.word, ex.word}, json{{"x", ex.word}, {"w", ew.word}, {"poly", p}}});
  };
  if (c.mode == "table") {
    for (int x = 0; x < sys.order(); ++x)
      for (int w = 0; w < sys.order(); ++w)
        if (table.leq(x, w)) emit(x, w, table.P(x, w));
  } else if (c.mode == "parabolic") {
    auto data = kl::makeParabolicData(sys, io::parseIntList(c.levi));
    auto t = kl::parabolicKLV(table, data);
    for (const auto& [k, p] : t.entries) emit(k.first, k.second, p);
  } else {
    throw InputError("unknown kl mode " + c.mode);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  json out = json::array();
  for (auto& [k, j] : rows) out.push_back(std::move(j));
  return out;
}

json transferCommand(const CliConfig& c) {
  Datum d = loadDatum(c);
  const auto& g = d.group;
  auto h = subArg(c, d);
  if (c.mode == "factor") {
    auto t = endoscopy::transferFactorSpin(g, h);
    json j = {{"sub", subJson(h)}, {"factor", toJson(t.factor)}, {"signExponent", t.signExponent}};
    try {
      j["quotient"] = toJson(endoscopy::transferFactorQuotient(g, h));
    } catch (const InputError& e) {
      j["quotient"] = nullptr;
      j["quotientUnavailable"] = e.what();
    }
    return j;
  }
  Weight lam = weightArg(c.lambda, "lambda", g.rank());
  if (c.mode == "findim") return {{"sub", subJson(h)}, {"types", toJson(endoscopy::transferFiniteDim(g, h, lam))}};
  if (c.mode == "ds") {
    json terms = json::array();
    for (const auto& t : endoscopy::transferDiscreteSeriesIndex(g, h, lam))
      terms.push_back({{"lambda", toJson(t.lambda)}, {"sign", t.sign}});
    return {{"sub", subJson(h)}, {"terms", terms}};
  }
  throw InputError("unknown transfer mode " + c.mode);
}

int verifyCommand(const CliConfig& c, std::ostream& out) {
  verify::Options o;
  if (!c.type.empty()) o.type = c.type;
  if (!c.grading.empty()) o.grading = io::parseIntList(c.grading);
  if (!c.datumPath.empty()) {
    auto f = io::readDatumFile(c.datumPath);
    o.type = f.type;
    o.grading = f.grading;
  }
  o.bound = c.bound;
  auto r = verify::run(c.suite, o);
  out << r.toJson().dump(2) << "\n";
  return r.ok ? 0 : 1;
}

void emitError(std::ostream& out, const std::string& message) { out << json{{"error", message}}.dump(2) << "\n"; }

}  // namespace

int run(const CliConfig& c, std::ostream& out) {
  try {
    if (c.bound && *c.bound < 0) throw InputError("--bound must be nonnegative");
    if (c.subcommand == "verify") return verifyCommand(c, out);
    json j;
    if (c.subcommand == "datum")
      j = datumCommand(c);
    else if (c.subcommand == "hd")
      j = hdCommand(c);
    else if (c.subcommand == "index")
      j = indexCommand(c);
    else if (c.subcommand == "pairing")
      j = pairingCommand(c);
    else if (c.subcommand == "kl")
      j = klCommand(c);
    else if (c.subcommand == "transfer")
      j = transferCommand(c);
    else
      throw InputError("unknown subcommand " + c.subcommand);
    out << j.dump(2) << "\n";
    return 0;
  } catch (const InputError& e) {
    emitError(out, e.what());
    return 2;
  } catch (const InternalError& e) {
    out << json{{"identityFailure", e.what()}}.dump(2) << "\n";
    return 1;
  }
}

int main(int argc, char** argv, std::ostream& out) {
  CliConfig c;
  CLI::App app{"Exact Dirac cohomology, elliptic pairings, KL polynomials and transfer over small root systems"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* s) {
    s->add_option("--datum", c.datumPath, "datum JSON file");
    s->add_option("--type", c.type, "Cartan type, e.g. A2, B2, G2, A1xA1");
    s->add_option("--grading", c.grading, "grading bits on simple roots, e.g. 1,0");
  };
  auto withLambda = [&](CLI::App* s) { s->add_option("--lambda", c.lambda, "weight in doubled coordinates, e.g. 2,-4"); };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* s = parent->add_subcommand(name, help);
    common(s);
    s->callback([&c, parent, name] {
      c.subcommand = parent->get_name();
      c.mode = name;
    });
    return s;
  };

  auto* datum = app.add_subcommand("datum", "describe a group datum");
  common(datum);
  datum->callback([&] { c.subcommand = "datum"; });

  auto* hd = app.add_subcommand("hd", "Dirac cohomology");
  hd->require_subcommand(1);
  withLambda(leaf(hd, "findim", "finite-dimensional module of highest weight lambda"));
  withLambda(leaf(hd, "ds", "discrete series with Harish-Chandra parameter lambda"));
  auto* aq = leaf(hd, "aq", "A_q(lambda)");
  withLambda(aq);
  aq->add_option("--defining", c.defining, "defining element, one entry per simple root")->required();
  auto* hw = leaf(hd, "hw", "simple highest weight module L(lambda) in O^q");
  withLambda(hw);
  hw->add_option("--levi", c.levi, "simple roots of the Levi, e.g. 0,2");

  auto* index = app.add_subcommand("index", "Dirac index");
  common(index);
  withLambda(index);
  index->add_option("--source", c.source, "findim, aq or ds")->required();
  index->add_option("--defining", c.defining, "defining element for aq");
  index->callback([&] { c.subcommand = "index"; });

  auto* pairing = app.add_subcommand("pairing", "elliptic pairings");
  pairing->require_subcommand(1);
  for (const char* m : {"ell", "t81"}) {
    auto* s = leaf(pairing, m, std::string(m) == "ell" ? "elliptic pairing of supertempered numerators"
                                                       : "elliptic pairing against the pairing of Dirac indices");
    withLambda(s);
    s->add_option("--lambda2", c.lambdaPrime, "second parameter");
  }

  auto* klc = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials");
  klc->require_subcommand(1);
  leaf(klc, "table", "full table");
  leaf(klc, "parabolic", "relative polynomials")->add_option("--levi", c.levi, "simple roots of the Levi");

  auto* transfer = app.add_subcommand("transfer", "endoscopic transfer");
  transfer->require_subcommand(1);
  for (const char* m : {"factor", "findim", "ds"}) {
    auto* s = leaf(transfer, m, std::string("transfer ") + m);
    s->add_option("--sub", c.sub, "subsystem name from the datum file");
    s->add_option("--sub-roots", c.subRoots, "positive-root indices of the subsystem");
    if (std::string(m) != "factor") withLambda(s);
  }

  auto* ver = app.add_subcommand("verify", "run an identity suite");
  common(ver);
  ver->add_option("--suite", c.suite, "suite name")->required();
  ver->add_option("--bound", c.bound, "height bound");
  ver->callback([&] { c.subcommand = "verify"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, out);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, out);
  } catch (const CLI::ParseError& e) {
    emitError(out, e.what());
    return 2;
  }
  return run(c, out);
}

}  // namespace diracsym::cli
