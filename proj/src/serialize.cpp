#include "diracsym/serialize.hpp"

#include <charconv>
#include <fstream>

namespace diracsym::io {

json toJson(const Weight& w) { return json(w.coords); }

json toJson(const Rational& r) { return toText(r); }

json toJson(const charring::FormalChar& f) {
  json out = json::array();
  for (const auto& [w, c] : f.terms()) out.push_back({{"weight", toJson(w)}, {"coeff", c}});
  return out;
}

json toJson(const charring::VirtualModule& v) {
  json out = json::array();
  for (const auto& [w, c] : v.entries) out.push_back({{"weight", toJson(w)}, {"multiplicity", c}});
  return out;
}

json toJson(const dirac::DiracCohomology& h) { return {{"plus", toJson(h.plus)}, {"minus", toJson(h.minus)}}; }

json toJson(const kl::Poly& p) { return json(p); }

Weight weightFromJson(const json& j) {
  if (!j.is_array()) throw InputError("weight must be an integer array");
  Weight w;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("weight entries must be integers");
    w.coords.push_back(x.get<int>());
  }
  return w;
}

DatumFile datumFromJson(const json& j) {
  if (!j.is_object()) throw InputError("datum must be a JSON object");
  if (!j.contains("type") || !j["type"].is_string()) throw InputError("datum needs a string \"type\"");
  DatumFile d;
  d.type = j["type"].get<std::string>();
  if (j.contains("grading")) {
    if (!j["grading"].is_array()) throw InputError("\"grading\" must be an array");
    for (const auto& b : j["grading"]) {
      if (!b.is_number_integer()) throw InputError("grading entries must be 0 or 1");
      d.grading.push_back(b.get<int>());
    }
  }
  if (j.contains("subsystems")) {
    if (!j["subsystems"].is_object()) throw InputError("\"subsystems\" must be an object");
    for (const auto& [name, roots] : j["subsystems"].items()) {
      if (!roots.is_array()) throw InputError("subsystem " + name + " must list root indices");
      std::vector<int> r;
      for (const auto& x : roots) {
        if (!x.is_number_integer()) throw InputError("subsystem " + name + " has a non-integer root index");
        r.push_back(x.get<int>());
      }
      d.subsystems[name] = r;
    }
  }
  return d;
}

DatumFile readDatumFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open datum file " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw InputError("datum file " + path + " is not valid JSON");
  return datumFromJson(j);
}

json toJson(const DatumFile& d) {
  json subs = json::object();
  for (const auto& [k, v] : d.subsystems) subs[k] = v;
  return {{"type", d.type}, {"grading", d.grading}, {"subsystems", subs}};
}

json describe(const rootsys::GroupDatum& g) {
  const auto& d = g.system->datum();
  json roots = json::array();
  for (int i = 0; i < static_cast<int>(d.positiveRoots.size()); ++i) {
    const auto& r = d.positiveRoots[i];
    roots.push_back({{"index", i},
                     {"weight", toJson(r.weight)},
                     {"simple", r.simpleCoeffs},
                     {"compact", g.isCompactRoot(i)}});
  }
  return {{"type", d.label},
          {"grading", g.grading.bits},
          {"rank", d.rank},
          {"positiveRoots", roots},
          {"rho", toJson(g.rho)},
          {"rhoC", toJson(g.rhoC)},
          {"rhoN", toJson(g.rhoN)},
          {"q", g.q},
          {"weylOrder", g.system->order()},
          {"compactWeylOrder", g.compact->order()},
          {"cosetReps", g.cosetReps.size()}};
}

std::vector<int> parseIntList(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const char* b = text.data() + start;
    const char* e = text.data() + end;
    while (b < e && *b == ' ') ++b;
    if (b < e && *b == '+') ++b;
    int v = 0;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e || b == e) throw InputError("expected a comma-separated integer list, got \"" + text + "\"");
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

}  // namespace diracsym::io
