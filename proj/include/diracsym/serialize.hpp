#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "diracsym/charring.hpp"
#include "diracsym/dirac.hpp"
#include "diracsym/kl.hpp"
#include "diracsym/rootsys.hpp"

namespace diracsym::io {

using nlohmann::json;

json toJson(const Weight& w);
json toJson(const Rational& r);  // "p/q"
json toJson(const charring::FormalChar& f);     // [{"weight", "coeff"}] sorted by weight
json toJson(const charring::VirtualModule& v);  // [{"weight", "multiplicity"}]
json toJson(const dirac::DiracCohomology& h);   // {"plus", "minus"}
json toJson(const kl::Poly& p);

Weight weightFromJson(const json& j);

/// A datum file: {"type": str, "grading": [bits], "subsystems": {name: [root indices]}}.
struct DatumFile {
  std::string type;
  std::vector<int> grading;
  std::map<std::string, std::vector<int>> subsystems;
};

DatumFile datumFromJson(const json& j);
DatumFile readDatumFile(const std::string& path);
json toJson(const DatumFile& d);

/// Summary of a built datum: roots, rho's, q and Weyl group orders.
json describe(const rootsys::GroupDatum& g);

/// Parses "2,-4" style integer lists; throws InputError on junk.
std::vector<int> parseIntList(const std::string& text);

}  // namespace diracsym::io
