#include "hecklab/io.hpp"

#include <fstream>

namespace hecklab {

CoxeterSystem systemFromJson(const nlohmann::json& j, int generalWordCap) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("exponents"))
    throw std::invalid_argument("system file: expected {generators, exponents}");
  std::vector<std::string> gens = j.at("generators").get<std::vector<std::string>>();
  std::vector<std::vector<int>> m = j.at("exponents").get<std::vector<std::vector<int>>>();
  return CoxeterSystem(std::move(gens), std::move(m), generalWordCap);
}

nlohmann::json systemToJson(const CoxeterSystem& sys) {
  nlohmann::json m = nlohmann::json::array();
  for (int s = 0; s < sys.rank(); ++s) {
    nlohmann::json row = nlohmann::json::array();
    for (int t = 0; t < sys.rank(); ++t) row.push_back(sys.exponent(s, t));
    m.push_back(row);
  }
  return {{"generators", sys.generatorLabels()}, {"exponents", m}};
}

CoxeterSystem loadSystem(const std::string& path, int generalWordCap) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open system file: " + path);
  nlohmann::json j;
  in >> j;
  return systemFromJson(j, generalWordCap);
}

std::string configHash(const std::string& canonical) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
  return buf;
}

}  // namespace hecklab
