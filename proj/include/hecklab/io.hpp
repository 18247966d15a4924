#pragma once

#include <string>

#include "json.hpp"

#include "hecklab/coxeter.hpp"
#include "hecklab/hecke.hpp"

namespace hecklab {

inline constexpr const char* kVersion = "0.1.0";

// System definition file:
//   { "generators": ["s","t",...], "exponents": [[1,2],[2,1],...] }
// with -1 encoding an infinite exponent.
CoxeterSystem systemFromJson(const nlohmann::json& j, int generalWordCap = 16);
nlohmann::json systemToJson(const CoxeterSystem& sys);
CoxeterSystem loadSystem(const std::string& path, int generalWordCap = 16);

// FNV-1a over the canonical config string; embedded in every report.
std::string configHash(const std::string& canonical);

template <class S>
nlohmann::json elementToJson(const HeckeElement<S>& x) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [w, c] : x.coeff) {
    std::string key = elementWordKey(*x.sys, w);
    if constexpr (std::is_same_v<S, RationalComplex>) {
      out[key] = c.str();
    } else {
      if (c.imag() == 0.0)
        out[key] = c.real();
      else
        out[key] = nlohmann::json::array({c.real(), c.imag()});
    }
  }
  return out;
}

}  // namespace hecklab
