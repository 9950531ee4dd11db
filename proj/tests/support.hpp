#pragma once

#include <memory>
#include <string>

#include "weylrep/rootsys.hpp"

namespace weylrep::testing {

inline std::shared_ptr<const RootSystem> make(const std::string& label) {
  return std::make_shared<const RootSystem>(cartan_datum(label));
}

inline std::string golden_path(const std::string& name) {
  return std::string(WEYLREP_GOLDEN_DIR) + "/" + name;
}

/// Reflection of a coefficient vector straight from the Cartan matrix:
/// s_i(v) = v - <v, alpha_i^vee> alpha_i.
inline Coeffs reflect_coeffs(const IntMatrix& cartan, int i, Coeffs v) {
  std::int64_t pair = 0;
  for (std::size_t j = 0; j < v.size(); ++j) pair += v[j] * cartan(i, j);
  v[i] -= static_cast<int>(pair);
  return v;
}

}  // namespace weylrep::testing
