#pragma once

#include "spingrass/arith.hpp"

#include <string>

namespace spingrass {

/// Outcome of one numeric identity check.
struct IdentityReport {
  std::string name;
  std::string parameters;
  BigInt lhs, rhs;
  bool pass = false;
};

}  // namespace spingrass
