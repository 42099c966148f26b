#pragma once

#include <string>

#include "kcbg/connectivity.hpp"
#include "kcbg/criticality.hpp"

namespace kcbg {

// Pretty-printed JSON bodies for the CLI (2-space indent, trailing newline).
std::string to_json(const VerifyReport& report);
std::string to_json(const ConnectivityReport& report, int n, int m);

}  // namespace kcbg
