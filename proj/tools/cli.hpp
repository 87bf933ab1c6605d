#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypertile::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoFactor = 3;
inline constexpr int kExitBudget = 4;

/// Runs one command line (without the program name). Hypergraphs are read
/// from `in` unless --input or --spec is given.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace hypertile::cli
