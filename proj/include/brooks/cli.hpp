#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brooks {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerifyFailed = 2;

// Entry point of the `brooks` tool. args[0] is the program name.
//
//   color <graph.col> [--out FILE] [--report]
//   verify <graph.col> <colouring> [--bound K | --brooks]
//   gen <kind> [params...] [--seed S] [--out FILE]
//   bench --sizes n1,n2,... [--repeats R] [--seed S] --csv FILE
//
// Returns 0 on success, 1 for usage or input errors, 2 when a colouring
// fails verification.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brooks
