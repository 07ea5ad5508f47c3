#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sj::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCriteriaFailed = 1;
inline constexpr int kValidationError = 2;
inline constexpr int kUsage = 64;
inline constexpr int kMalformedJson = 65;
inline constexpr int kInternal = 70;

// args[0] is the program name. `in` backs `--input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sj::cli
