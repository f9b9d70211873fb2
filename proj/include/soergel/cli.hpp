#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace soergel::cli {

/// Exit codes: 0 success, 1 usage or input error, 2 verification failure.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kFailed = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace soergel::cli
