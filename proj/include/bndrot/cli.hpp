#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bndrot::cli {

/// Environment variable naming the directory that receives output files when
/// no --out is given.
inline constexpr const char* kOutDirEnv = "BNDROT_OUT_DIR";

/// Runs one CLI invocation. args excludes the program name.
/// Exit codes: 0 success, 1 a verification check failed, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bndrot::cli
