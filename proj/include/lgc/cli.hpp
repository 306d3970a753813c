#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgc {

// Exit codes of RunCommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitVerification = 3;

// Relative --out paths resolve against this directory when it is set.
inline constexpr const char* kOutDirEnv = "LGC_OUT_DIR";

// Runs one command line (args excludes the program name). Results go to the
// --out file when given, otherwise to `out`; diagnostics go to `err`.
int RunCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgc
