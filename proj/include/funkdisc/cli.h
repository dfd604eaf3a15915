#ifndef FUNKDISC_CLI_H_
#define FUNKDISC_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace funkdisc {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitIo = 3;

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace funkdisc

#endif  // FUNKDISC_CLI_H_
