#ifndef TPK_CLI_HPP
#define TPK_CLI_HPP

#include <string>
#include <vector>

namespace tpk::cli {

// Exit codes: 0 success/free/certified, 1 found/refuted, 2 inconclusive,
// 64 usage errors, 65 unparseable input data.
inline constexpr int kExitFound = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;

int run(const std::vector<std::string>& args);

}  // namespace tpk::cli

#endif
