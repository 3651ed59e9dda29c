#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json_codec.hpp"

namespace lagorb::cli {

struct RunOptions {
  std::uint64_t seed = 1;
  std::size_t threads = 1;
};

struct RunResult {
  io::json output;
  int exit_code = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // selftest found a failing criterion
inline constexpr int kExitSchema = 2;
inline constexpr int kExitMath = 3;
inline constexpr int kExitScale = 4;
inline constexpr int kExitInternal = 1;

const std::vector<std::string>& command_names();

/// Whether the command reads a JSON document (ff-census and selftest take flags only).
bool takes_input(const std::string& command);

int exit_code_for(ErrorCode code);

io::json error_json(ErrorCode code, const std::string& message);

/// Runs one command. Never throws: every failure becomes an error document
/// with the matching exit code.
RunResult run(const std::string& command, const io::json& input, const RunOptions& options);

}  // namespace lagorb::cli
