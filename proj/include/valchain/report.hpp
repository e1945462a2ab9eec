#pragma once

#include <string>
#include <vector>

#include "valchain/chains.hpp"
#include "valchain/io.hpp"

namespace valchain {

inline constexpr int kReportVersion = 1;

std::vector<std::string> report_lines(const ValidationReport& report);

/// Wraps a command result in the versioned structured-output envelope.
Json report_envelope(const std::string& command, Json result);

std::string join_lines(const std::vector<std::string>& lines);

}  // namespace valchain
