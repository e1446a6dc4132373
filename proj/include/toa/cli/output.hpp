#pragma once

#include <filesystem>
#include <string>

namespace toa::cli {

/// printf "%.17g"; non-finite values print as nan, inf, -inf.
std::string format_double(double x);

/// Writes content to path via a temporary file in the same directory and a
/// rename. An empty path writes to standard output.
void write_atomically(const std::filesystem::path& path, const std::string& content);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace toa::cli
