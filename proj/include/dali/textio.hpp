#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dali {

// Reads a whole UTF-8 text file as lines. CRLF and lone CR line endings are
// normalized; a trailing newline does not produce an empty final line.
std::vector<std::string> read_lines(const std::string& path);

std::vector<std::string> split_whitespace(std::string_view line);

// Writes via a temp file in the same directory plus rename, so readers never
// observe a half-written artifact.
void atomic_write(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

uint64_t fnv1a64_file(const std::string& path);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// Fixed two decimals, ties away from zero (table-report convention).
std::string format_fixed2(double v);
double round_half_up2(double v);

}  // namespace dali
