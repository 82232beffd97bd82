#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pspec/bit_vector.hpp"

namespace pspec {

/// Parses an index list: either a JSON array of integers or plain text with
/// one integer per line. Blank lines and '#' comments are ignored in text.
std::vector<int> parse_index_list(std::string_view text);
std::vector<int> read_index_list(const std::string& path);

/// Reads a square binary matrix, one row of '0'/'1' characters per line.
std::vector<BitVector> read_bit_matrix(const std::string& path);

std::string read_text_file(const std::string& path);

} // namespace pspec
