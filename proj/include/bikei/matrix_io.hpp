#pragma once

#include <string>
#include <string_view>

#include "bikei/birack.hpp"

namespace bikei {

// Birack matrix file: first line "n", then n lines of 2n space-separated
// 1-based integers (row i of U followed by row i of L). Lines starting with
// '#' and blank lines are ignored. Throws InputError on malformed text.
BirackMatrix parse_matrix_text(std::string_view text);
BirackMatrix read_matrix_file(const std::string& path);

// Inverse of parse_matrix_text, ending with a newline.
std::string format_matrix(const BirackMatrix& m);

}  // namespace bikei
