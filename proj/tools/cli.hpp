#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace algcurv::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 mathematical failure (pole, singular point, ...), 2 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Breaks text lines longer than `width` at term boundaries (" + ", " - ").
std::string wrap_lines(const std::string& text, std::size_t width);

}  // namespace algcurv::cli
