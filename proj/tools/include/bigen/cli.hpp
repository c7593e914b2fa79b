#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace bigen::cli {

// Runs one command line (without the program name). Returns the exit status.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bigen::cli
