#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace mcgcert {

// Expands parenthesized powers "( ... )^k" (innermost first, k may be
// negative) into the plain word grammar. Throws on unbalanced parentheses.
std::string expand_power_sugar(const std::string& text);

// Runs the command line (argv without the program name). Exit code 0: all
// checks passed; 1: some check failed; 2: usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace mcgcert
