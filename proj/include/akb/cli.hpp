#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace akb::cli {

enum ExitCode { Ok = 0, ParseFailure = 2, BudgetExhausted = 3 };

// args excludes the program name; stdin is read only when a job is "-" or missing
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace akb::cli
