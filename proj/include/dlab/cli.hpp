#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlab::cli {

// Entry point behind the dlab binary; args excludes the program name.
// Returns 0 when every check passed, 1 when a witness was found (reports are
// still emitted) or an internal invariant tripped, 2 on usage/domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlab::cli
