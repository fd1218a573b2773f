#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "powerdiam/group.hpp"

namespace powerdiam {

// Default generating set for a group spec: S<n>, D<n>, A<n>,
// Z<m>xZ<m>x..., or file:<path> naming a generator file.
GenSet resolve_spec(const std::string& spec, const Limits& limits = {});

// Command-line driver; args exclude the program name. Returns the process
// exit code: 0 on success, 1 for usage/parse/resource errors, 2 when a
// check subcommand found a counterexample.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powerdiam
