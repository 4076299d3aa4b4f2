#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "noncomm/groups.hpp"

namespace noncomm {

/// Exit codes: 0 pass / success, 1 verdict fail, 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Group from a spec string: SL2(q), GL2(q), PSL2(q), PGL2(q) or a
/// descriptor accepted by parse_descriptor.
Group resolve_group(const std::string& spec);

}  // namespace noncomm
