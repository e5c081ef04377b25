#pragma once

#include <string>
#include <vector>

namespace oscopt {

/// Entry point behind the oscopt binary; args exclude the program name.
/// Returns 0 on success, 2 on validation/usage errors, 3 on oracle-budget
/// refusals.
int cli_main(const std::vector<std::string>& args);

}  // namespace oscopt
