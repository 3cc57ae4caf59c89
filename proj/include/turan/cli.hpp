#pragma once

#include <string>
#include <vector>

namespace turan::cli {

// Entry point shared by the binary and the tests. `args` excludes the
// program name. Exit codes: 0 success, 1 negative result (e.g. hom-free,
// failed verification), 2 usage or parse error, 3 internal guard tripped.
int dispatch(std::vector<std::string> args);

}  // namespace turan::cli
