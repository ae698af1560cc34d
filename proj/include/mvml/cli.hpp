#pragma once

#include <ostream>

namespace mvml {

// Exit codes: 0 valid/inconclusive/ok, 1 refuted/discarded/invalid,
// 2 evaluation error, 64 usage error, 66 file error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace mvml
