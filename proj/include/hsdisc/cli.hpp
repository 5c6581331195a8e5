#pragma once

#include <iosfwd>

namespace hsdisc {

// Exit status: 0 success, 1 a verifier saw the reduction disagree with its
// oracle, 2 usage or input error (reported as JSON on err).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hsdisc
