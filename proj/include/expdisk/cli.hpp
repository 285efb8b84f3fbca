#pragma once

#include <iosfwd>

namespace expdisk {

// Full command-line driver (eval / certify / check / figure / suite).
// Streams are injected so the driver is testable in-process.
//
// Exit codes: 0 success/verified, 1 input error, 2 refuted or hypothesis or
// suite failure, 3 inconclusive certificate.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace expdisk
