#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "postage/error.hpp"

namespace postage::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidInput = 2,
  kOverflow = 3,
  kCapExhausted = 4,
  kCounterexampleFound = 5,
  kTooLarge = 6,
};

int exit_code_for(ErrorCode code) noexcept;

struct Terminal {
  bool stdout_is_tty = false;
  bool color = false;  // ANSI styling; off when NO_COLOR is set
};

/// Runs the CLI with `args` (excluding argv[0]). Never calls exit().
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Terminal& terminal = {});

}  // namespace postage::cli
