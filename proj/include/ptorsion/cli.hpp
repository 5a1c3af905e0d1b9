// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef PTORSION_CLI_HPP
#define PTORSION_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ptorsion::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalidArguments = 2,
    kExhausted = 3,
    kInternalError = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --output names a file; diagnostics and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptorsion::cli

#endif  // PTORSION_CLI_HPP
