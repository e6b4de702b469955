// Copyright 2026 The pccycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCCYCLE_CLI_HPP
#define PCCYCLE_CLI_HPP

#include <iosfwd>

namespace pccycle::cli {

/// Runs the pc-cycle command line. Decision subcommands exit 0 for "no",
/// 1 for "yes"; usage, file and parse errors exit 2; other subcommands exit
/// 0 on success. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pccycle::cli

#endif  // PCCYCLE_CLI_HPP
