// Copyright 2026 The multisum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef MULTISUM_TOOLS_CLI_H_
#define MULTISUM_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace multisum::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitIo = 4;

// Parses `args` (without the program name) and runs the selected
// subcommand. Library errors are reported on `err` and mapped to exit codes.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace multisum::cli

#endif  // MULTISUM_TOOLS_CLI_H_
