// Copyright 2026 The ddlcheck Authors
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

// Command-line front end. Exit codes: 0 confirmed or satisfiable, 1 refuted
// or unsatisfiable up to the bound, 2 usage or input error, 3 timeout.

#ifndef DDL_CLI_CLI_HPP_
#define DDL_CLI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ddl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTimeout = 3;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ddl::cli

#endif  // DDL_CLI_CLI_HPP_
