//
// Copyright 2026 The mtnoise Authors
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
//

#ifndef MTNOISE_CLI_H_
#define MTNOISE_CLI_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace mtnoise {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitTransport = 3;

// Runs the tool. `args` excludes the program name. Never throws; errors are
// reported as one line on `err` and mapped to an exit status.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Lowercase hex SHA-256 of a file's bytes.
std::string Sha256File(const std::filesystem::path& path);

// Directory holding the default lexicons: $MTNOISE_DATA_DIR if set, else the
// data/ directory of the source tree.
std::filesystem::path DefaultDataDir();

}  // namespace mtnoise

#endif  // MTNOISE_CLI_H_
