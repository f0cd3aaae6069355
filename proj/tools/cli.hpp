// Copyright 2026 The focalqi Authors
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

// Command layer of the focal tool: descriptor JSON I/O and one function per
// subcommand returning the JSON report together with the exit code.
//
// Exit codes: 0 yes or success, 1 no or a failed check, 2 parse error or
// invalid flags, 3 undecided.

#ifndef FOCAL_TOOLS_CLI_HPP_
#define FOCAL_TOOLS_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "focal/focalmodel.hpp"
#include "json.hpp"

namespace focal::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndecided = 3;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Schema:
//   {"kind":"FT","m":int}
//   {"kind":"GAk","A":[[ratstr]],"k":int,"index":int?}
//   {"kind":"Composite","A":[[ratstr]],"varpi":ratstr,"q":int,"index":int?}
//   {"kind":"Millefeuille","A":[[ratstr]],"t":ratstr,"k":int}
// with ratstr = "-?[0-9]+(/[0-9]+)?". ParseError on any violation, including
// unknown keys and descriptors rejected by Validate.
FocalDescriptor DescriptorFromJson(const Json& j);
FocalDescriptor ParseDescriptor(const std::string& text);
FocalDescriptor ReadDescriptorFile(const std::string& path);

// "kind" first, then the schema fields in order; "index" omitted when 1.
Json DescriptorToJson(const FocalDescriptor& g);
// Two-space indented JSON with a trailing newline.
std::string CanonicalText(const FocalDescriptor& g);

struct CommandResult {
  Json output;
  int exit_code = kExitYes;
};

struct CommableOptions {
  bool within_focal = false;
  bool witness = false;
  bool qi = false;
  // Attaches numeric estimates to undecided verdicts; the verdict and exit
  // code stay undecided.
  std::optional<double> tolerance;
};

CommandResult CmdInvariants(const FocalDescriptor& g);
CommandResult CmdCommable(const FocalDescriptor& g1, const FocalDescriptor& g2, const CommableOptions& options);
CommandResult CmdBoundary(const FocalDescriptor& g);
CommandResult CmdHull(const FocalDescriptor& g);
CommandResult CmdPattern(const FocalDescriptor& g1, const FocalDescriptor& g2);
CommandResult CmdRadicalCheck(long p, int samples, long conj_bound);
CommandResult CmdFtOracle(long m, long depth);

// Plain-text rendering for --human; never parsed back.
std::string RenderHuman(const Json& report);

// Full command line; writes the report to `out` and diagnostics to `err`.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace focal::cli

#endif  // FOCAL_TOOLS_CLI_HPP_
