// Copyright 2026 The Repute Authors
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

#ifndef REPUTE_TOOLS_CLI_H_
#define REPUTE_TOOLS_CLI_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "repute/axioms.h"
#include "repute/preorder.h"

namespace repute::cli {

enum class Format { kText, kJson };

// Exit codes: 0 success / pass / SAT, 1 fail / UNSAT, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

struct CommandOutcome {
  int exit_code = kExitOk;
  std::string rendered;    // stdout
  std::string diagnostic;  // stderr
};

struct RankOptions {
  bool trace = false;
  Format format = Format::kText;
};

struct CertifyCommandOptions {
  std::size_t cap = kDefaultEnumerationCap;
  bool count_all = false;
  Format format = Format::kText;
};

// An empty axiom list means every axiom that applies to the graph's mode.
CommandOutcome CmdRank(std::string_view graph_text, const RankOptions& options);
CommandOutcome CmdCheck(std::string_view graph_text,
                        std::string_view ranking_text,
                        std::span<const Axiom> axioms,
                        Format format = Format::kText);
CommandOutcome CmdCertify(std::string_view graph_text,
                          std::span<const Axiom> axioms,
                          const CertifyCommandOptions& options);
CommandOutcome CmdComplement(std::string_view graph_text,
                             Format format = Format::kText);

// Full command line: `repute <rank|check|certify|complement> ...`. File
// arguments of "-" read from `in`.
int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace repute::cli

#endif  // REPUTE_TOOLS_CLI_H_
