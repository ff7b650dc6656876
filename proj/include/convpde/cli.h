// Copyright 2026 The convpde Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONVPDE_CLI_H_
#define CONVPDE_CLI_H_

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "convpde/oracle.h"
#include "convpde/parser.h"
#include "convpde/pde.h"
#include "convpde/repro.h"

namespace convpde {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitDegenerate = 2,
  kExitInternalError = 3,
};

enum class OutputFormat { kText, kJson };

// Runs the command line `args` (without the program name). All output goes
// to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Invokes `body`, mapping escaped exceptions to exit codes: input errors
// (ParseError, std::invalid_argument, ...) to 1, anything else to 3.
int RunGuarded(const std::function<int()>& body, std::ostream& err);

// Command bodies, exposed for tests.
int ConvolveCommand(const std::vector<std::string>& exprs, Axis axis,
                    const VarNames& vars, OutputFormat format,
                    std::ostream& out);
int ClassifyCommand(const std::string& pde_text,
                    const std::vector<std::string>& kernels, Axis axis,
                    OutputFormat format, std::ostream& out);
int ReproCommand(const ReproTable& table, OutputFormat format,
                 std::ostream& out);
int FuzzCommand(const ExperimentConfig& config, OutputFormat format,
                std::ostream& out);

nlohmann::ordered_json ReportToJson(const SecondOrderPde& pde,
                                    const VarNames& vars,
                                    const std::vector<BiPoly>& kernels,
                                    Axis axis, const EquationReport& report);
nlohmann::ordered_json InvarianceToJson(const InvarianceReport& report);

}  // namespace convpde

#endif  // CONVPDE_CLI_H_
