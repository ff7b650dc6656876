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

// Reproduction suite for the reference worked examples. Every expected value
// is an exact polynomial string; see repro_table.cc.

#ifndef CONVPDE_REPRO_H_
#define CONVPDE_REPRO_H_

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "convpde/pde.h"

namespace convpde {

// One expected quantity. `quantity` is a coefficient key of the case's
// .pde text ("uxx", "utt", ...) for the convolved coefficient, "closed:<key>"
// for the same coefficient from ClosedFormChainCoeff, or "D".
struct ReproCheck {
  std::string quantity;
  std::string expected;
};

struct ReproCase {
  std::string name;
  std::string pde;  // .pde file text
  Axis axis = Axis::kXY;
  std::vector<std::string> kernels;
  std::vector<ReproCheck> checks;
  // Expected type in all four open quadrants via MonomialParity.
  TypeVerdict expected_type = TypeVerdict::kHyperbolic;
};

// A stated value that the engine recomputes differently, together with
// the downstream quantity that decides which one is consistent.
struct ReproDiscrepancy {
  std::string case_name;
  std::string quantity;   // the disputed coefficient key, e.g. "uxy"
  std::string stated;  // as given in the table
  std::string corrected;  // what the engine must produce
  std::string witness;    // quantity whose stated value settles it, "D"
  std::string witness_expected;
};

struct ReproTable {
  std::vector<ReproCase> cases;
  std::vector<ReproDiscrepancy> discrepancies;
};

const ReproTable& DefaultReproTable();

struct ReproCheckResult {
  std::string quantity;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct ReproCaseResult {
  std::string name;
  std::vector<ReproCheckResult> checks;
  std::array<TypeVerdict, 4> types{};
  SignMethod method = SignMethod::kSampling;
  bool type_ok = false;
  bool ok = false;
};

struct ReproDiscrepancyResult {
  ReproDiscrepancy entry;
  std::string computed;
  // D recomputed with the stated value substituted.
  std::string witness_with_stated;
  // computed == corrected, and only the corrected value reproduces the
  // stated witness.
  bool corrected_is_consistent = false;
};

struct ReproResult {
  std::vector<ReproCaseResult> cases;
  std::vector<ReproDiscrepancyResult> discrepancies;
  bool all_pass() const;
};

ReproResult RunRepro(const ReproTable& table);

void WriteReproText(const ReproResult& result, std::ostream& out);
nlohmann::ordered_json ReproToJson(const ReproResult& result);

}  // namespace convpde

#endif  // CONVPDE_REPRO_H_
