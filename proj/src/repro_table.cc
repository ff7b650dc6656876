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

// Expected values of the reproduction suite. This is the only place they
// are written down.

#include "convpde/repro.h"

namespace convpde {

namespace {

constexpr char kPolyCoeffs[] =
    "uxx = x^2*y^3\n"
    "uxy = x^3*y^4\n"
    "uyy = x^4*y^5\n";

constexpr char kWave1[] =
    "vars = x t\n"
    "utt = x^2*t^7\n"
    "uxx = -x^6*t^5\n";

constexpr char kWave2[] =
    "vars = x t\n"
    "utt = x^3*t^7\n"
    "uxx = -x^7*t^5\n";

}  // namespace

const ReproTable& DefaultReproTable() {
  static const ReproTable table = [] {
    ReproTable t;
    t.cases = {
        {"single-x-convolution",
         kPolyCoeffs,
         Axis::kX,
         {"x^3"},
         {{"uxx", "1/60*x^6*y^3"},
          {"uxy", "1/140*x^7*y^4"},
          {"uyy", "1/280*x^8*y^5"},
          {"D", "-1/117600*x^14*y^8"}},
         TypeVerdict::kElliptic},
        // The stated mixed coefficient here is 1/3860; see discrepancies.
        {"single-y-convolution",
         kPolyCoeffs,
         Axis::kY,
         {"y^7"},
         {{"uxx", "1/1320*x^2*y^11"},
          {"uxy", "1/3960*x^3*y^12"},
          {"uyy", "1/10296*x^4*y^13"},
          {"D", "-1/101930400*x^6*y^24"}},
         TypeVerdict::kElliptic},
        {"wave-double-convolution-1",
         kWave1,
         Axis::kXY,
         {"x^5*t^2", "x^4*t^3"},
         {{"utt", "1/1558311955200*x^13*t^14"},
          {"uxx", "-1/57058191590400*x^17*t^12"},
          {"D", "1/88914462097412421550080000*x^30*t^26"}},
         TypeVerdict::kHyperbolic},
        {"wave-closed-form-1",
         kWave1,
         Axis::kXY,
         {"x^5*t^2", "x^4*t^3"},
         {{"closed:utt", "1/1558311955200*x^13*t^14"},
          {"closed:uxx", "-1/57058191590400*x^17*t^12"}},
         TypeVerdict::kHyperbolic},
        {"wave-double-convolution-2",
         kWave2,
         Axis::kXY,
         {"x*t^9", "x^5*t^3"},
         {{"D", "1/259841930424676205263257600000*x^26*t^40"}},
         TypeVerdict::kHyperbolic},
        {"wave-double-convolution-3",
         kWave2,
         Axis::kXY,
         {"x^3*t^4", "x^6*t^5"},
         {{"D", "1/26409729190021827098490961920000*x^32*t^34"}},
         TypeVerdict::kHyperbolic},
        {"elliptic-double-convolution",
         kPolyCoeffs,
         Axis::kXY,
         {"x^7*y^4", "x^3*y^2"},
         {{"D", "-23/466987721099855155200000000*x^30*y^24"}},
         TypeVerdict::kElliptic},
    };
    // 1/3960 is the only mixed coefficient for which B^2 - A C equals the
    // stated discriminant: (1/3960)^2 - (1/1320)(1/10296) = -1/101930400,
    // whereas 1/3860 gives -16361/2531203646400.
    t.discrepancies = {
        {"single-y-convolution", "uxy", "1/3860*x^3*y^12", "1/3960*x^3*y^12",
         "D", "-1/101930400*x^6*y^24"},
    };
    return t;
  }();
  return table;
}

}  // namespace convpde
