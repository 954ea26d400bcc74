// Copyright 2026 The cph Authors
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

#ifndef CPH_VERDICT_IO_H
#define CPH_VERDICT_IO_H

#include <string>

#include "cph/solver.h"

namespace cph {

struct VerdictFormat {
    bool witness = true;
    bool certificate = true;
};

/// JSON document with a fixed key set:
///
///   answer      "YES" | "NO"
///   n, r        instance shape
///   k, k_prime  ranks, or null if the solve stopped earlier
///   certificate 1-based ascending generator indices (empty unless NO)
///   witness     Pauli words (empty unless YES)
///   gates       recorded primitive gate count
///   row_ops     row multiplications and swaps
///
/// Keys are emitted in sorted order with two-space indentation, so equal
/// verdicts give byte-identical documents.
std::string format_verdict_json(const Verdict &v, const VerdictFormat &format = {});
Verdict parse_verdict_json(const std::string &text);

/// Human-readable form; the first line is YES or NO.
std::string format_verdict_text(const Verdict &v, const VerdictFormat &format = {});

}  // namespace cph

#endif
