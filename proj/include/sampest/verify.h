/*
 * Copyright 2026 The sampest Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SAMPEST_VERIFY_H_
#define SAMPEST_VERIFY_H_

#include <cstdint>
#include <ostream>

namespace sampest {

// Cross-checks the library against the brute-force oracles on small
// instances. Prints one PASS/FAIL line per check; returns true if all pass.
bool RunVerification(std::ostream& out, std::uint64_t seed = 7);

}  // namespace sampest

#endif  // SAMPEST_VERIFY_H_
