/*
   Copyright 2026 The clausen authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CLAUSEN_CLI_HPP
#define CLAUSEN_CLI_HPP

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace clausen::cli {

/// Entry point behind the clausen binary. args excludes the program name.
/// Exit status: 0 on success/Verified, 1 on Deviation, 2 on usage errors,
/// degenerate parameters and refusals.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr);

/// The full verification grid as one aggregate JSON document. Deterministic:
/// equal seeds give byte-identical reports.
nlohmann::ordered_json build_suite_report(std::uint64_t seed);

}  // namespace clausen::cli

#endif  // CLAUSEN_CLI_HPP
