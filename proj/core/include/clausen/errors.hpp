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

#ifndef CLAUSEN_ERRORS_HPP
#define CLAUSEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clausen {

/// A bottom parameter (or a derived denominator) vanishes inside the window a
/// computation needs. Hypergeometric identities carry "no bottom parameter is
/// a non-positive integer" hypotheses; this error enforces them at runtime.
class DegenerateParameter : public std::runtime_error {
 public:
  explicit DegenerateParameter(const std::string& what) : std::runtime_error(what) {}
};

/// A series summed at unit argument has no non-positive-integer top parameter,
/// so the sum has no finite window.
class NonTerminating : public std::runtime_error {
 public:
  explicit NonTerminating(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace clausen

#endif  // CLAUSEN_ERRORS_HPP
