// Copyright 2026 The kalamidas-nosignal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KALAMIDAS_ERROR_HPP
#define KALAMIDAS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kalamidas {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  subset_mismatch,
  not_unitary,
  not_hermitian,
  incomplete_family,
  too_large,
};

/// Every failure raised by the library carries one of the codes above; the C
/// API maps them one-to-one onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Sink for non-fatal conditions such as a cutoff below the adequacy rule.
struct Diagnostics {
  std::vector<std::string> warnings;

  void warn(std::string message) { warnings.push_back(std::move(message)); }
};

}  // namespace kalamidas

#endif  // KALAMIDAS_ERROR_HPP
