/* Copyright 2026 the finsite authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef FINSITE_ERROR_HPP_
#define FINSITE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace finsite {

enum class Errc {
  kMissingComposite,
  kDomCodMismatch,
  kIdentityViolation,
  kAssociativityViolation,
  kWrongCodomain,
  kCodomainMismatch,
  kCategoryMismatch,
  kNotASieve,
  kAxiomViolation,
  kParentMismatch,
  kElementNotFound,
  kNotClosed,
  kNotDense,
  kObjectNotInSubcategory,
  kTooLarge,
  kParseError,
};

const char* errc_name(Errc code);

/// All validation and precondition failures surface as this type; the code
/// tells callers (and the CLI exit-code mapping) what went wrong, the message
/// names the witnesses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace finsite

#endif  // FINSITE_ERROR_HPP_
