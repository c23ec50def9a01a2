/*
 * Copyright 2026 The galmon Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GALMON_ERROR_HPP
#define GALMON_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galmon {

using Symbol = std::string;

/// A failed law check: which law, the offending elements, and a readable
/// message. Validators return `std::optional<Violation>`; an empty optional
/// means the value satisfies every law.
struct Violation {
  std::string         law;
  std::vector<Symbol> witness;
  std::string         message;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: mismatched domains, wrong monoid, non-natural data.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size guard.
class SizingError : public Error {
 public:
  using Error::Error;
};

/// A value failed axiom validation where a valid one was required.
class ValidationError : public Error {
 public:
  explicit ValidationError(Violation v)
      : Error(v.message), violation_(std::move(v)) {}
  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

/// Raised when an antipode is requested for a monoid that is not a group.
class NotHopfError : public Error {
 public:
  explicit NotHopfError(Symbol witness)
      : Error("monoid is not Hopf: element '" + witness
              + "' has no two-sided inverse"),
        witness_(std::move(witness)) {}
  const Symbol& witness() const noexcept { return witness_; }

 private:
  Symbol witness_;
};

}  // namespace galmon

#endif  // GALMON_ERROR_HPP
