/*
   Copyright 2026 The plarr authors

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

#ifndef PLARR_ERRORS_HPP
#define PLARR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plarr {

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& msg) : Error("FieldMismatch", msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg) : Error("DivisionByZero", msg) {}
};

struct ReducibleMinpoly : Error {
  explicit ReducibleMinpoly(const std::string& msg) : Error("ReducibleMinpoly", msg) {}
};

struct InexactDivision : Error {
  explicit InexactDivision(const std::string& msg) : Error("InexactDivision", msg) {}
};

struct ProportionalInputs : Error {
  explicit ProportionalInputs(const std::string& msg) : Error("ProportionalInputs", msg) {}
};

struct RepeatedComponent : Error {
  explicit RepeatedComponent(const std::string& msg) : Error("RepeatedComponent", msg) {}
};

struct UnsupportedN : Error {
  explicit UnsupportedN(const std::string& msg) : Error("UnsupportedN", msg) {}
};

struct NotAPencil : Error {
  int kernel_dim;
  explicit NotAPencil(int dim, const std::string& msg)
      : Error("NotAPencil", msg), kernel_dim(dim) {}
};

struct NonOrdinarySingularity : Error {
  explicit NonOrdinarySingularity(const std::string& msg)
      : Error("NonOrdinarySingularity", msg) {}
};

struct NotInField : Error {
  explicit NotInField(const std::string& msg) : Error("NotInField", msg) {}
};

struct NotARealization : Error {
  explicit NotARealization(const std::string& msg) : Error("NotARealization", msg) {}
};

struct NegativeMultiplicity : Error {
  explicit NegativeMultiplicity(const std::string& msg)
      : Error("NegativeMultiplicity", msg) {}
};

struct ReconstructionFailed : Error {
  explicit ReconstructionFailed(const std::string& msg)
      : Error("ReconstructionFailed", msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

}  // namespace plarr

#endif  // PLARR_ERRORS_HPP
