// Copyright 2026 The Chevalley Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace chevalley {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CHEVALLEY_DEFINE_ERROR(Name)          \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(#Name ": " + what) {}         \
  }

CHEVALLEY_DEFINE_ERROR(IllegalType);
CHEVALLEY_DEFINE_ERROR(InvalidCartanMatrix);
CHEVALLEY_DEFINE_ERROR(NoFoldableSymmetry);
CHEVALLEY_DEFINE_ERROR(DegeneratePair);
CHEVALLEY_DEFINE_ERROR(NotARoot);
CHEVALLEY_DEFINE_ERROR(InvalidEpsilon);
// Raised when an exact computation produces a value the theory rules out.
// Seeing this means a bug, not bad input.
CHEVALLEY_DEFINE_ERROR(InternalInconsistency);
CHEVALLEY_DEFINE_ERROR(NotSimplyLaced);
CHEVALLEY_DEFINE_ERROR(FoldingPreconditionViolated);
CHEVALLEY_DEFINE_ERROR(RepresentativeNotFound);
CHEVALLEY_DEFINE_ERROR(IncompatibleTables);
CHEVALLEY_DEFINE_ERROR(FormatError);

#undef CHEVALLEY_DEFINE_ERROR

}  // namespace chevalley
