// Copyright 2026 The subsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace subsum {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SUBSUM_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

SUBSUM_DEFINE_ERROR(InvalidArgument);
SUBSUM_DEFINE_ERROR(AllZeroInput);
SUBSUM_DEFINE_ERROR(DimensionMismatch);
SUBSUM_DEFINE_ERROR(NumericalError);
SUBSUM_DEFINE_ERROR(InvalidEMatrix);
SUBSUM_DEFINE_ERROR(InconsistencyError);
SUBSUM_DEFINE_ERROR(WrongArity);
SUBSUM_DEFINE_ERROR(CriterionNotSatisfied);
SUBSUM_DEFINE_ERROR(NotBoundary);
SUBSUM_DEFINE_ERROR(NotPositiveDefinite);
SUBSUM_DEFINE_ERROR(VerificationFailed);

#undef SUBSUM_DEFINE_ERROR

}  // namespace subsum
