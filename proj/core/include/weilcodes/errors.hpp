/*
 * Copyright 2026 The weilcodes authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace weilcodes {

/// Base class of every failure raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter validation.
struct NotPrimeError : Error { using Error::Error; };
struct EqualPrimesError : Error { using Error::Error; };
struct EvenInputError : Error { using Error::Error; };
struct NotPrimitiveRootError : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct ZeroElementError : Error { using Error::Error; };

// Cyclotomic integers.
struct MixedPrimeError : Error { using Error::Error; };
struct BadAutomorphismError : Error { using Error::Error; };
struct NotRationalIntegerError : Error { using Error::Error; };

// Character sums.
struct NonPrimeFieldError : Error { using Error::Error; };

// Candidate functions over F_q.
struct NotBentError : Error { using Error::Error; };
struct NotWeaklyRegularError : Error { using Error::Error; };
struct DualNotQuadraticError : Error { using Error::Error; };
struct NotHomogeneousError : Error { using Error::Error; };
struct CountMismatchError : Error { using Error::Error; };

// Code construction and verification.
struct SizeMismatchError : Error { using Error::Error; };
struct CeilingExceededError : Error { using Error::Error; };
struct MethodDisagreementError : Error { using Error::Error; };
struct VerificationFailedError : Error { using Error::Error; };
struct NonIntegerEntryError : Error { using Error::Error; };

/// Raised when two internal computations of the same quantity disagree.
/// Any such disagreement means a defect in the library or its tables, so it
/// aborts the computation instead of guessing which side is right.
struct InternalInconsistencyError : Error { using Error::Error; };

}  // namespace weilcodes
