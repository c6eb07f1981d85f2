/*
   Copyright 2026 The qlk authors

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

#ifndef QLK_ERRORS_HPP
#define QLK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlk {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic between Laurent polynomials in different formal variables.
struct VariableClash : Error {
    explicit VariableClash(const std::string& what) : Error(what) {}
};

/// Numeric evaluation of a Laurent polynomial at z = 0.
struct PoleAtZero : Error {
    explicit PoleAtZero(const std::string& what) : Error(what) {}
};

/// unit_normalize applied to the zero polynomial.
struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& what) : Error(what) {}
};

/// Malformed braid text or braid-list file.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Artin generator index outside [1, strands-1].
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

/// Representation parameter at a degenerate value (a^2 = 1, q in {0,+1,-1}).
struct DegenerateParameter : Error {
    explicit DegenerateParameter(const std::string& what) : Error(what) {}
};

/// Two gl(1|1) representations with different quantum parameters q.
struct QMismatch : Error {
    explicit QMismatch(const std::string& what) : Error(what) {}
};

/// Closure trace was not an exact scalar multiple of the identity.
struct NotProportionalToIdentity : Error {
    explicit NotProportionalToIdentity(const std::string& what) : Error(what) {}
};

/// Two numeric matrices expected to be proportional are not.
struct NotProportional : Error {
    explicit NotProportional(const std::string& what) : Error(what) {}
};

/// Requested state space exceeds the configured budget.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

/// A polynomial division that must be exact left a remainder.
struct NonExactDivision : Error {
    explicit NonExactDivision(const std::string& what) : Error(what) {}
};

} // namespace qlk

#endif // QLK_ERRORS_HPP
