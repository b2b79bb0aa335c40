/*
   Copyright 2026 the pisotbeta authors

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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace pisot {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const BigRat& x) { return x.sign(); }

inline BigInt rat_num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRat& q) { return boost::multiprecision::denominator(q); }

/* Thrown when a numeric certification routine cannot reach a verdict at its
   highest working precision.  Callers must treat this as "unknown", never as
   a boolean answer. */
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/* Thrown when an iterative expansion exceeds its step budget. */
class StepLimitError : public std::runtime_error {
 public:
  explicit StepLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pisot
