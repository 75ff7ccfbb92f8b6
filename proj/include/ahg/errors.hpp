/*
 * Copyright 2026 The ahg Authors
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

#ifndef AHG_ERRORS_HPP
#define AHG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ahg {

/// Value outside a table or enumerable range.
class RangeError : public std::out_of_range
{
public:
	using std::out_of_range::out_of_range;
};

/// Argument inconsistent with the other arguments (agent not in coalition, ...).
class ArgumentError : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

/// Quantity undefined for the input (nonpositive baseline in a ratio, ...).
class DomainError : public std::domain_error
{
public:
	using std::domain_error::domain_error;
};

/// Structural precondition of an operation not met (non-hospitable alpha, ...).
class PreconditionError : public std::logic_error
{
public:
	using std::logic_error::logic_error;
};

/// Exhaustive enumeration would exceed the configured budget.
class ResourceError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Malformed input file or literal.
class ParseError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

} // namespace ahg

#endif // AHG_ERRORS_HPP
