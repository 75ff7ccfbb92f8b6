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

#ifndef AHG_ALPHA_HPP
#define AHG_ALPHA_HPP

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ahg/errors.hpp"
#include "ahg/rational.hpp"

namespace ahg {

enum class AlphaKind
{
	ASHG,         ///< alpha(m) = 1
	FHG,          ///< alpha(m) = 1/m
	MFHG,         ///< alpha(m) = 1/(m-1), alpha(1) = 0
	PairwiseComm, ///< alpha(m) = 2/(m(m-1)), alpha(1) = 1
	OddEven,      ///< 1/(m-1) for even m, 1/m for odd m
	Table         ///< explicit alpha(1..n_max)
};

/// Coalition-size weighting function of an alpha-hedonic game.
class AlphaSpec
{
public:
	AlphaSpec() = default;
	explicit AlphaSpec(AlphaKind kind) : kind_(kind)
	{
		if (kind == AlphaKind::Table)
		{
			throw ArgumentError("table alpha needs explicit values");
		}
	}

	/// values[m-1] = alpha(m). alpha(m) must be positive for m >= 2.
	static AlphaSpec table(std::vector<Rational> values)
	{
		if (values.empty())
		{
			throw ArgumentError("alpha table must be nonempty");
		}
		if (values.front() < Rational(0))
		{
			throw ArgumentError("alpha(1) must be nonnegative");
		}
		for (std::size_t m = 2; m <= values.size(); ++m)
		{
			if (values[m - 1] <= Rational(0))
			{
				throw ArgumentError("alpha(" + std::to_string(m) + ") must be positive");
			}
		}
		AlphaSpec spec;
		spec.kind_ = AlphaKind::Table;
		spec.table_ = std::move(values);
		return spec;
	}

	static AlphaSpec ashg() { return AlphaSpec(AlphaKind::ASHG); }
	static AlphaSpec fhg() { return AlphaSpec(AlphaKind::FHG); }
	static AlphaSpec mfhg() { return AlphaSpec(AlphaKind::MFHG); }
	static AlphaSpec pairwise_comm() { return AlphaSpec(AlphaKind::PairwiseComm); }
	static AlphaSpec odd_even() { return AlphaSpec(AlphaKind::OddEven); }

	AlphaKind kind() const noexcept { return kind_; }
	const std::vector<Rational>& table_values() const noexcept { return table_; }

	/// Largest size with a defined value; 0 means unbounded.
	std::size_t max_size() const noexcept { return kind_ == AlphaKind::Table ? table_.size() : 0; }

	friend bool operator==(const AlphaSpec&, const AlphaSpec&) = default;

private:
	AlphaKind kind_ = AlphaKind::ASHG;
	std::vector<Rational> table_;
};

inline Rational alpha_value(const AlphaSpec& spec, long m)
{
	if (m < 1)
	{
		throw RangeError("coalition size must be at least 1");
	}
	switch (spec.kind())
	{
	case AlphaKind::ASHG:
		return Rational(1);
	case AlphaKind::FHG:
		return Rational(1, m);
	case AlphaKind::MFHG:
		return m == 1 ? Rational(0) : Rational(1, m - 1);
	case AlphaKind::PairwiseComm:
		return m == 1 ? Rational(1) : Rational(2, m * (m - 1));
	case AlphaKind::OddEven:
		return m % 2 == 0 ? Rational(1, m - 1) : Rational(1, m);
	case AlphaKind::Table:
		if (static_cast<std::size_t>(m) > spec.table_values().size())
		{
			throw RangeError("alpha table has no value for size " + std::to_string(m));
		}
		return spec.table_values()[static_cast<std::size_t>(m - 1)];
	}
	throw ArgumentError("unknown alpha kind");
}

inline std::string alpha_name(const AlphaSpec& spec)
{
	switch (spec.kind())
	{
	case AlphaKind::ASHG: return "ASHG";
	case AlphaKind::FHG: return "FHG";
	case AlphaKind::MFHG: return "MFHG";
	case AlphaKind::PairwiseComm: return "PairwiseComm";
	case AlphaKind::OddEven: return "OddEven";
	case AlphaKind::Table: return "Table";
	}
	return "?";
}

/// Case-insensitive; accepts "pairwise" and "odd-even" style aliases.
inline AlphaSpec parse_alpha_name(std::string_view name)
{
	std::string key;
	for (char c : name)
	{
		if (c != '-' && c != '_' && c != ' ')
		{
			key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
		}
	}
	if (key == "ashg") return AlphaSpec::ashg();
	if (key == "fhg") return AlphaSpec::fhg();
	if (key == "mfhg") return AlphaSpec::mfhg();
	if (key == "pairwisecomm" || key == "pairwise") return AlphaSpec::pairwise_comm();
	if (key == "oddeven") return AlphaSpec::odd_even();
	throw ParseError("unknown alpha variant '" + std::string(name) + "'");
}

} // namespace ahg

#endif // AHG_ALPHA_HPP
