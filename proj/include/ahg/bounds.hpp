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

#ifndef AHG_BOUNDS_HPP
#define AHG_BOUNDS_HPP

#include <algorithm>
#include <cstddef>
#include <string>

#include "ahg/alpha.hpp"
#include "ahg/errors.hpp"
#include "ahg/rational.hpp"

namespace ahg {

/// Default cap for class predicates, which query alpha pointwise.
inline constexpr long default_class_check_limit = 64;

struct BoundQuery
{
	AlphaSpec alpha;
	long q = 2;
	long m = 3;
	Rational k{1};
};

inline void validate(const BoundQuery& query)
{
	if (query.q < 2)
	{
		throw ArgumentError("bound needs q >= 2");
	}
	if (query.m < query.q + 1)
	{
		throw ArgumentError("bound needs m >= q + 1 (q=" + std::to_string(query.q) + ", m=" + std::to_string(query.m) + ")");
	}
	if (query.k < Rational(1))
	{
		throw ArgumentError("bound needs k >= 1");
	}
}

/// Largest improvement factor a size-m coalition can offer against a partition
/// that is k-improvement stable for all sizes up to q:
///
///   max(1, k * (floor((m-1)/(q-1)) * a(m)/a(q) + [r != 0] * a(m)/a(r+1))),  r = (m-1) mod (q-1).
inline Rational f_general(const BoundQuery& query)
{
	validate(query);
	const long groups = (query.m - 1) / (query.q - 1);
	const long rest = (query.m - 1) % (query.q - 1);
	const Rational alpha_m = alpha_value(query.alpha, query.m);
	Rational value = Rational(groups) * alpha_m / alpha_value(query.alpha, query.q);
	if (rest != 0)
	{
		// rest + 1 >= 2 here, so a zero alpha(1) never lands in the denominator.
		value += alpha_m / alpha_value(query.alpha, rest + 1);
	}
	value *= query.k;
	return std::max(Rational(1), value);
}

inline Rational f_general(const AlphaSpec& alpha, long q, long m, const Rational& k = Rational(1))
{
	return f_general(BoundQuery{alpha, q, m, k});
}

/// FHG form: k * (1 + floor((m-2)/(q-1)) / m).
inline Rational f_fhg(long q, long m, const Rational& k = Rational(1))
{
	validate(BoundQuery{AlphaSpec::fhg(), q, m, k});
	return k * (Rational(1) + Rational((m - 2) / (q - 1), m));
}

/// ASHG form: k * (1 + floor((m-2)/(q-1))).
inline Rational f_ashg(long q, long m, const Rational& k = Rational(1))
{
	validate(BoundQuery{AlphaSpec::ashg(), q, m, k});
	return k * Rational(1 + (m - 2) / (q - 1));
}

/// q/(q-1): every q-size stable FHG partition is this-improvement stable.
inline Rational fhg_improvement_bound(long q)
{
	if (q < 2)
	{
		throw DomainError("improvement bound needs q >= 2");
	}
	return Rational(q, q - 1);
}

/// 3(m-1)/(2m): improvement cap for 3-size stable partitions of binary-weight FHGs.
inline Rational ssfhg_bound(long m)
{
	if (m < 4)
	{
		throw DomainError("binary FHG bound needs m >= 4");
	}
	return Rational(3 * (m - 1), 2 * m);
}

/// a(q)/a(q-1) >= (q-2)/(q-1) for every q in 2..n_max, compared cross-multiplied.
inline bool is_hospitable(const AlphaSpec& alpha, long n_max = default_class_check_limit)
{
	for (long q = 2; q <= n_max; ++q)
	{
		if (alpha_value(alpha, q) * Rational(q - 1) < alpha_value(alpha, q - 1) * Rational(q - 2))
		{
			return false;
		}
	}
	return true;
}

/// a(q) >= a(q+1) for q in 1..n_max-1. A zero alpha(1) marks the size-1 value as
/// unused (singletons have utility 0 regardless) and is not compared.
inline bool is_decreasing(const AlphaSpec& alpha, long n_max = default_class_check_limit)
{
	const long first = alpha_value(alpha, 1).sign() == 0 ? 2 : 1;
	for (long q = first; q < n_max; ++q)
	{
		if (alpha_value(alpha, q) < alpha_value(alpha, q + 1))
		{
			return false;
		}
	}
	return true;
}

/// (m-1) a(m) / a(2) <= 1 for m in 2..n_max; when it holds, the greedy 2-size
/// stable partition is core stable. The verdict is bounded by n_max.
inline bool core_exists_condition(const AlphaSpec& alpha, long n_max = default_class_check_limit)
{
	const Rational alpha_2 = alpha_value(alpha, 2);
	for (long m = 2; m <= n_max; ++m)
	{
		if (Rational(m - 1) * alpha_value(alpha, m) > alpha_2)
		{
			return false;
		}
	}
	return true;
}

/// 2 * max over m in q+1..n_max of f(q, m) with k = 1.
inline Rational cpoa_upper_bound(const AlphaSpec& alpha, long q, long n_max = default_class_check_limit)
{
	if (!is_decreasing(alpha, n_max))
	{
		throw PreconditionError("price-of-anarchy bound requires a decreasing alpha");
	}
	if (n_max < q + 1)
	{
		throw ArgumentError("n_max must be at least q + 1");
	}
	Rational best{1};
	for (long m = q + 1; m <= n_max; ++m)
	{
		best = std::max(best, f_general(alpha, q, m));
	}
	return Rational(2) * best;
}

} // namespace ahg

#endif // AHG_BOUNDS_HPP
