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

#ifndef AHG_SUBSETS_HPP
#define AHG_SUBSETS_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ahg/errors.hpp"
#include "ahg/game.hpp"

namespace ahg {

/// Caps on exhaustive enumeration. Exceeding them is a ResourceError.
struct EnumerationLimits
{
	std::size_t max_agents = default_max_agents;
	std::uint64_t max_subsets = std::uint64_t{1} << 21;
};

inline std::uint64_t binomial(std::size_t n, std::size_t k)
{
	if (k > n)
	{
		return 0;
	}
	k = std::min(k, n - k);
	std::uint64_t r = 1;
	for (std::size_t i = 1; i <= k; ++i)
	{
		r = r * (n - k + i) / i;
	}
	return r;
}

/// Number of subsets of an n-set with size in [size_min, size_max].
inline std::uint64_t subset_count(std::size_t n, std::size_t size_min, std::size_t size_max)
{
	std::uint64_t total = 0;
	for (std::size_t s = size_min; s <= size_max && s <= n; ++s)
	{
		total += binomial(n, s);
	}
	return total;
}

inline void check_enumeration_budget(std::size_t n, std::size_t size_min, std::size_t size_max, const EnumerationLimits& limits)
{
	if (n > limits.max_agents)
	{
		throw ResourceError("exhaustive check over " + std::to_string(n) + " agents exceeds the limit of " + std::to_string(limits.max_agents));
	}
	if (subset_count(n, size_min, size_max) > limits.max_subsets)
	{
		throw ResourceError("exhaustive check would visit more than " + std::to_string(limits.max_subsets) + " subsets");
	}
}

/// Visits every size-k subset of {0..n-1} in lexicographic order.
/// The visitor returns true to stop; the function returns true if stopped.
template <typename Visitor>
bool for_each_combination(std::size_t n, std::size_t k, Visitor&& visit)
{
	if (k > n)
	{
		return false;
	}
	std::vector<Agent> idx(k);
	std::iota(idx.begin(), idx.end(), Agent{0});
	while (true)
	{
		if (visit(std::span<const Agent>(idx)))
		{
			return true;
		}
		std::size_t pos = k;
		while (pos > 0 && idx[pos - 1] == n - k + pos - 1)
		{
			--pos;
		}
		if (pos == 0)
		{
			return false;
		}
		++idx[pos - 1];
		for (std::size_t t = pos; t < k; ++t)
		{
			idx[t] = idx[t - 1] + 1;
		}
	}
}

/// Sizes ascending, then lexicographic within a size.
template <typename Visitor>
bool for_each_subset(std::size_t n, std::size_t size_min, std::size_t size_max, Visitor&& visit)
{
	for (std::size_t s = size_min; s <= size_max && s <= n; ++s)
	{
		if (for_each_combination(n, s, visit))
		{
			return true;
		}
	}
	return false;
}

} // namespace ahg

#endif // AHG_SUBSETS_HPP
