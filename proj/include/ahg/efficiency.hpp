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

#ifndef AHG_EFFICIENCY_HPP
#define AHG_EFFICIENCY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ahg/errors.hpp"
#include "ahg/game.hpp"
#include "ahg/rational.hpp"
#include "ahg/stability.hpp"

namespace ahg {

/// Bell-number guard for exhaustive partition enumeration (Bell(13) = 27,644,437).
inline constexpr std::size_t max_partition_agents = 13;

inline Rational social_welfare(const Game& game, const Partition& p)
{
	Rational sw;
	for (const auto& u : partition_utilities(game, p))
	{
		sw += u;
	}
	return sw;
}

/// Set partitions of {0..n-1} as restricted growth strings: a[0] = 0 and
/// a[i] <= 1 + max(a[0..i-1]). Strings are visited in lexicographic order.
class PartitionEnumerator
{
public:
	explicit PartitionEnumerator(std::size_t n) : labels_(n, 0), maxima_(n, 0)
	{
		if (n == 0)
		{
			throw ArgumentError("partition enumeration needs n >= 1");
		}
		if (n > max_partition_agents)
		{
			throw ResourceError("partition enumeration is limited to n <= " + std::to_string(max_partition_agents));
		}
	}

	const std::vector<std::size_t>& labels() const noexcept { return labels_; }
	Partition partition() const { return Partition::from_labels(labels_); }

	/// Advances to the next string; false after the last one.
	bool next()
	{
		const std::size_t n = labels_.size();
		for (std::size_t i = n; i-- > 1;)
		{
			if (labels_[i] <= maxima_[i - 1])
			{
				++labels_[i];
				maxima_[i] = std::max(maxima_[i - 1], labels_[i]);
				for (std::size_t t = i + 1; t < n; ++t)
				{
					labels_[t] = 0;
					maxima_[t] = maxima_[i];
				}
				return true;
			}
		}
		return false;
	}

private:
	std::vector<std::size_t> labels_;
	std::vector<std::size_t> maxima_;
};

/// Calls visit(partition) once for every set partition of n agents.
template <typename Visitor>
void for_each_partition(std::size_t n, Visitor&& visit)
{
	PartitionEnumerator e(n);
	do
	{
		visit(e.partition());
	} while (e.next());
}

inline std::vector<Partition> enumerate_partitions(std::size_t n)
{
	std::vector<Partition> out;
	for_each_partition(n, [&](Partition p) { out.push_back(std::move(p)); });
	return out;
}

enum class CpoaKind
{
	Ratio,          ///< optimum / worst stable welfare, worst stable welfare > 0
	Unbounded,      ///< worst stable welfare <= 0 < optimum
	Undefined,      ///< optimal welfare is 0; value reported as 1
	NoStableOutcome ///< no partition satisfies the stability notion
};

inline std::string cpoa_kind_name(CpoaKind k)
{
	switch (k)
	{
	case CpoaKind::Ratio: return "Ratio";
	case CpoaKind::Unbounded: return "Unbounded";
	case CpoaKind::Undefined: return "Undefined";
	case CpoaKind::NoStableOutcome: return "NoStableOutcome";
	}
	return "?";
}

struct CpoaResult
{
	CpoaKind kind = CpoaKind::Undefined;
	Rational value{1}; ///< meaningful for Ratio and Undefined
	Rational optimal_welfare;
	std::optional<Rational> worst_stable_welfare;
	std::optional<Partition> worst_stable_partition;
	std::size_t stable_count = 0;
};

namespace detail {

template <typename IsStable>
CpoaResult core_price_of_anarchy(const Game& game, IsStable&& is_stable)
{
	CpoaResult r;
	bool first = true;
	for_each_partition(game.agent_count(), [&](const Partition& p) {
		const Rational sw = social_welfare(game, p);
		if (first || sw > r.optimal_welfare)
		{
			r.optimal_welfare = sw;
			first = false;
		}
		if (is_stable(p))
		{
			++r.stable_count;
			if (!r.worst_stable_welfare || sw < *r.worst_stable_welfare)
			{
				r.worst_stable_welfare = sw;
				r.worst_stable_partition = p;
			}
		}
	});
	if (!r.worst_stable_welfare)
	{
		r.kind = CpoaKind::NoStableOutcome;
	}
	else if (r.optimal_welfare.sign() == 0)
	{
		r.kind = CpoaKind::Undefined;
		r.value = Rational(1);
	}
	else if (r.worst_stable_welfare->sign() <= 0)
	{
		r.kind = CpoaKind::Unbounded;
	}
	else
	{
		r.kind = CpoaKind::Ratio;
		r.value = r.optimal_welfare / *r.worst_stable_welfare;
	}
	return r;
}

} // namespace detail

/// Optimal welfare over the worst welfare among q-size stable partitions.
inline CpoaResult q_size_cpoa(const Game& game, std::size_t q)
{
	if (q < 1 || q > game.agent_count())
	{
		throw ArgumentError("q must satisfy 1 <= q <= n");
	}
	return detail::core_price_of_anarchy(game, [&](const Partition& p) { return is_q_size_stable(game, p, q).verdict; });
}

/// Optimal welfare over the worst welfare among k-improvement stable partitions.
inline CpoaResult k_impr_cpoa(const Game& game, const Rational& k)
{
	if (k < Rational(1))
	{
		throw ArgumentError("k must be at least 1");
	}
	return detail::core_price_of_anarchy(game, [&](const Partition& p) { return is_k_improvement_stable(game, p, k).verdict; });
}

/// Greedy matching on positive-weight pairs: repeatedly pair the two unmatched
/// agents with the largest weight (ties go to the lexicographically smallest
/// pair); everyone else stays alone. 2-size core stable for every alpha.
inline Partition greedy_two_size(const Game& game)
{
	const std::size_t n = game.agent_count();
	std::vector<std::tuple<Rational, Agent, Agent>> pairs;
	for (Agent i = 0; i < n; ++i)
	{
		for (Agent j = i + 1; j < n; ++j)
		{
			if (game.weight(i, j).sign() > 0)
			{
				pairs.emplace_back(game.weight(i, j), i, j);
			}
		}
	}
	std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });
	std::vector<bool> matched(n, false);
	std::vector<Coalition> blocks;
	for (const auto& [w, i, j] : pairs)
	{
		if (!matched[i] && !matched[j])
		{
			matched[i] = matched[j] = true;
			blocks.push_back(Coalition{i, j});
		}
	}
	for (Agent i = 0; i < n; ++i)
	{
		if (!matched[i])
		{
			blocks.push_back(Coalition{i});
		}
	}
	std::sort(blocks.begin(), blocks.end(),
			  [](const Coalition& a, const Coalition& b) { return a.members().front() < b.members().front(); });
	return Partition(std::move(blocks), n);
}

} // namespace ahg

#endif // AHG_EFFICIENCY_HPP
