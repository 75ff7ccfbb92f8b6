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

#ifndef AHG_STABILITY_HPP
#define AHG_STABILITY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ahg/alpha.hpp"
#include "ahg/errors.hpp"
#include "ahg/game.hpp"
#include "ahg/rational.hpp"
#include "ahg/subsets.hpp"

namespace ahg {

/// A candidate blocking coalition of m agents with fixed baseline utilities
/// u_i(C) taken from some surrounding coalition structure.
class Scenario
{
public:
	Scenario(WeightMatrix weights, std::vector<Rational> baselines, AlphaSpec alpha)
		: weights_(std::move(weights)), baselines_(std::move(baselines)), alpha_(std::move(alpha))
	{
		if (weights_.size() == 0)
		{
			throw ArgumentError("scenario needs at least one agent");
		}
		if (baselines_.size() != weights_.size())
		{
			throw ArgumentError("scenario has " + std::to_string(weights_.size()) + " agents but " + std::to_string(baselines_.size()) + " baselines");
		}
		if (alpha_.max_size() != 0 && alpha_.max_size() < weights_.size())
		{
			throw RangeError("alpha table shorter than the scenario size");
		}
		weights_.validate();
	}

	std::size_t size() const noexcept { return weights_.size(); }
	const WeightMatrix& weights() const noexcept { return weights_; }
	const Rational& weight(Agent i, Agent j) const { return weights_(i, j); }
	const std::vector<Rational>& baselines() const noexcept { return baselines_; }
	const AlphaSpec& alpha() const noexcept { return alpha_; }

	Scenario scaled(const Rational& c) const
	{
		std::vector<Rational> b = baselines_;
		for (auto& x : b)
		{
			x *= c;
		}
		return Scenario(weights_.scaled(c), std::move(b), alpha_);
	}

	friend bool operator==(const Scenario&, const Scenario&) = default;

private:
	WeightMatrix weights_;
	std::vector<Rational> baselines_;
	AlphaSpec alpha_;
};

struct StabilityReport
{
	bool verdict = true;
	std::optional<Coalition> witness;
	std::size_t size_min = 1;
	std::size_t size_max = 1;
	Rational factor{1};

	explicit operator bool() const noexcept { return verdict; }
};

namespace detail {

// True iff every member i of `members` has alpha(|S|) * sum_j u(i,j) > thresholds[i].
inline bool all_exceed(const WeightMatrix& w, const Rational& alpha_s, std::span<const Agent> members,
					   std::span<const Rational> thresholds)
{
	for (Agent i : members)
	{
		if (alpha_s * weight_sum(w, i, members) <= thresholds[i])
		{
			return false;
		}
	}
	return true;
}

inline std::optional<Coalition> first_exceeding_subset(const WeightMatrix& w, const AlphaSpec& alpha, std::size_t size_min,
													   std::size_t size_max, std::span<const Rational> thresholds)
{
	std::optional<Coalition> found;
	for (std::size_t s = size_min; s <= size_max && !found; ++s)
	{
		const Rational alpha_s = alpha_value(alpha, static_cast<long>(s));
		for_each_combination(w.size(), s, [&](std::span<const Agent> members) {
			if (all_exceed(w, alpha_s, members, thresholds))
			{
				found.emplace(std::vector<Agent>(members.begin(), members.end()));
				return true;
			}
			return false;
		});
	}
	return found;
}

inline void require_positive(std::span<const Rational> baselines, const char* what)
{
	for (std::size_t i = 0; i < baselines.size(); ++i)
	{
		if (baselines[i].sign() <= 0)
		{
			throw DomainError(std::string(what) + ": baseline of agent " + std::to_string(i) + " is " + baselines[i].str() +
							  "; improvement factors need strictly positive baselines");
		}
	}
}

} // namespace detail

/// First coalition (by size, then lexicographically) with size in [size_min, size_max]
/// in which every member gets strictly more than k times their partition utility.
inline std::optional<Coalition> find_blocking_coalition(const Game& game, const Partition& p, std::size_t size_min, std::size_t size_max,
														const Rational& k, const EnumerationLimits& limits = {})
{
	const std::size_t n = game.agent_count();
	if (size_min < 1 || size_min > size_max || size_max > n)
	{
		throw ArgumentError("coalition sizes must satisfy 1 <= size_min <= size_max <= n");
	}
	if (k < Rational(1))
	{
		throw ArgumentError("improvement factor k must be at least 1");
	}
	check_enumeration_budget(n, size_min, size_max, limits);
	std::vector<Rational> thresholds = partition_utilities(game, p);
	for (auto& t : thresholds)
	{
		t *= k;
	}
	return detail::first_exceeding_subset(game.weights(), game.alpha(), size_min, size_max, thresholds);
}

inline StabilityReport make_report(std::optional<Coalition> witness, std::size_t size_min, std::size_t size_max, const Rational& k)
{
	StabilityReport r;
	r.verdict = !witness.has_value();
	r.witness = std::move(witness);
	r.size_min = size_min;
	r.size_max = size_max;
	r.factor = k;
	return r;
}

/// No blocking coalition of size at most q.
inline StabilityReport is_q_size_stable(const Game& game, const Partition& p, std::size_t q, const EnumerationLimits& limits = {})
{
	if (q < 1 || q > game.agent_count())
	{
		throw ArgumentError("q must satisfy 1 <= q <= n");
	}
	return make_report(find_blocking_coalition(game, p, 1, q, Rational(1), limits), 1, q, Rational(1));
}

inline StabilityReport is_core_stable(const Game& game, const Partition& p, const EnumerationLimits& limits = {})
{
	return is_q_size_stable(game, p, game.agent_count(), limits);
}

/// No coalition of size exactly q improves every member by a factor exceeding k.
inline StabilityReport is_qk_stable(const Game& game, const Partition& p, std::size_t q, const Rational& k,
									const EnumerationLimits& limits = {})
{
	if (q < 1 || q > game.agent_count())
	{
		throw ArgumentError("q must satisfy 1 <= q <= n");
	}
	return make_report(find_blocking_coalition(game, p, q, q, k, limits), q, q, k);
}

inline StabilityReport is_k_improvement_stable(const Game& game, const Partition& p, const Rational& k, const EnumerationLimits& limits = {})
{
	return make_report(find_blocking_coalition(game, p, 1, game.agent_count(), k, limits), 1, game.agent_count(), k);
}

/// First subset S (2 <= |S| <= q, by size then lexicographically) in which every
/// member strictly beats their baseline, or nullopt.
inline std::optional<Coalition> scenario_blocking_subset(const Scenario& s, std::size_t q, const EnumerationLimits& limits = {})
{
	if (q < 1 || q > s.size())
	{
		throw ArgumentError("q must satisfy 1 <= q <= m");
	}
	for (Agent i = 0; i < s.size(); ++i)
	{
		if (s.baselines()[i].sign() < 0)
		{
			return Coalition{i};
		}
	}
	if (q < 2)
	{
		return std::nullopt;
	}
	check_enumeration_budget(s.size(), 2, q, limits);
	return detail::first_exceeding_subset(s.weights(), s.alpha(), 2, q, s.baselines());
}

/// The fixed baselines are q-size core stable against every subset of the m agents.
inline bool scenario_q_size_stable(const Scenario& s, std::size_t q, const EnumerationLimits& limits = {})
{
	return !scenario_blocking_subset(s, q, limits).has_value();
}

/// Utility of agent i in the coalition of all m scenario agents.
inline Rational scenario_full_utility(const Scenario& s, Agent i)
{
	Rational sum;
	for (Agent j = 0; j < s.size(); ++j)
	{
		sum += s.weight(i, j);
	}
	return alpha_value(s.alpha(), static_cast<long>(s.size())) * sum;
}

/// min over agents of (utility in the full coalition) / baseline.
inline Rational min_improvement_factor(const Scenario& s)
{
	detail::require_positive(s.baselines(), "min_improvement_factor");
	std::optional<Rational> best;
	for (Agent i = 0; i < s.size(); ++i)
	{
		Rational f = scenario_full_utility(s, i) / s.baselines()[i];
		if (!best || f < *best)
		{
			best = std::move(f);
		}
	}
	return *best;
}

/// max over |C| = m of min over i in C of u_i(C) / u_i(partition): the least k
/// for which the partition is (m, k)-core stable.
inline Rational max_improvement_factor_at_size(const Game& game, const Partition& p, std::size_t m, const EnumerationLimits& limits = {})
{
	const std::size_t n = game.agent_count();
	if (m < 2 || m > n)
	{
		throw ArgumentError("coalition size must satisfy 2 <= m <= n");
	}
	const std::vector<Rational> baselines = partition_utilities(game, p);
	detail::require_positive(baselines, "max_improvement_factor_at_size");
	check_enumeration_budget(n, m, m, limits);
	const Rational alpha_m = alpha_value(game.alpha(), static_cast<long>(m));
	std::optional<Rational> best;
	for_each_combination(n, m, [&](std::span<const Agent> members) {
		std::optional<Rational> worst;
		for (Agent i : members)
		{
			Rational f = alpha_m * detail::weight_sum(game.weights(), i, members) / baselines[i];
			if (!worst || f < *worst)
			{
				worst = std::move(f);
				if (best && *worst <= *best)
				{
					break;
				}
			}
		}
		if (!best || *worst > *best)
		{
			best = std::move(worst);
		}
		return false;
	});
	return *best;
}

} // namespace ahg

#endif // AHG_STABILITY_HPP
