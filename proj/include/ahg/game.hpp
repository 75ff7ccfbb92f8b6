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

#ifndef AHG_GAME_HPP
#define AHG_GAME_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ahg/alpha.hpp"
#include "ahg/errors.hpp"
#include "ahg/rational.hpp"

namespace ahg {

using Agent = std::size_t;

/// Default cap on the number of agents; brute force downstream is exponential.
inline constexpr std::size_t default_max_agents = 20;

/// Dense symmetric weight matrix with zero diagonal.
class WeightMatrix
{
public:
	WeightMatrix() = default;
	explicit WeightMatrix(std::size_t n) : n_(n), w_(n * n) {}

	std::size_t size() const noexcept { return n_; }

	const Rational& operator()(Agent i, Agent j) const { return w_[i * n_ + j]; }

	/// Sets both u(i,j) and u(j,i).
	void set(Agent i, Agent j, const Rational& value)
	{
		if (i >= n_ || j >= n_)
		{
			throw RangeError("agent index out of range");
		}
		if (i == j)
		{
			if (value != Rational(0))
			{
				throw ArgumentError("u(i,i) must be zero");
			}
			return;
		}
		w_[i * n_ + j] = value;
		w_[j * n_ + i] = value;
	}

	/// Checks symmetry and zero diagonal; used on matrices filled cell by cell.
	void validate() const
	{
		for (Agent i = 0; i < n_; ++i)
		{
			if ((*this)(i, i) != Rational(0))
			{
				throw ArgumentError("u(i,i) must be zero");
			}
			for (Agent j = i + 1; j < n_; ++j)
			{
				if ((*this)(i, j) != (*this)(j, i))
				{
					throw ArgumentError("weights must be symmetric: u(" + std::to_string(i) + "," + std::to_string(j) + ")");
				}
			}
		}
	}

	static WeightMatrix from_rows(const std::vector<std::vector<Rational>>& rows)
	{
		WeightMatrix m(rows.size());
		for (std::size_t i = 0; i < rows.size(); ++i)
		{
			if (rows[i].size() != rows.size())
			{
				throw ArgumentError("weight matrix must be square");
			}
			for (std::size_t j = 0; j < rows.size(); ++j)
			{
				m.w_[i * m.n_ + j] = rows[i][j];
			}
		}
		m.validate();
		return m;
	}

	WeightMatrix scaled(const Rational& c) const
	{
		WeightMatrix out = *this;
		for (auto& x : out.w_)
		{
			x *= c;
		}
		return out;
	}

	friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

private:
	std::size_t n_ = 0;
	std::vector<Rational> w_;
};

struct Edge
{
	Agent i;
	Agent j;
	Rational weight;
};

/// A nonempty set of agents, stored sorted and deduplicated.
class Coalition
{
public:
	Coalition() = default;
	Coalition(std::initializer_list<Agent> members) : Coalition(std::vector<Agent>(members)) {}
	explicit Coalition(std::vector<Agent> members) : members_(std::move(members))
	{
		std::sort(members_.begin(), members_.end());
		members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
		if (members_.empty())
		{
			throw ArgumentError("coalition must be nonempty");
		}
	}

	std::span<const Agent> members() const noexcept { return members_; }
	std::size_t size() const noexcept { return members_.size(); }
	bool contains(Agent i) const { return std::binary_search(members_.begin(), members_.end(), i); }

	std::string str() const
	{
		std::string s = "{";
		for (std::size_t k = 0; k < members_.size(); ++k)
		{
			s += (k ? "," : "") + std::to_string(members_[k]);
		}
		return s + "}";
	}

	friend bool operator==(const Coalition&, const Coalition&) = default;
	friend auto operator<=>(const Coalition&, const Coalition&) = default;

private:
	std::vector<Agent> members_;
};

/// Coalition structure: disjoint coalitions covering 0..n-1.
class Partition
{
public:
	Partition() = default;
	Partition(std::vector<Coalition> coalitions, std::size_t n) : coalitions_(std::move(coalitions)), block_of_(n, n)
	{
		for (std::size_t b = 0; b < coalitions_.size(); ++b)
		{
			for (Agent i : coalitions_[b].members())
			{
				if (i >= n)
				{
					throw ArgumentError("partition mentions agent " + std::to_string(i) + " outside 0.." + std::to_string(n - 1));
				}
				if (block_of_[i] != n)
				{
					throw ArgumentError("agent " + std::to_string(i) + " appears in two coalitions");
				}
				block_of_[i] = b;
			}
		}
		for (Agent i = 0; i < n; ++i)
		{
			if (block_of_[i] == n)
			{
				throw ArgumentError("agent " + std::to_string(i) + " is not covered by the partition");
			}
		}
	}

	static Partition singletons(std::size_t n)
	{
		std::vector<Coalition> cs;
		for (Agent i = 0; i < n; ++i)
		{
			cs.push_back(Coalition{i});
		}
		return {std::move(cs), n};
	}

	/// labels[i] is the block index of agent i (any integers; blocks ordered by first appearance).
	static Partition from_labels(std::span<const std::size_t> labels)
	{
		std::vector<std::size_t> ids;
		std::vector<std::vector<Agent>> blocks;
		for (Agent i = 0; i < labels.size(); ++i)
		{
			auto it = std::find(ids.begin(), ids.end(), labels[i]);
			if (it == ids.end())
			{
				ids.push_back(labels[i]);
				blocks.emplace_back();
				it = ids.end() - 1;
			}
			blocks[static_cast<std::size_t>(it - ids.begin())].push_back(i);
		}
		std::vector<Coalition> cs;
		for (auto& b : blocks)
		{
			cs.emplace_back(std::move(b));
		}
		return {std::move(cs), labels.size()};
	}

	std::size_t agent_count() const noexcept { return block_of_.size(); }
	const std::vector<Coalition>& coalitions() const noexcept { return coalitions_; }
	const Coalition& coalition_of(Agent i) const { return coalitions_.at(block_of_.at(i)); }

	std::string str() const
	{
		std::string s = "{";
		for (std::size_t b = 0; b < coalitions_.size(); ++b)
		{
			s += (b ? "," : "") + coalitions_[b].str();
		}
		return s + "}";
	}

private:
	std::vector<Coalition> coalitions_;
	std::vector<std::size_t> block_of_;
};

/// n agents, symmetric rational weights u(i,j), and an alpha function.
class Game
{
public:
	Game(WeightMatrix weights, AlphaSpec alpha, std::size_t max_agents = default_max_agents)
		: weights_(std::move(weights)), alpha_(std::move(alpha))
	{
		if (weights_.size() == 0)
		{
			throw ArgumentError("game needs at least one agent");
		}
		if (weights_.size() > max_agents)
		{
			throw ResourceError("game has " + std::to_string(weights_.size()) + " agents; limit is " + std::to_string(max_agents));
		}
		if (alpha_.max_size() != 0 && alpha_.max_size() < weights_.size())
		{
			throw RangeError("alpha table shorter than the number of agents");
		}
		weights_.validate();
	}

	static Game from_edges(std::size_t n, const std::vector<Edge>& edges, AlphaSpec alpha, std::size_t max_agents = default_max_agents)
	{
		WeightMatrix w(n);
		for (const auto& e : edges)
		{
			w.set(e.i, e.j, e.weight);
		}
		return Game(std::move(w), std::move(alpha), max_agents);
	}

	std::size_t agent_count() const noexcept { return weights_.size(); }
	const WeightMatrix& weights() const noexcept { return weights_; }
	const Rational& weight(Agent i, Agent j) const { return weights_(i, j); }
	const AlphaSpec& alpha() const noexcept { return alpha_; }

	Game scaled(const Rational& c) const { return Game(weights_.scaled(c), alpha_, weights_.size()); }
	Game with_alpha(AlphaSpec alpha) const { return Game(weights_, std::move(alpha), weights_.size()); }

private:
	WeightMatrix weights_;
	AlphaSpec alpha_;
};

namespace detail {

inline Rational weight_sum(const WeightMatrix& w, Agent i, std::span<const Agent> members)
{
	Rational s;
	for (Agent j : members)
	{
		s += w(i, j);
	}
	return s;
}

} // namespace detail

/// u_i(C) = alpha(|C|) * sum over j in C of u(i,j).
inline Rational coalition_utility(const Game& game, const Coalition& c, Agent i)
{
	if (!c.contains(i))
	{
		throw ArgumentError("agent " + std::to_string(i) + " is not a member of " + c.str());
	}
	if (c.members().back() >= game.agent_count())
	{
		throw ArgumentError("coalition " + c.str() + " mentions agents outside the game");
	}
	return alpha_value(game.alpha(), static_cast<long>(c.size())) * detail::weight_sum(game.weights(), i, c.members());
}

inline Rational partition_utility(const Game& game, const Partition& p, Agent i)
{
	return coalition_utility(game, p.coalition_of(i), i);
}

inline std::vector<Rational> partition_utilities(const Game& game, const Partition& p)
{
	if (p.agent_count() != game.agent_count())
	{
		throw ArgumentError("partition and game disagree on the number of agents");
	}
	std::vector<Rational> out;
	out.reserve(game.agent_count());
	for (Agent i = 0; i < game.agent_count(); ++i)
	{
		out.push_back(partition_utility(game, p, i));
	}
	return out;
}

} // namespace ahg

#endif // AHG_GAME_HPP
