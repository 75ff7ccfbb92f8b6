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

#ifndef AHG_SEARCH_HPP
#define AHG_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ahg/alpha.hpp"
#include "ahg/errors.hpp"
#include "ahg/lp.hpp"
#include "ahg/stability.hpp"
#include "ahg/subsets.hpp"

// Searches for a q-size stable baseline that a size-m coalition improves on
// by a factor strictly above gamma.
//
// Stability is encoded by naming, for each subset S with 2 <= |S| <= q, one
// member that does not improve in S. For a fixed naming the remaining system is
// linear in the weights and baselines; strict improvement becomes a shared
// slack that the LP maximizes. Depth-first branch-and-bound over namings,
// branching only on subsets the current LP optimum still lets block.

namespace ahg {

struct SearchBudget
{
	std::uint64_t node_limit = 1'000'000;
	double time_limit_seconds = 600.0;
};

struct SearchProblem
{
	AlphaSpec alpha;
	long q = 2;
	long m = 3;
	Rational gamma{1};
	Rational weight_bound{10};   ///< |u(i,j)| <= B
	Rational baseline_bound{10}; ///< 1 <= u_i(C) <= U
	SearchBudget budget;
};

inline constexpr long max_search_agents = 12;

inline void validate(const SearchProblem& p)
{
	if (p.q < 1)
	{
		throw ArgumentError("search needs q >= 1");
	}
	if (p.m < p.q + 1)
	{
		throw ArgumentError("search needs m >= q + 1");
	}
	if (p.m > max_search_agents)
	{
		throw ResourceError("search is limited to m <= " + std::to_string(max_search_agents));
	}
	if (p.gamma < Rational(1))
	{
		throw ArgumentError("search needs gamma >= 1");
	}
	if (p.weight_bound.sign() <= 0)
	{
		throw ArgumentError("weight bound must be positive");
	}
	if (p.baseline_bound < Rational(1))
	{
		throw ArgumentError("baseline bound must be at least 1");
	}
	if (p.alpha.max_size() != 0 && p.alpha.max_size() < static_cast<std::size_t>(p.m))
	{
		throw RangeError("alpha table shorter than m");
	}
}

/// One designated non-improving member per subset; unassigned subsets are unconstrained.
class WitnessAssignment
{
public:
	void assign(const Coalition& subset, Agent witness)
	{
		if (!subset.contains(witness))
		{
			throw ArgumentError("witness " + std::to_string(witness) + " is not in " + subset.str());
		}
		entries_[subset] = witness;
	}

	std::optional<Agent> witness_of(const Coalition& subset) const
	{
		auto it = entries_.find(subset);
		return it == entries_.end() ? std::nullopt : std::optional<Agent>(it->second);
	}

	const std::map<Coalition, Agent>& entries() const noexcept { return entries_; }
	std::size_t size() const noexcept { return entries_.size(); }

private:
	std::map<Coalition, Agent> entries_;
};

/// Variable layout of the witness LP.
struct WitnessLayout
{
	std::size_t m = 0;

	std::size_t weight_var(Agent i, Agent j) const
	{
		if (i > j)
		{
			std::swap(i, j);
		}
		// Row-major index of (i, j), i < j, in the strict upper triangle.
		return i * (2 * m - i - 1) / 2 + (j - i - 1);
	}
	std::size_t weight_count() const { return m * (m - 1) / 2; }
	std::size_t baseline_var(Agent i) const { return weight_count() + i; }
	std::size_t slack_var() const { return weight_count() + m; }
};

/// Coefficients of "alpha(|S|) * sum_{j in S} u(witness, j) - b(witness)", which
/// must stay <= 0 for the witness not to improve in S.
inline std::vector<Rational> witness_row(const SearchProblem& p, const Coalition& subset, Agent witness)
{
	const WitnessLayout layout{static_cast<std::size_t>(p.m)};
	if (subset.members().back() >= layout.m)
	{
		throw ArgumentError("witness subset " + subset.str() + " exceeds the coalition");
	}
	if (!subset.contains(witness))
	{
		throw ArgumentError("witness " + std::to_string(witness) + " is not in " + subset.str());
	}
	const Rational a = alpha_value(p.alpha, static_cast<long>(subset.size()));
	std::vector<Rational> row(layout.slack_var() + 1);
	for (Agent j : subset.members())
	{
		if (j != witness)
		{
			row[layout.weight_var(witness, j)] = a;
		}
	}
	row[layout.baseline_var(witness)] = Rational(-1);
	return row;
}

/// Valid cuts for non-decreasing baselines. If no subset of size <= q blocks,
/// peel a content member w1 off S, then a content member w2 off S \ w1, and so
/// on down to a pair: alpha(s) * (weight inside S) <= sum_j alpha(s)/alpha(s-j+1) * b(w_j)
/// over s-1 distinct members. With baselines sorted, the largest coefficient
/// goes to the largest index, which bounds every peeling order.
/// Only size 3 and up is emitted; pairs are handled by the pair rows.
inline std::vector<std::vector<Rational>> clique_rows(const SearchProblem& p)
{
	const WitnessLayout layout{static_cast<std::size_t>(p.m)};
	std::vector<std::vector<Rational>> rows;
	for (long s = 2; s <= p.q; ++s)
	{
		if (alpha_value(p.alpha, s).sign() <= 0)
		{
			return rows;
		}
	}
	for (long s = 3; s <= p.q; ++s)
	{
		const Rational a = alpha_value(p.alpha, s);
		std::vector<Rational> k;
		for (long t = s; t >= 2; --t)
		{
			k.push_back(a / alpha_value(p.alpha, t));
		}
		std::sort(k.begin(), k.end(), [](const Rational& x, const Rational& y) { return y < x; });
		for_each_combination(layout.m, static_cast<std::size_t>(s), [&](std::span<const Agent> members) {
			std::vector<Rational> row(layout.slack_var() + 1);
			for (std::size_t x = 0; x < members.size(); ++x)
			{
				for (std::size_t y = x + 1; y < members.size(); ++y)
				{
					row[layout.weight_var(members[x], members[y])] = a;
				}
			}
			for (std::size_t j = 0; j < k.size(); ++j)
			{
				row[layout.baseline_var(members[members.size() - 1 - j])] = -k[j];
			}
			rows.push_back(std::move(row));
			return false;
		});
	}
	return rows;
}

/// LP over (weights, baselines, slack): box bounds, one "does not improve" row per
/// assigned subset, one "improves by gamma plus slack" row per agent; maximize slack.
inline lp::LinearProgram witness_system_lp(const SearchProblem& p, const WitnessAssignment& w)
{
	validate(p);
	const WitnessLayout layout{static_cast<std::size_t>(p.m)};
	const std::size_t m = layout.m;
	lp::LinearProgram prog;
	for (Agent i = 0; i < m; ++i)
	{
		for (Agent j = i + 1; j < m; ++j)
		{
			prog.add_variable("u(" + std::to_string(i) + "," + std::to_string(j) + ")");
		}
	}
	for (Agent i = 0; i < m; ++i)
	{
		prog.add_variable("b(" + std::to_string(i) + ")");
	}
	prog.add_variable("slack");

	for (std::size_t v = 0; v < layout.weight_count(); ++v)
	{
		prog.add_sparse_constraint({{v, Rational(1)}}, lp::Relation::LessEqual, p.weight_bound);
		prog.add_sparse_constraint({{v, Rational(1)}}, lp::Relation::GreaterEqual, -p.weight_bound);
	}
	for (Agent i = 0; i < m; ++i)
	{
		prog.add_sparse_constraint({{layout.baseline_var(i), Rational(1)}}, lp::Relation::GreaterEqual, Rational(1));
		prog.add_sparse_constraint({{layout.baseline_var(i), Rational(1)}}, lp::Relation::LessEqual, p.baseline_bound);
	}
	// Agents are interchangeable, so baselines may be taken non-decreasing.
	// A pair then needs no branching: if either member is content, so is the
	// member with the larger baseline.
	for (Agent i = 0; i + 1 < m; ++i)
	{
		prog.add_sparse_constraint({{layout.baseline_var(i), Rational(1)}, {layout.baseline_var(i + 1), Rational(-1)}}, lp::Relation::LessEqual,
								   Rational(0));
	}
	if (p.q >= 2)
	{
		const Rational a2 = alpha_value(p.alpha, 2);
		for (Agent i = 0; i < m; ++i)
		{
			for (Agent j = i + 1; j < m; ++j)
			{
				if (!w.witness_of(Coalition{i, j}))
				{
					prog.add_sparse_constraint({{layout.weight_var(i, j), a2}, {layout.baseline_var(j), Rational(-1)}}, lp::Relation::LessEqual,
											   Rational(0));
				}
			}
		}
	}
	for (const auto& row : clique_rows(p))
	{
		prog.add_constraint(row, lp::Relation::LessEqual, Rational(0));
	}
	for (const auto& [subset, witness] : w.entries())
	{
		prog.add_constraint(witness_row(p, subset, witness), lp::Relation::LessEqual, Rational(0));
	}
	const Rational a_m = alpha_value(p.alpha, p.m);
	for (Agent i = 0; i < m; ++i)
	{
		std::vector<std::pair<std::size_t, Rational>> terms;
		for (Agent j = 0; j < m; ++j)
		{
			if (j != i)
			{
				terms.emplace_back(layout.weight_var(i, j), a_m);
			}
		}
		terms.emplace_back(layout.baseline_var(i), -p.gamma);
		terms.emplace_back(layout.slack_var(), Rational(-1));
		prog.add_sparse_constraint(terms, lp::Relation::GreaterEqual, Rational(0));
	}
	prog.set_objective_coefficient(layout.slack_var(), Rational(1));
	return prog;
}

enum class SearchVerdict
{
	Feasible,
	InfeasibleWithinBounds,
	BudgetExhausted
};

inline std::string verdict_name(SearchVerdict v)
{
	switch (v)
	{
	case SearchVerdict::Feasible: return "Feasible";
	case SearchVerdict::InfeasibleWithinBounds: return "InfeasibleWithinBounds";
	case SearchVerdict::BudgetExhausted: return "BudgetExhausted";
	}
	return "?";
}

struct SearchStatistics
{
	std::uint64_t nodes = 0;
	std::uint64_t lps = 0;
};

struct SearchResult
{
	SearchVerdict verdict = SearchVerdict::InfeasibleWithinBounds;
	std::optional<Scenario> scenario; ///< set iff Feasible
	SearchStatistics statistics;
};

/// Independent re-check of a candidate against every requirement of a Feasible verdict.
inline bool verify_certificate(const SearchProblem& p, const Scenario& s)
{
	if (s.size() != static_cast<std::size_t>(p.m) || !(s.alpha() == p.alpha))
	{
		return false;
	}
	for (Agent i = 0; i < s.size(); ++i)
	{
		for (Agent j = i + 1; j < s.size(); ++j)
		{
			if (abs(s.weight(i, j)) > p.weight_bound)
			{
				return false;
			}
		}
		if (s.baselines()[i] < Rational(1) || s.baselines()[i] > p.baseline_bound)
		{
			return false;
		}
	}
	return scenario_q_size_stable(s, static_cast<std::size_t>(p.q)) && min_improvement_factor(s) > p.gamma;
}

namespace detail {

struct SearchNode
{
	WitnessAssignment assignment;
	std::shared_ptr<const lp::Solver> solved; ///< the node's LP, if already solved
};

class WitnessSearch
{
public:
	explicit WitnessSearch(const SearchProblem& p)
		: problem_(p), layout_{static_cast<std::size_t>(p.m)}, start_(std::chrono::steady_clock::now())
	{
	}

	enum class Expansion
	{
		Pruned,
		Certificate,
		Branched,
		OutOfBudget
	};

	// Solves the node's LP (or takes the one solved while branching its parent).
	// Every subset that blocks at the LP optimum is tried with each witness; the
	// subset leaving the fewest feasible children is branched on, ties going to
	// the first in size-then-lexicographic order. On Branched, children are
	// appended in witness index order with their LPs already solved.
	Expansion expand(const SearchNode& node, std::vector<SearchNode>& children, std::optional<Scenario>& certificate)
	{
		if (stop_.load(std::memory_order_relaxed) || out_of_budget())
		{
			return Expansion::OutOfBudget;
		}
		nodes_.fetch_add(1, std::memory_order_relaxed);
		std::shared_ptr<const lp::Solver> solver = node.solved;
		if (!solver)
		{
			solver = std::make_shared<lp::Solver>(witness_system_lp(problem_, node.assignment));
			lps_.fetch_add(1, std::memory_order_relaxed);
		}
		if (!alive(*solver))
		{
			return Expansion::Pruned;
		}
		Scenario point = to_scenario(solver->result().assignment);
		const auto blocking = blocking_subsets(point);
		if (blocking.empty())
		{
			if (!verify_certificate(problem_, point))
			{
				throw std::logic_error("search produced a certificate that fails verification");
			}
			certificate = std::move(point);
			return Expansion::Certificate;
		}
		// Score: number of feasible children, then their total slack.
		std::vector<SearchNode> best;
		Rational best_slack;
		bool have_best = false;
		std::vector<SearchNode> trial;
		for (const Coalition& subset : blocking)
		{
			if (node.assignment.witness_of(subset))
			{
				throw std::logic_error("LP optimum violates its own witness constraint");
			}
			trial.clear();
			Rational slack;
			bool worse = false;
			for (Agent i : subset.members())
			{
				auto child_solver = std::make_shared<lp::Solver>(*solver);
				child_solver->add_constraint(witness_row(problem_, subset, i), lp::Relation::LessEqual, Rational(0), Rational(0));
				lps_.fetch_add(1, std::memory_order_relaxed);
				if (!alive(*child_solver))
				{
					continue;
				}
				slack += child_solver->result().value;
				SearchNode child;
				child.assignment = node.assignment;
				child.assignment.assign(subset, i);
				child.solved = std::move(child_solver);
				trial.push_back(std::move(child));
				if (have_best && trial.size() > best.size())
				{
					worse = true;
					break;
				}
			}
			if (!worse && (!have_best || trial.size() < best.size() || (trial.size() == best.size() && slack < best_slack)))
			{
				best.swap(trial);
				best_slack = slack;
				have_best = true;
			}
			if (best.empty())
			{
				break;
			}
		}
		if (best.empty())
		{
			return Expansion::Pruned;
		}
		for (auto& child : best)
		{
			children.push_back(std::move(child));
		}
		return Expansion::Branched;
	}

	// Depth-first from `root`; children explored in witness index order.
	SearchVerdict run_depth_first(SearchNode root, std::optional<Scenario>& certificate)
	{
		std::vector<SearchNode> stack;
		stack.push_back(std::move(root));
		std::vector<SearchNode> children;
		while (!stack.empty())
		{
			SearchNode node = std::move(stack.back());
			stack.pop_back();
			children.clear();
			switch (expand(node, children, certificate))
			{
			case Expansion::Certificate:
				return SearchVerdict::Feasible;
			case Expansion::OutOfBudget:
				return SearchVerdict::BudgetExhausted;
			case Expansion::Pruned:
				break;
			case Expansion::Branched:
				for (auto it = children.rbegin(); it != children.rend(); ++it)
				{
					stack.push_back(std::move(*it));
				}
				break;
			}
		}
		return SearchVerdict::InfeasibleWithinBounds;
	}

	void request_stop() { stop_.store(true, std::memory_order_relaxed); }

	SearchStatistics statistics() const { return {nodes_.load(), lps_.load()}; }

private:
	bool out_of_budget() const
	{
		if (nodes_.load(std::memory_order_relaxed) >= problem_.budget.node_limit)
		{
			return true;
		}
		const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
		return elapsed.count() > problem_.budget.time_limit_seconds;
	}

	static bool alive(const lp::Solver& solver)
	{
		const lp::Result& r = solver.result();
		if (r.status == lp::Status::Unbounded)
		{
			throw std::logic_error("witness LP is bounded by construction");
		}
		return r.status == lp::Status::Optimal && r.value.sign() > 0;
	}

	// Subsets of size 2..q in which every member strictly improves on its baseline.
	std::vector<Coalition> blocking_subsets(const Scenario& s) const
	{
		std::vector<Coalition> out;
		for_each_subset(layout_.m, 2, static_cast<std::size_t>(problem_.q), [&](std::span<const Agent> members) {
			const Rational a = alpha_value(problem_.alpha, static_cast<long>(members.size()));
			for (Agent i : members)
			{
				Rational sum;
				for (Agent j : members)
				{
					sum += s.weight(i, j);
				}
				if (!(a * sum > s.baselines()[i]))
				{
					return false;
				}
			}
			out.emplace_back(std::vector<Agent>(members.begin(), members.end()));
			return false;
		});
		return out;
	}

	Scenario to_scenario(const std::vector<Rational>& x) const
	{
		WeightMatrix w(layout_.m);
		std::vector<Rational> baselines;
		for (Agent i = 0; i < layout_.m; ++i)
		{
			for (Agent j = i + 1; j < layout_.m; ++j)
			{
				w.set(i, j, x[layout_.weight_var(i, j)]);
			}
			baselines.push_back(x[layout_.baseline_var(i)]);
		}
		return Scenario(std::move(w), std::move(baselines), problem_.alpha);
	}

	const SearchProblem& problem_;
	WitnessLayout layout_;
	std::chrono::steady_clock::time_point start_;
	std::atomic<std::uint64_t> nodes_{0};
	std::atomic<std::uint64_t> lps_{0};
	std::atomic<bool> stop_{false};
};

} // namespace detail

/// Feasible results carry a scenario that has passed verify_certificate.
/// With threads > 1 the root is expanded breadth-first and the frontier is
/// shared among workers; the certificate may then differ between runs.
inline SearchResult search_blocking_scenario(const SearchProblem& p, unsigned threads = 1)
{
	validate(p);
	detail::WitnessSearch search(p);
	SearchResult result;
	std::optional<Scenario> certificate;

	if (threads <= 1)
	{
		result.verdict = search.run_depth_first({}, certificate);
		result.scenario = std::move(certificate);
		result.statistics = search.statistics();
		return result;
	}

	std::deque<detail::SearchNode> frontier;
	frontier.emplace_back();
	const std::size_t target = static_cast<std::size_t>(threads) * 4;
	std::vector<detail::SearchNode> children;
	while (!frontier.empty() && frontier.size() < target)
	{
		detail::SearchNode node = std::move(frontier.front());
		frontier.pop_front();
		children.clear();
		switch (search.expand(node, children, certificate))
		{
		case detail::WitnessSearch::Expansion::Certificate:
			result.verdict = SearchVerdict::Feasible;
			result.scenario = std::move(certificate);
			result.statistics = search.statistics();
			return result;
		case detail::WitnessSearch::Expansion::OutOfBudget:
			result.verdict = SearchVerdict::BudgetExhausted;
			result.statistics = search.statistics();
			return result;
		case detail::WitnessSearch::Expansion::Pruned:
			break;
		case detail::WitnessSearch::Expansion::Branched:
			for (auto& c : children)
			{
				frontier.push_back(std::move(c));
			}
			break;
		}
	}

	std::vector<detail::SearchNode> work(std::make_move_iterator(frontier.begin()), std::make_move_iterator(frontier.end()));
	std::atomic<std::size_t> next{0};
	std::mutex mutex;
	bool exhausted = false;
	std::exception_ptr failure;
	auto worker = [&] {
		try
		{
			while (true)
			{
				const std::size_t idx = next.fetch_add(1);
				if (idx >= work.size())
				{
					return;
				}
				std::optional<Scenario> found;
				const SearchVerdict v = search.run_depth_first(std::move(work[idx]), found);
				std::lock_guard lock(mutex);
				if (v == SearchVerdict::Feasible)
				{
					if (!certificate)
					{
						certificate = std::move(found);
					}
					search.request_stop();
					return;
				}
				if (v == SearchVerdict::BudgetExhausted)
				{
					exhausted = true;
					return;
				}
			}
		}
		catch (...)
		{
			std::lock_guard lock(mutex);
			failure = std::current_exception();
			search.request_stop();
		}
	};
	std::vector<std::thread> pool;
	for (unsigned t = 0; t < threads; ++t)
	{
		pool.emplace_back(worker);
	}
	for (auto& th : pool)
	{
		th.join();
	}
	if (failure)
	{
		std::rethrow_exception(failure);
	}
	result.statistics = search.statistics();
	if (certificate)
	{
		result.verdict = SearchVerdict::Feasible;
		result.scenario = std::move(certificate);
	}
	else
	{
		result.verdict = exhausted ? SearchVerdict::BudgetExhausted : SearchVerdict::InfeasibleWithinBounds;
	}
	return result;
}

} // namespace ahg

#endif // AHG_SEARCH_HPP
