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


#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "ahg/ahg.hpp"
#include "oracles.hpp"

using namespace ahg;

namespace {

Game example_one(AlphaSpec alpha)
{
	return Game::from_edges(4, {{0, 1, Rational(3)}, {1, 2, Rational(3)}, {2, 3, Rational(3)}, {3, 0, Rational(3)}, {0, 2, Rational(2)}},
							std::move(alpha));
}

// Every restricted growth string of length n, by plain recursion.
void all_labelings(std::size_t n, const std::function<void(const std::vector<int>&)>& visit)
{
	std::vector<int> labels(n, 0);
	std::function<void(std::size_t, int)> rec = [&](std::size_t i, int blocks) {
		if (i == n)
		{
			visit(labels);
			return;
		}
		for (int b = 0; b <= blocks; ++b)
		{
			labels[i] = b;
			rec(i + 1, std::max(blocks, b + 1));
		}
	};
	labels[0] = 0;
	rec(1, 1);
}

struct OracleCpoa
{
	mpq_class optimum;
	std::optional<mpq_class> worst;
};

OracleCpoa oracle_cpoa(const Game& g, const std::string& name, int size_max, const mpq_class& k)
{
	const auto W = oracle::matrix_of(g.weights());
	const auto a = oracle::alpha(name);
	OracleCpoa out;
	bool first = true;
	all_labelings(g.agent_count(), [&](const std::vector<int>& labels) {
		const auto base = oracle::baselines(W, a, labels);
		mpq_class sw = 0;
		for (const auto& b : base)
		{
			sw += b;
		}
		if (first || sw > out.optimum)
		{
			out.optimum = sw;
			first = false;
		}
		if (!oracle::any_blocking(W, a, base, 1, size_max, k) && (!out.worst || sw < *out.worst))
		{
			out.worst = sw;
		}
	});
	return out;
}

} // namespace

TEST(Welfare, Examples)
{
	const Partition p({Coalition{0, 1}, Coalition{2, 3}}, 4);
	EXPECT_EQ(social_welfare(example_one(AlphaSpec::ashg()), p), Rational(12));
	EXPECT_EQ(social_welfare(example_one(AlphaSpec::fhg()), p), Rational(6));
	EXPECT_EQ(social_welfare(example_one(AlphaSpec::ashg()), Partition::singletons(4)), Rational(0));
}

TEST(Partitions, BellNumbers)
{
	const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147};
	for (std::size_t n = 1; n <= 9; ++n)
	{
		std::size_t count = 0;
		for_each_partition(n, [&](const Partition&) { ++count; });
		EXPECT_EQ(count, bell[n]) << n;
	}
	EXPECT_EQ(enumerate_partitions(3).size(), 5u);
	EXPECT_EQ(enumerate_partitions(4).size(), 15u);
	EXPECT_EQ(enumerate_partitions(1).size(), 1u);
	EXPECT_THROW(PartitionEnumerator(14), ResourceError);
	EXPECT_THROW(PartitionEnumerator(0), ArgumentError);
}

TEST(Partitions, DistinctAndInGrowthStringOrder)
{
	std::set<std::string> seen;
	std::vector<std::size_t> previous;
	PartitionEnumerator e(6);
	do
	{
		EXPECT_TRUE(seen.insert(e.partition().str()).second);
		if (!previous.empty())
		{
			EXPECT_LT(previous, e.labels());
		}
		previous = e.labels();
	} while (e.next());
	EXPECT_EQ(seen.size(), 203u);
}

TEST(Cpoa, ZeroGameIsUndefined)
{
	const Game g(WeightMatrix(4), AlphaSpec::fhg());
	for (std::size_t q = 1; q <= 4; ++q)
	{
		const auto r = q_size_cpoa(g, q);
		EXPECT_EQ(r.kind, CpoaKind::Undefined);
		EXPECT_EQ(r.value, Rational(1));
		EXPECT_EQ(r.stable_count, 15u);
	}
	EXPECT_EQ(k_impr_cpoa(g, Rational(2)).value, Rational(1));
}

TEST(Cpoa, ExampleOne)
{
	const Game g = example_one(AlphaSpec::fhg());
	const auto r = q_size_cpoa(g, 2);
	ASSERT_EQ(r.kind, CpoaKind::Ratio);
	EXPECT_LE(r.value, Rational(4));
	// Best is the grand coalition: (3+3+2) + (3+3) + (3+3+2) + (3+3) over 4.
	EXPECT_EQ(r.optimal_welfare, Rational(7));
	const auto k = k_impr_cpoa(g, Rational(2));
	ASSERT_EQ(k.kind, CpoaKind::Ratio);
	EXPECT_LE(k.value, Rational(4));
	EXPECT_THROW(q_size_cpoa(g, 5), ArgumentError);
	EXPECT_THROW(k_impr_cpoa(g, Rational(1, 2)), ArgumentError);
}

TEST(Cpoa, UnboundedWhenWorstStableWelfareIsNotPositive)
{
	// Agents 0 and 1 like each other, agent 2 dislikes both: {0,1},{2} has welfare 2,
	// the singletons are 1-size stable with welfare 0.
	const Game g = Game::from_edges(3, {{0, 1, Rational(1)}, {0, 2, Rational(-1)}, {1, 2, Rational(-1)}}, AlphaSpec::ashg());
	const auto r = q_size_cpoa(g, 1);
	EXPECT_EQ(r.kind, CpoaKind::Unbounded);
	EXPECT_EQ(r.optimal_welfare, Rational(2));
	EXPECT_EQ(*r.worst_stable_welfare, Rational(0));
}

TEST(Cpoa, AgreesWithOracle)
{
	std::mt19937_64 rng(59);
	int kinds[4] = {0, 0, 0, 0};
	for (int t = 0; t < 60; ++t)
	{
		const std::size_t n = 2 + t % 5;
		const auto& name = oracle::alpha_names()[t % 5];
		const Game g(oracle::random_weights(rng, n, -2, 5), parse_alpha_name(name));
		const std::size_t q = 1 + t % n;
		const auto r = q_size_cpoa(g, q);
		const auto ref = oracle_cpoa(g, name, static_cast<int>(q), 1);
		++kinds[static_cast<int>(r.kind)];
		EXPECT_EQ(oracle::to_mpq(r.optimal_welfare), ref.optimum);
		ASSERT_EQ(r.worst_stable_welfare.has_value(), ref.worst.has_value());
		if (ref.worst)
		{
			EXPECT_EQ(oracle::to_mpq(*r.worst_stable_welfare), *ref.worst);
			EXPECT_EQ(social_welfare(g, *r.worst_stable_partition), *r.worst_stable_welfare);
			EXPECT_TRUE(is_q_size_stable(g, *r.worst_stable_partition, q).verdict);
		}
		if (r.kind == CpoaKind::Ratio)
		{
			EXPECT_EQ(oracle::to_mpq(r.value), ref.optimum / *ref.worst);
		}
		const Rational k(3, 2);
		const auto rk = k_impr_cpoa(g, k);
		const auto refk = oracle_cpoa(g, name, static_cast<int>(n), oracle::to_mpq(k));
		ASSERT_EQ(rk.worst_stable_welfare.has_value(), refk.worst.has_value());
		if (refk.worst)
		{
			EXPECT_EQ(oracle::to_mpq(*rk.worst_stable_welfare), *refk.worst);
		}
	}
	EXPECT_GT(kinds[static_cast<int>(CpoaKind::Ratio)], 10);
}

TEST(Cpoa, CorollaryBoundsOnRandomGames)
{
	std::mt19937_64 rng(61);
	for (int t = 0; t < 40; ++t)
	{
		const std::size_t n = 3 + t % 4;
		const auto w = oracle::random_weights(rng, n, 0, 5);
		const Game fhg(w, AlphaSpec::fhg());
		const Game mfhg(w, AlphaSpec::mfhg());
		for (long q : {2L, 3L})
		{
			const auto r = q_size_cpoa(fhg, static_cast<std::size_t>(q));
			if (r.kind == CpoaKind::Ratio)
			{
				EXPECT_LE(r.value, Rational(2 * q, q - 1));
			}
			EXPECT_NE(r.kind, CpoaKind::Unbounded);
			const auto rm = q_size_cpoa(mfhg, static_cast<std::size_t>(q));
			if (rm.kind == CpoaKind::Ratio)
			{
				EXPECT_LE(rm.value, Rational(2));
			}
		}
	}
}

TEST(Greedy, Examples)
{
	const Game one = Game::from_edges(3, {{0, 1, Rational(4)}}, AlphaSpec::fhg());
	EXPECT_EQ(greedy_two_size(one).str(), "{{0,1},{2}}");
	const Game negative = Game::from_edges(3, {{0, 1, Rational(-1)}, {1, 2, Rational(-2)}, {0, 2, Rational(-3)}}, AlphaSpec::ashg());
	EXPECT_EQ(greedy_two_size(negative).str(), "{{0},{1},{2}}");
	EXPECT_EQ(greedy_two_size(example_one(AlphaSpec::ashg())).str(), "{{0,1},{2,3}}");
	// Heaviest pair first, even when it breaks a lexicographically earlier pair.
	const Game chain = Game::from_edges(4, {{0, 1, Rational(1)}, {1, 2, Rational(5)}, {2, 3, Rational(1)}}, AlphaSpec::ashg());
	EXPECT_EQ(greedy_two_size(chain).str(), "{{0},{1,2},{3}}");
}

TEST(Greedy, TwoSizeStableAndCoreStableForSmallAlpha)
{
	std::mt19937_64 rng(67);
	for (int t = 0; t < 200; ++t)
	{
		const std::size_t n = 1 + t % 9;
		const auto w = oracle::random_rational_weights(rng, n, 5);
		for (const auto& name : oracle::alpha_names())
		{
			const Game g(w, parse_alpha_name(name));
			const Partition p = greedy_two_size(g);
			const auto W = oracle::matrix_of(w);
			const auto a = oracle::alpha(name);
			std::vector<int> labels(n);
			for (std::size_t b = 0; b < p.coalitions().size(); ++b)
			{
				for (Agent i : p.coalitions()[b].members())
				{
					labels[i] = static_cast<int>(b);
				}
			}
			const auto base = oracle::baselines(W, a, labels);
			EXPECT_FALSE(oracle::any_blocking(W, a, base, 1, 2));
			if (name == "MFHG" || name == "PairwiseComm" || name == "OddEven")
			{
				EXPECT_FALSE(oracle::any_blocking(W, a, base, 1, static_cast<int>(n))) << name;
			}
		}
	}
}
