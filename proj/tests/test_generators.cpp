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

#include <string>

#include "ahg/ahg.hpp"
#include "ahg/io.hpp"
#include "oracles.hpp"

using namespace ahg;

namespace {

// Stability of a scenario re-checked by the bitmask oracle.
bool oracle_stable(const Scenario& s, int q)
{
	std::vector<mpq_class> base;
	for (const auto& b : s.baselines())
	{
		if (b.sign() < 0)
		{
			return false;
		}
		base.push_back(oracle::to_mpq(b));
	}
	const auto a = oracle::alpha(alpha_name(s.alpha()));
	return !oracle::any_blocking(oracle::matrix_of(s.weights()), a, base, 2, q);
}

void expect_tight(const Scenario& s, int q, const Rational& factor, const std::string& label)
{
	EXPECT_TRUE(scenario_q_size_stable(s, static_cast<std::size_t>(q))) << label;
	EXPECT_TRUE(oracle_stable(s, q)) << label;
	EXPECT_EQ(min_improvement_factor(s), factor) << label;
}

} // namespace

TEST(Generators, HospitableExamples)
{
	const Scenario s = gen_hospitable_tight(AlphaSpec::fhg(), 2, 3);
	EXPECT_EQ(s.weight(0, 1), Rational(2));
	EXPECT_EQ(s.baselines(), std::vector<Rational>(3, Rational(1)));
	expect_tight(s, 2, Rational(4, 3), "fhg 2 3");
	expect_tight(gen_hospitable_tight(AlphaSpec::fhg(), 3, 5), 3, Rational(6, 5), "fhg 3 5");
	expect_tight(gen_hospitable_tight(AlphaSpec::mfhg(), 2, 4), 2, Rational(1), "mfhg 2 4");
	EXPECT_THROW(gen_hospitable_tight(AlphaSpec::pairwise_comm(), 2, 4), PreconditionError);
	EXPECT_THROW(gen_hospitable_tight(AlphaSpec::fhg(), 3, 3), ArgumentError);
}

TEST(Generators, HospitableGrid)
{
	for (const char* name : {"FHG", "ASHG", "MFHG"})
	{
		const auto a = oracle::alpha(name);
		for (long q = 2; q <= 11; ++q)
		{
			for (long m = q + 1; m <= 12; ++m)
			{
				const Scenario s = gen_hospitable_tight(parse_alpha_name(name), q, m);
				const Rational closed = oracle::from_mpq(a(m) * (m - 1) / (a(q) * (q - 1)));
				expect_tight(s, static_cast<int>(q), closed, std::string(name) + " " + std::to_string(q) + " " + std::to_string(m));
				if ((m - 1) % (q - 1) == 0)
				{
					EXPECT_EQ(min_improvement_factor(s), f_general(parse_alpha_name(name), q, m));
				}
			}
		}
	}
}

TEST(Generators, Q3Even)
{
	expect_tight(gen_q3_even(AlphaSpec::fhg(), 4), 3, Rational(5, 4), "fhg 4");
	expect_tight(gen_q3_even(AlphaSpec::fhg(), 6), 3, Rational(8, 6), "fhg 6");
	const Scenario s = gen_q3_even(AlphaSpec::ashg(), 6);
	EXPECT_EQ(s.weight(0, 1), Rational(0));
	EXPECT_EQ(s.weight(0, 5), Rational(1));
	expect_tight(s, 3, Rational(3), "ashg 6");
	for (const char* name : {"FHG", "ASHG"})
	{
		for (long m = 4; m <= 12; m += 2)
		{
			expect_tight(gen_q3_even(parse_alpha_name(name), m), 3, oracle::from_mpq(oracle::bound(oracle::alpha(name), 3, m)),
						 std::string(name) + std::to_string(m));
		}
	}
	EXPECT_THROW(gen_q3_even(AlphaSpec::fhg(), 5), ArgumentError);
}

TEST(Generators, Cycle)
{
	expect_tight(gen_cycle_q_plus_1(4, GeneratorVariant::FHG), 4, Rational(6, 5), "fhg 4");
	expect_tight(gen_cycle_q_plus_1(2, GeneratorVariant::FHG), 2, Rational(4, 3), "fhg 2");
	expect_tight(gen_cycle_q_plus_1(5, GeneratorVariant::ASHG), 5, Rational(2), "ashg 5");
	for (long q = 2; q <= 8; ++q)
	{
		const Scenario f = gen_cycle_q_plus_1(q, GeneratorVariant::FHG);
		EXPECT_EQ(f.size(), static_cast<std::size_t>(q + 1));
		EXPECT_EQ(f.weight(0, static_cast<Agent>(q)), Rational(2));
		expect_tight(f, static_cast<int>(q), Rational(q + 2, q + 1), "fhg cycle");
		expect_tight(gen_cycle_q_plus_1(q, GeneratorVariant::ASHG), static_cast<int>(q), Rational(2), "ashg cycle");
	}
	EXPECT_THROW(gen_cycle_q_plus_1(1, GeneratorVariant::FHG), ArgumentError);
}

TEST(Generators, FhgQ4)
{
	expect_tight(gen_fhg_q4(5), 4, Rational(6, 5), "5");
	expect_tight(gen_fhg_q4(7), 4, Rational(8, 7), "7");
	expect_tight(gen_fhg_q4(8), 4, Rational(10, 8), "8");
	for (long m = 5; m <= 12; ++m)
	{
		expect_tight(gen_fhg_q4(m), 4, Rational(1) + Rational((m - 2) / 3, m), std::to_string(m));
		EXPECT_EQ(min_improvement_factor(gen_fhg_q4(m)), f_fhg(4, m));
	}
	EXPECT_THROW(gen_fhg_q4(4), ArgumentError);
}

TEST(Generators, AshgQ4)
{
	expect_tight(gen_ashg_q4(6), 4, Rational(2), "6");
	expect_tight(gen_ashg_q4(7), 4, Rational(2), "7");
	expect_tight(gen_ashg_q4(8), 4, Rational(3), "8");
	EXPECT_EQ(gen_ashg_q4(7), gen_hospitable_tight(AlphaSpec::ashg(), 4, 7));
	for (long m = 5; m <= 12; ++m)
	{
		expect_tight(gen_ashg_q4(m), 4, Rational(1 + (m - 2) / 3), std::to_string(m));
		EXPECT_EQ(min_improvement_factor(gen_ashg_q4(m)), f_ashg(4, m));
	}
}

TEST(Generators, Mantel)
{
	expect_tight(gen_mantel(4), 3, Rational(5, 4), "4");
	expect_tight(gen_mantel(5), 3, Rational(6, 5), "5");
	expect_tight(gen_mantel(6), 3, Rational(8, 6), "6");
	for (long m = 4; m <= 10; ++m)
	{
		const Scenario s = gen_mantel(m);
		long heavy = 0;
		for (Agent i = 0; i < s.size(); ++i)
		{
			for (Agent j = i + 1; j < s.size(); ++j)
			{
				heavy += s.weight(i, j) == Rational(2) ? 1 : 0;
			}
		}
		EXPECT_EQ(heavy, m * m / 4);
		expect_tight(s, 3, Rational(1) + Rational((m - 2) / 2, m), std::to_string(m));
	}
}

TEST(Fixtures, StableWithDrawnFactors)
{
	expect_tight(fixture("fig6"), 5, Rational(8, 7), "fig6");
	expect_tight(fixture("fig7"), 5, Rational(9, 8), "fig7");
	expect_tight(fixture("fig8"), 5, Rational(2), "fig8");
	expect_tight(fixture("fig9"), 5, Rational(2), "fig9");
	EXPECT_EQ(min_improvement_factor(fixture("fig6")), f_fhg(5, 7));
	EXPECT_EQ(min_improvement_factor(fixture("fig7")), f_fhg(5, 8));
	EXPECT_EQ(min_improvement_factor(fixture("fig8")), f_ashg(5, 7));
	EXPECT_EQ(min_improvement_factor(fixture("fig9")), f_ashg(5, 8));
	EXPECT_THROW(fixture("fig5"), ArgumentError);
}

TEST(Fixtures, DataFilesMatchBuiltins)
{
	for (auto name : fixture_names)
	{
		const std::string path = std::string(AHG_DATA_DIR) + "/fixtures/" + std::string(name) + ".json";
		const auto file = io::scenario_from_json(io::load_json(path));
		EXPECT_EQ(file.scenario, fixture(name)) << path;
	}
}
