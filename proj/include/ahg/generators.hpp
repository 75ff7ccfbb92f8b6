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

#ifndef AHG_GENERATORS_HPP
#define AHG_GENERATORS_HPP

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ahg/alpha.hpp"
#include "ahg/bounds.hpp"
#include "ahg/errors.hpp"
#include "ahg/stability.hpp"

// Lower-bound constructions: scenarios whose fixed baselines are q-size stable
// while the full coalition improves every member by exactly the bound.

namespace ahg {

enum class GeneratorVariant
{
	FHG,
	ASHG
};

namespace detail {

inline Scenario uniform_baseline_scenario(WeightMatrix w, AlphaSpec alpha)
{
	std::vector<Rational> baselines(w.size(), Rational(1));
	return Scenario(std::move(w), std::move(baselines), std::move(alpha));
}

} // namespace detail

/// Complete graph, every weight 1/(a(q)(q-1)), baselines 1.
/// Full-coalition factor a(m)(m-1) / (a(q)(q-1)).
inline Scenario gen_hospitable_tight(const AlphaSpec& alpha, long q, long m)
{
	if (q < 2 || q >= m)
	{
		throw ArgumentError("need 2 <= q < m");
	}
	if (!is_hospitable(alpha, m))
	{
		throw PreconditionError(alpha_name(alpha) + " is not hospitable up to size " + std::to_string(m));
	}
	const Rational weight = Rational(1) / (alpha_value(alpha, q) * Rational(q - 1));
	WeightMatrix w(static_cast<std::size_t>(m));
	for (Agent i = 0; i < w.size(); ++i)
	{
		for (Agent j = i + 1; j < w.size(); ++j)
		{
			w.set(i, j, weight);
		}
	}
	return detail::uniform_baseline_scenario(std::move(w), alpha);
}

/// Two halves of m/2 agents: weight 1/a(3) - 1/a(2) inside a half, 1/a(2) across.
/// 3-size stable with factor (m-2)/2 * a(m)/a(3) + a(m)/a(2).
inline Scenario gen_q3_even(const AlphaSpec& alpha, long m)
{
	if (m < 4 || m % 2 != 0)
	{
		throw ArgumentError("need even m >= 4");
	}
	if (!is_hospitable(alpha, m))
	{
		throw PreconditionError(alpha_name(alpha) + " is not hospitable up to size " + std::to_string(m));
	}
	const Rational inv2 = Rational(1) / alpha_value(alpha, 2);
	const Rational inv3 = Rational(1) / alpha_value(alpha, 3);
	const auto half = static_cast<std::size_t>(m / 2);
	WeightMatrix w(static_cast<std::size_t>(m));
	for (Agent i = 0; i < w.size(); ++i)
	{
		for (Agent j = i + 1; j < w.size(); ++j)
		{
			const bool same = (i < half) == (j < half);
			w.set(i, j, same ? inv3 - inv2 : inv2);
		}
	}
	return detail::uniform_baseline_scenario(std::move(w), alpha);
}

/// q+1 agents whose heavy edges form a Hamiltonian cycle.
/// FHG: cycle weight 2, others 1, factor (q+2)/(q+1). ASHG: cycle weight 1, others 0, factor 2.
inline Scenario gen_cycle_q_plus_1(long q, GeneratorVariant variant)
{
	if (q < 2)
	{
		throw ArgumentError("need q >= 2");
	}
	const auto m = static_cast<std::size_t>(q + 1);
	const bool fhg = variant == GeneratorVariant::FHG;
	WeightMatrix w(m);
	for (Agent i = 0; i < m; ++i)
	{
		for (Agent j = i + 1; j < m; ++j)
		{
			const bool on_cycle = j == i + 1 || (i == 0 && j == m - 1);
			w.set(i, j, on_cycle ? Rational(fhg ? 2 : 1) : Rational(fhg ? 1 : 0));
		}
	}
	return detail::uniform_baseline_scenario(std::move(w), fhg ? AlphaSpec::fhg() : AlphaSpec::ashg());
}

/// FHG, q = 4: floor((m-2)/3)+1 "two-valued" agents (weight 0 among themselves,
/// 2 to everyone else), remaining agents weight 1 among themselves.
inline Scenario gen_fhg_q4(long m)
{
	if (m < 5)
	{
		throw ArgumentError("need m >= 5");
	}
	const auto two_valued = static_cast<std::size_t>((m - 2) / 3 + 1);
	WeightMatrix w(static_cast<std::size_t>(m));
	for (Agent i = 0; i < w.size(); ++i)
	{
		for (Agent j = i + 1; j < w.size(); ++j)
		{
			const int heavy = (i < two_valued) + (j < two_valued);
			w.set(i, j, heavy == 2 ? Rational(0) : (heavy == 1 ? Rational(2) : Rational(1)));
		}
	}
	return detail::uniform_baseline_scenario(std::move(w), AlphaSpec::fhg());
}

/// ASHG, q = 4, factor 1 + floor((m-2)/3); construction depends on m mod 3.
inline Scenario gen_ashg_q4(long m)
{
	if (m < 5)
	{
		throw ArgumentError("need m >= 5");
	}
	if (m % 3 == 1)
	{
		return gen_hospitable_tight(AlphaSpec::ashg(), 4, m);
	}
	const auto n = static_cast<std::size_t>(m);
	WeightMatrix w(n);
	std::vector<Rational> baselines(n, Rational(1));
	if (m % 3 == 0)
	{
		// First 2m/3 agents have baseline 1, last m/3 baseline 2, complete bipartite weight 1.
		const std::size_t first = n * 2 / 3;
		for (Agent i = 0; i < first; ++i)
		{
			for (Agent j = first; j < n; ++j)
			{
				w.set(i, j, Rational(1));
			}
		}
		for (Agent j = first; j < n; ++j)
		{
			baselines[j] = Rational(2);
		}
	}
	else
	{
		// First (m-2)/3 agents have baseline 2; the rest are matched consecutively.
		const std::size_t first = (n - 2) / 3;
		for (Agent i = 0; i < first; ++i)
		{
			baselines[i] = Rational(2);
			for (Agent j = first; j < n; ++j)
			{
				w.set(i, j, Rational(1));
			}
		}
		for (Agent j = first; j + 1 < n; j += 2)
		{
			w.set(j, j + 1, Rational(1));
		}
	}
	return Scenario(std::move(w), std::move(baselines), AlphaSpec::ashg());
}

/// FHG, q = 3: complete bipartite K_{floor(m/2), ceil(m/2)} at weight 2 (a
/// maximum triangle-free graph), every other pair weight 1.
inline Scenario gen_mantel(long m)
{
	if (m < 4)
	{
		throw ArgumentError("need m >= 4");
	}
	const auto n = static_cast<std::size_t>(m);
	const std::size_t left = n / 2;
	WeightMatrix w(n);
	for (Agent i = 0; i < n; ++i)
	{
		for (Agent j = i + 1; j < n; ++j)
		{
			w.set(i, j, (i < left) != (j < left) ? Rational(2) : Rational(1));
		}
	}
	return detail::uniform_baseline_scenario(std::move(w), AlphaSpec::fhg());
}

inline constexpr std::array<std::string_view, 4> fixture_names{"fig6", "fig7", "fig8", "fig9"};

/// Published tight instances for q = 5, m in {7, 8}. Edge lists use the
/// 1-based labels of the drawings; agents are stored 0-based.
inline Scenario fixture(std::string_view name)
{
	struct LabeledEdge
	{
		int a;
		int b;
		int weight;
	};
	auto build = [](std::size_t m, AlphaSpec alpha, std::vector<int> baselines, const std::vector<LabeledEdge>& edges) {
		WeightMatrix w(m);
		for (const auto& e : edges)
		{
			w.set(static_cast<Agent>(e.a - 1), static_cast<Agent>(e.b - 1), Rational(e.weight));
		}
		std::vector<Rational> b;
		for (int x : baselines)
		{
			b.emplace_back(x);
		}
		return Scenario(std::move(w), std::move(b), std::move(alpha));
	};

	if (name == "fig6")
	{
		// Edge 2-6 is drawn twice; it is one edge.
		return build(7, AlphaSpec::fhg(), {1, 1, 1, 1, 1, 1, 1},
					 {{1, 4, 2}, {1, 5, 2}, {1, 6, 2}, {1, 7, 2}, {2, 4, 2}, {2, 5, 2}, {2, 6, 2}, {2, 7, 2},
					  {3, 4, 2}, {3, 5, 2}, {3, 6, 2}, {3, 7, 2}, {4, 6, 1}, {4, 7, 1}, {5, 6, 1}, {5, 7, 1}});
	}
	if (name == "fig7")
	{
		// Weight-2 edges form the cycle 1-2-...-8-1; all other pairs weight 1.
		std::vector<LabeledEdge> edges;
		for (int a = 1; a <= 8; ++a)
		{
			for (int b = a + 1; b <= 8; ++b)
			{
				edges.push_back({a, b, (b == a + 1 || (a == 1 && b == 8)) ? 2 : 1});
			}
		}
		return build(8, AlphaSpec::fhg(), {1, 1, 1, 1, 1, 1, 1, 1}, edges);
	}
	if (name == "fig8")
	{
		return build(7, AlphaSpec::ashg(), {2, 2, 2, 1, 1, 1, 1},
					 {{1, 2, 2}, {2, 3, 2}, {7, 1, 2}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}, {5, 6, 1}, {6, 7, 1}});
	}
	if (name == "fig9")
	{
		return build(8, AlphaSpec::ashg(), {2, 2, 2, 1, 1, 1, 1, 1},
					 {{1, 2, 2}, {1, 3, 1}, {1, 8, 1}, {2, 4, 1}, {2, 5, 1}, {3, 4, 1}, {3, 6, 1}, {3, 7, 1}, {5, 6, 1}, {7, 8, 1}});
	}
	throw ArgumentError("unknown fixture '" + std::string(name) + "' (expected fig6, fig7, fig8 or fig9)");
}

} // namespace ahg

#endif // AHG_GENERATORS_HPP
