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

#ifndef AHG_IO_HPP
#define AHG_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ahg/alpha.hpp"
#include "ahg/errors.hpp"
#include "ahg/game.hpp"
#include "ahg/rational.hpp"
#include "ahg/stability.hpp"

// JSON game and scenario files.
//
//   {
//     "n": 4,
//     "agents": ["a1", "a2", "a3", "a4"],      optional names, mapped to 0.. in order
//     "alpha": "FHG" | ["0", "1", "1/2", ...], variant name or alpha(1..n_max)
//     "weights": [[0, 1, "3"], [0, 2, "2"]],   unlisted pairs are 0
//     "partition": [[0, 1], [2, 3]],           optional, games only
//     "baselines": ["1", "1", "1", "1"]        scenarios only
//   }
//
// Rationals are "p/q" or integer strings; integer JSON numbers are accepted on
// input, floating-point numbers never.

namespace ahg::io {

using json = nlohmann::json;

struct GameFile
{
	Game game;
	std::optional<Partition> partition;
	std::vector<std::string> agent_names;
};

struct ScenarioFile
{
	Scenario scenario;
	std::vector<std::string> agent_names;
};

inline Rational rational_from_json(const json& j)
{
	if (j.is_string())
	{
		return Rational::parse(j.get<std::string>());
	}
	if (j.is_number_integer())
	{
		return Rational(j.get<long>());
	}
	if (j.is_number_float())
	{
		throw ParseError("floating-point literal " + j.dump() + " is not allowed; write it as a \"p/q\" string");
	}
	throw ParseError("expected a rational, got " + j.dump());
}

inline json rational_to_json(const Rational& r) { return r.str(); }

inline AlphaSpec alpha_from_json(const json& j)
{
	if (j.is_string())
	{
		return parse_alpha_name(j.get<std::string>());
	}
	if (j.is_array())
	{
		std::vector<Rational> values;
		for (const auto& v : j)
		{
			values.push_back(rational_from_json(v));
		}
		return AlphaSpec::table(std::move(values));
	}
	throw ParseError("\"alpha\" must be a variant name or a list of rationals");
}

inline json alpha_to_json(const AlphaSpec& a)
{
	if (a.kind() != AlphaKind::Table)
	{
		return alpha_name(a);
	}
	json arr = json::array();
	for (const auto& v : a.table_values())
	{
		arr.push_back(rational_to_json(v));
	}
	return arr;
}

namespace detail {

inline const json& require(const json& doc, const char* key)
{
	if (!doc.is_object() || !doc.contains(key))
	{
		throw ParseError(std::string("missing field \"") + key + "\"");
	}
	return doc.at(key);
}

inline std::vector<std::string> agent_names(const json& doc, std::size_t n)
{
	std::vector<std::string> names;
	if (doc.contains("agents"))
	{
		for (const auto& a : doc.at("agents"))
		{
			names.push_back(a.get<std::string>());
		}
		if (names.size() != n)
		{
			throw ParseError("\"agents\" lists " + std::to_string(names.size()) + " names for n = " + std::to_string(n));
		}
	}
	return names;
}

inline Agent agent_from_json(const json& j, const std::vector<std::string>& names, std::size_t n)
{
	if (j.is_number_integer())
	{
		const long v = j.get<long>();
		if (v < 0 || static_cast<std::size_t>(v) >= n)
		{
			throw ParseError("agent index " + j.dump() + " out of range");
		}
		return static_cast<Agent>(v);
	}
	if (j.is_string())
	{
		for (std::size_t i = 0; i < names.size(); ++i)
		{
			if (names[i] == j.get<std::string>())
			{
				return i;
			}
		}
		throw ParseError("unknown agent name " + j.dump());
	}
	throw ParseError("agent must be an index or a name, got " + j.dump());
}

inline WeightMatrix weights_from_json(const json& doc, std::size_t n, const std::vector<std::string>& names)
{
	WeightMatrix w(n);
	std::vector<bool> seen(n * n, false);
	if (!doc.contains("weights"))
	{
		return w;
	}
	for (const auto& triple : doc.at("weights"))
	{
		if (!triple.is_array() || triple.size() != 3)
		{
			throw ParseError("weight entries must be [i, j, \"p/q\"] triples, got " + triple.dump());
		}
		const Agent i = agent_from_json(triple[0], names, n);
		const Agent j = agent_from_json(triple[1], names, n);
		const Rational value = rational_from_json(triple[2]);
		if (i == j)
		{
			if (value.sign() != 0)
			{
				throw ParseError("self-weight u(i,i) must be 0");
			}
			continue;
		}
		if (seen[i * n + j] && w(i, j) != value)
		{
			throw ParseError("conflicting weights for pair " + std::to_string(i) + "-" + std::to_string(j) + "; games must be symmetric");
		}
		seen[i * n + j] = seen[j * n + i] = true;
		w.set(i, j, value);
	}
	return w;
}

inline std::size_t agent_count(const json& doc)
{
	const json& n = require(doc, "n");
	if (!n.is_number_integer() || n.get<long>() < 1)
	{
		throw ParseError("\"n\" must be a positive integer");
	}
	return static_cast<std::size_t>(n.get<long>());
}

inline json weights_to_json(const WeightMatrix& w)
{
	json arr = json::array();
	for (Agent i = 0; i < w.size(); ++i)
	{
		for (Agent j = i + 1; j < w.size(); ++j)
		{
			if (w(i, j).sign() != 0)
			{
				arr.push_back(json::array({i, j, rational_to_json(w(i, j))}));
			}
		}
	}
	return arr;
}

} // namespace detail

inline GameFile game_from_json(const json& doc, std::size_t max_agents = default_max_agents)
{
	const std::size_t n = detail::agent_count(doc);
	auto names = detail::agent_names(doc, n);
	Game game(detail::weights_from_json(doc, n, names), alpha_from_json(detail::require(doc, "alpha")), max_agents);
	std::optional<Partition> partition;
	if (doc.contains("partition"))
	{
		std::vector<Coalition> blocks;
		for (const auto& block : doc.at("partition"))
		{
			std::vector<Agent> members;
			for (const auto& a : block)
			{
				members.push_back(detail::agent_from_json(a, names, n));
			}
			blocks.emplace_back(std::move(members));
		}
		partition.emplace(std::move(blocks), n);
	}
	return GameFile{std::move(game), std::move(partition), std::move(names)};
}

inline json game_to_json(const Game& game, const std::optional<Partition>& partition = std::nullopt)
{
	json doc;
	doc["n"] = game.agent_count();
	doc["alpha"] = alpha_to_json(game.alpha());
	doc["weights"] = detail::weights_to_json(game.weights());
	if (partition)
	{
		json blocks = json::array();
		for (const auto& c : partition->coalitions())
		{
			blocks.push_back(json(std::vector<Agent>(c.members().begin(), c.members().end())));
		}
		doc["partition"] = blocks;
	}
	return doc;
}

inline ScenarioFile scenario_from_json(const json& doc)
{
	const std::size_t n = detail::agent_count(doc);
	auto names = detail::agent_names(doc, n);
	std::vector<Rational> baselines;
	for (const auto& b : detail::require(doc, "baselines"))
	{
		baselines.push_back(rational_from_json(b));
	}
	Scenario s(detail::weights_from_json(doc, n, names), std::move(baselines), alpha_from_json(detail::require(doc, "alpha")));
	return ScenarioFile{std::move(s), std::move(names)};
}

inline json scenario_to_json(const Scenario& s)
{
	json doc;
	doc["n"] = s.size();
	doc["alpha"] = alpha_to_json(s.alpha());
	doc["weights"] = detail::weights_to_json(s.weights());
	json b = json::array();
	for (const auto& x : s.baselines())
	{
		b.push_back(rational_to_json(x));
	}
	doc["baselines"] = b;
	return doc;
}

inline bool is_scenario_document(const json& doc) { return doc.is_object() && doc.contains("baselines"); }

inline json parse_json(const std::string& text)
{
	try
	{
		return json::parse(text);
	}
	catch (const json::parse_error& e)
	{
		throw ParseError(std::string("malformed JSON: ") + e.what());
	}
}

inline json load_json(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
	{
		throw ParseError("cannot open '" + path + "'");
	}
	std::stringstream buffer;
	buffer << in.rdbuf();
	return parse_json(buffer.str());
}

inline void save_json(const std::string& path, const json& doc)
{
	std::ofstream out(path);
	if (!out)
	{
		throw ParseError("cannot write '" + path + "'");
	}
	out << doc.dump(2) << '\n';
}

} // namespace ahg::io

#endif // AHG_IO_HPP
