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

// ahg: command-line front end for stability checks, bound tables, lower-bound
// constructions, blocking-scenario search and price-of-anarchy computation.
//
// Exit codes: 0 stable / feasible, 1 negative verdict, 2 input error, 3 budget exhausted.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ahg/ahg.hpp"
#include "ahg/io.hpp"

namespace {

constexpr int exit_positive = 0;
constexpr int exit_negative = 1;
constexpr int exit_input_error = 2;
constexpr int exit_budget = 3;

struct Range
{
	long first = 0;
	long last = 0;
};

Range parse_range(const std::string& text)
{
	const auto colon = text.find(':');
	try
	{
		if (colon == std::string::npos)
		{
			const long v = std::stol(text);
			return {v, v};
		}
		return {std::stol(text.substr(0, colon)), std::stol(text.substr(colon + 1))};
	}
	catch (const std::exception&)
	{
		throw ahg::ParseError("range must look like A:B, got '" + text + "'");
	}
}

std::string env_or(const char* name, const std::string& fallback)
{
	const char* v = std::getenv(name);
	return v ? std::string(v) : fallback;
}

void print_member_utilities(const ahg::Game& game, const ahg::Partition& p, const ahg::Coalition& c)
{
	for (ahg::Agent i : c.members())
	{
		std::cout << "  agent " << i << ": " << ahg::coalition_utility(game, c, i) << " in witness vs " << ahg::partition_utility(game, p, i)
				  << " in partition\n";
	}
}

struct VerifyOptions
{
	std::string file;
	std::string partition_file;
	bool core = false;
	std::optional<long> q_size;
	std::optional<std::string> improvement;
	std::vector<std::string> qk;
};

int run_verify_scenario(const ahg::Scenario& s, const VerifyOptions& opt)
{
	if (opt.improvement || !opt.qk.empty())
	{
		throw ahg::ArgumentError("scenario files support --core and --q-size only");
	}
	const auto q = static_cast<std::size_t>(opt.core ? static_cast<long>(s.size()) : *opt.q_size);
	const auto blocking = ahg::scenario_blocking_subset(s, q);
	std::cout << "scenario: m=" << s.size() << " alpha=" << ahg::alpha_name(s.alpha()) << '\n';
	std::cout << "mode: q-size " << q << '\n';
	std::cout << "verdict: " << (blocking ? "unstable" : "stable") << '\n';
	if (blocking)
	{
		std::cout << "witness: " << blocking->str() << '\n';
	}
	bool positive = true;
	for (const auto& b : s.baselines())
	{
		positive = positive && b.sign() > 0;
	}
	if (positive)
	{
		const ahg::Rational f = ahg::min_improvement_factor(s);
		std::cout << "min improvement factor: " << f << " (" << f.decimal() << ")\n";
	}
	return blocking ? exit_negative : exit_positive;
}

int run_verify(const VerifyOptions& opt)
{
	const auto doc = ahg::io::load_json(opt.file);
	if (ahg::io::is_scenario_document(doc))
	{
		return run_verify_scenario(ahg::io::scenario_from_json(doc).scenario, opt);
	}
	auto gf = ahg::io::game_from_json(doc);
	if (!opt.partition_file.empty())
	{
		auto pdoc = ahg::io::load_json(opt.partition_file);
		ahg::io::json merged = doc;
		merged["partition"] = pdoc.is_object() ? pdoc.at("partition") : pdoc;
		gf.partition = ahg::io::game_from_json(merged).partition;
	}
	if (!gf.partition)
	{
		throw ahg::ArgumentError("game file has no \"partition\"; pass one with --partition");
	}
	const ahg::Game& game = gf.game;
	const ahg::Partition& p = *gf.partition;

	ahg::StabilityReport report;
	std::string mode;
	if (opt.core)
	{
		mode = "core";
		report = ahg::is_core_stable(game, p);
	}
	else if (opt.q_size)
	{
		mode = "q-size " + std::to_string(*opt.q_size);
		report = ahg::is_q_size_stable(game, p, static_cast<std::size_t>(*opt.q_size));
	}
	else if (opt.improvement)
	{
		const auto k = ahg::Rational::parse(*opt.improvement);
		mode = "improvement " + k.str();
		report = ahg::is_k_improvement_stable(game, p, k);
	}
	else
	{
		const long q = std::stol(opt.qk.at(0));
		const auto k = ahg::Rational::parse(opt.qk.at(1));
		mode = "qk " + std::to_string(q) + " " + k.str();
		report = ahg::is_qk_stable(game, p, static_cast<std::size_t>(q), k);
	}
	std::cout << "game: n=" << game.agent_count() << " alpha=" << ahg::alpha_name(game.alpha()) << '\n';
	std::cout << "partition: " << p.str() << '\n';
	std::cout << "mode: " << mode << '\n';
	std::cout << "verdict: " << (report.verdict ? "stable" : "unstable") << '\n';
	if (report.witness)
	{
		std::cout << "witness: " << report.witness->str() << '\n';
		print_member_utilities(game, p, *report.witness);
	}
	return report.verdict ? exit_positive : exit_negative;
}

struct BoundTableOptions
{
	std::string alpha = "FHG";
	std::string q_range = "2:4";
	std::string m_range = "3:9";
	std::string k = "1";
};

int run_bound_table(const BoundTableOptions& opt)
{
	const ahg::AlphaSpec alpha = ahg::parse_alpha_name(opt.alpha);
	const Range qr = parse_range(opt.q_range);
	const Range mr = parse_range(opt.m_range);
	const ahg::Rational k = ahg::Rational::parse(opt.k);
	std::cout << "q,m,f,decimal\n";
	for (long q = qr.first; q <= qr.last; ++q)
	{
		for (long m = std::max(mr.first, q + 1); m <= mr.last; ++m)
		{
			const ahg::Rational f = ahg::f_general(alpha, q, m, k);
			std::cout << q << ',' << m << ',' << f << ',' << f.decimal() << '\n';
		}
	}
	return exit_positive;
}

struct GenerateOptions
{
	std::string construction;
	std::string alpha = "FHG";
	long q = 0;
	long m = 0;
	std::string variant = "fhg";
	std::string out;
};

int run_generate(const GenerateOptions& opt)
{
	std::optional<ahg::Scenario> s;
	long q = opt.q;
	const std::string& c = opt.construction;
	if (c == "hospitable")
	{
		s = ahg::gen_hospitable_tight(ahg::parse_alpha_name(opt.alpha), opt.q, opt.m);
	}
	else if (c == "q3-even")
	{
		s = ahg::gen_q3_even(ahg::parse_alpha_name(opt.alpha), opt.m);
		q = 3;
	}
	else if (c == "cycle")
	{
		const auto a = ahg::parse_alpha_name(opt.variant);
		if (a.kind() != ahg::AlphaKind::FHG && a.kind() != ahg::AlphaKind::ASHG)
		{
			throw ahg::ArgumentError("--variant must be fhg or ashg");
		}
		s = ahg::gen_cycle_q_plus_1(opt.q, a.kind() == ahg::AlphaKind::FHG ? ahg::GeneratorVariant::FHG : ahg::GeneratorVariant::ASHG);
	}
	else if (c == "fhg-q4")
	{
		s = ahg::gen_fhg_q4(opt.m);
		q = 4;
	}
	else if (c == "ashg-q4")
	{
		s = ahg::gen_ashg_q4(opt.m);
		q = 4;
	}
	else if (c == "mantel")
	{
		s = ahg::gen_mantel(opt.m);
		q = 3;
	}
	else if (c == "fig6" || c == "fig7" || c == "fig8" || c == "fig9")
	{
		s = ahg::fixture(c);
		q = 5;
	}
	else
	{
		throw ahg::ArgumentError("unknown construction '" + c + "'");
	}

	const bool stable = ahg::scenario_q_size_stable(*s, static_cast<std::size_t>(q));
	const ahg::Rational f = ahg::min_improvement_factor(*s);
	const auto doc = ahg::io::scenario_to_json(*s);
	std::ostream& summary = opt.out.empty() ? std::cerr : std::cout;
	summary << "construction: " << c << " (m=" << s->size() << ", alpha=" << ahg::alpha_name(s->alpha()) << ")\n";
	summary << "q-size stable (q=" << q << "): " << (stable ? "verified" : "FAILED") << '\n';
	summary << "min improvement factor: " << f << " (" << f.decimal() << ")\n";
	if (opt.out.empty())
	{
		std::cout << doc.dump(2) << '\n';
	}
	else
	{
		ahg::io::save_json(opt.out, doc);
	}
	return stable ? exit_positive : exit_negative;
}

struct SearchOptions
{
	std::string alpha = "FHG";
	long q = 2;
	long m = 3;
	std::string gamma = "1";
	std::string weight_bound = "10";
	std::string baseline_bound = "10";
	std::uint64_t node_limit = 0;
	double time_limit = 0;
	unsigned threads = 1;
	std::string out;
};

int run_search(const SearchOptions& opt)
{
	ahg::SearchProblem p;
	p.alpha = ahg::parse_alpha_name(opt.alpha);
	p.q = opt.q;
	p.m = opt.m;
	p.gamma = ahg::Rational::parse(opt.gamma);
	p.weight_bound = ahg::Rational::parse(opt.weight_bound);
	p.baseline_bound = ahg::Rational::parse(opt.baseline_bound);
	p.budget.node_limit = opt.node_limit ? opt.node_limit : std::stoull(env_or("AHG_NODE_LIMIT", "1000000"));
	p.budget.time_limit_seconds = opt.time_limit > 0 ? opt.time_limit : std::stod(env_or("AHG_TIME_LIMIT", "600"));

	const ahg::SearchResult r = ahg::search_blocking_scenario(p, opt.threads);
	std::cout << "problem: alpha=" << ahg::alpha_name(p.alpha) << " q=" << p.q << " m=" << p.m << " gamma=" << p.gamma
			  << " B=" << p.weight_bound << " U=" << p.baseline_bound << '\n';
	std::cout << "verdict: " << ahg::verdict_name(r.verdict) << '\n';
	std::cout << "nodes: " << r.statistics.nodes << "\nlps: " << r.statistics.lps << '\n';
	if (r.scenario)
	{
		const ahg::Rational f = ahg::min_improvement_factor(*r.scenario);
		std::cout << "certificate: verified (q-size stable, min improvement factor " << f << " > " << p.gamma << ")\n";
		const auto doc = ahg::io::scenario_to_json(*r.scenario);
		if (opt.out.empty())
		{
			std::cout << doc.dump(2) << '\n';
		}
		else
		{
			ahg::io::save_json(opt.out, doc);
		}
	}
	switch (r.verdict)
	{
	case ahg::SearchVerdict::Feasible: return exit_positive;
	case ahg::SearchVerdict::InfeasibleWithinBounds: return exit_negative;
	case ahg::SearchVerdict::BudgetExhausted: return exit_budget;
	}
	return exit_input_error;
}

struct PoaOptions
{
	std::string file;
	std::optional<long> q;
	std::optional<std::string> k;
};

int run_poa(const PoaOptions& opt)
{
	const auto gf = ahg::io::game_from_json(ahg::io::load_json(opt.file));
	ahg::CpoaResult r;
	if (opt.q)
	{
		r = ahg::q_size_cpoa(gf.game, static_cast<std::size_t>(*opt.q));
		std::cout << "notion: " << *opt.q << "-size core\n";
	}
	else
	{
		const auto k = ahg::Rational::parse(*opt.k);
		r = ahg::k_impr_cpoa(gf.game, k);
		std::cout << "notion: " << k << "-improvement core\n";
	}
	std::cout << "optimal welfare: " << r.optimal_welfare << '\n';
	std::cout << "stable partitions: " << r.stable_count << '\n';
	if (r.worst_stable_welfare)
	{
		std::cout << "worst stable welfare: " << *r.worst_stable_welfare << '\n';
		std::cout << "worst stable partition: " << r.worst_stable_partition->str() << '\n';
	}
	std::cout << "verdict: " << ahg::cpoa_kind_name(r.kind) << '\n';
	if (r.kind == ahg::CpoaKind::Ratio || r.kind == ahg::CpoaKind::Undefined)
	{
		std::cout << "ratio: " << r.value << " (" << r.value.decimal() << ")\n";
	}
	return r.kind == ahg::CpoaKind::NoStableOutcome ? exit_negative : exit_positive;
}

int run_greedy(const std::string& file)
{
	const auto gf = ahg::io::game_from_json(ahg::io::load_json(file));
	const ahg::Partition p = ahg::greedy_two_size(gf.game);
	const auto report = ahg::is_q_size_stable(gf.game, p, std::min<std::size_t>(2, gf.game.agent_count()));
	std::cout << "partition: " << p.str() << '\n';
	std::cout << "2-size stable: " << (report.verdict ? "verified" : "FAILED") << '\n';
	std::cout << "social welfare: " << ahg::social_welfare(gf.game, p) << '\n';
	return report.verdict ? exit_positive : exit_negative;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Exact-arithmetic toolkit for relaxed core stability in alpha-hedonic games"};
	app.require_subcommand(1);

	VerifyOptions verify;
	auto* verify_cmd = app.add_subcommand("verify", "Check a partition (game file) or baselines (scenario file) for stability");
	verify_cmd->add_option("file", verify.file, "Game or scenario JSON file")->required();
	verify_cmd->add_option("--partition", verify.partition_file, "JSON file with a partition overriding the game's");
	auto* core_flag = verify_cmd->add_flag("--core", verify.core, "Core stability");
	auto* q_opt = verify_cmd->add_option("--q-size", verify.q_size, "q-size core stability");
	auto* k_opt = verify_cmd->add_option("--improvement", verify.improvement, "k-improvement core stability");
	auto* qk_opt = verify_cmd->add_option("--qk", verify.qk, "(q,k)-core stability: Q K")->expected(2);
	for (auto* o : {core_flag, q_opt, k_opt, qk_opt})
	{
		for (auto* other : {core_flag, q_opt, k_opt, qk_opt})
		{
			if (o != other)
			{
				o->excludes(other);
			}
		}
	}

	BoundTableOptions bounds;
	auto* bound_cmd = app.add_subcommand("bound-table", "CSV of f(q,m) as exact rationals with decimals");
	bound_cmd->add_option("--alpha", bounds.alpha, "ASHG, FHG, MFHG, PairwiseComm or OddEven")->capture_default_str();
	bound_cmd->add_option("--q-range", bounds.q_range, "Q1:Q2")->capture_default_str();
	bound_cmd->add_option("--m-range", bounds.m_range, "M1:M2")->capture_default_str();
	bound_cmd->add_option("--k", bounds.k, "Improvement factor k")->capture_default_str();

	GenerateOptions gen;
	auto* gen_cmd = app.add_subcommand("generate", "Emit a lower-bound construction as a scenario file");
	gen_cmd->add_option("--construction", gen.construction, "hospitable, q3-even, cycle, fhg-q4, ashg-q4, mantel, fig6..fig9")->required();
	gen_cmd->add_option("--alpha", gen.alpha, "Alpha variant (hospitable, q3-even)")->capture_default_str();
	gen_cmd->add_option("--q", gen.q, "Stability size q (hospitable, cycle)");
	gen_cmd->add_option("--m", gen.m, "Coalition size m");
	gen_cmd->add_option("--variant", gen.variant, "fhg or ashg (cycle)")->capture_default_str();
	gen_cmd->add_option("--out", gen.out, "Write the scenario here instead of standard output");

	SearchOptions search;
	auto* search_cmd = app.add_subcommand("search", "Search for a q-size stable scenario improvable beyond gamma");
	search_cmd->add_option("--alpha", search.alpha)->capture_default_str();
	search_cmd->add_option("--q", search.q)->capture_default_str();
	search_cmd->add_option("--m", search.m)->capture_default_str();
	search_cmd->add_option("--gamma", search.gamma, "Rational string")->capture_default_str();
	search_cmd->add_option("--weight-bound", search.weight_bound, "B: |u(i,j)| <= B")->capture_default_str();
	search_cmd->add_option("--baseline-bound", search.baseline_bound, "U: 1 <= baseline <= U")->capture_default_str();
	search_cmd->add_option("--node-limit", search.node_limit, "Default: $AHG_NODE_LIMIT or 1000000");
	search_cmd->add_option("--time-limit", search.time_limit, "Seconds. Default: $AHG_TIME_LIMIT or 600");
	search_cmd->add_option("--threads", search.threads, "Worker threads")->capture_default_str();
	search_cmd->add_option("--out", search.out, "Write the certificate here");

	PoaOptions poa;
	auto* poa_cmd = app.add_subcommand("poa", "Brute-force core price of anarchy");
	poa_cmd->add_option("file", poa.file, "Game JSON file")->required();
	auto* poa_q = poa_cmd->add_option("--q", poa.q, "q-size core");
	auto* poa_k = poa_cmd->add_option("--k", poa.k, "k-improvement core");
	poa_q->excludes(poa_k);
	poa_k->excludes(poa_q);

	std::string greedy_file;
	auto* greedy_cmd = app.add_subcommand("greedy", "Greedy 2-size stable partition");
	greedy_cmd->add_option("file", greedy_file, "Game JSON file")->required();

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e)
	{
		const int code = app.exit(e);
		return code == 0 ? 0 : exit_input_error;
	}

	try
	{
		if (*verify_cmd)
		{
			if (!verify.core && !verify.q_size && !verify.improvement && verify.qk.empty())
			{
				throw ahg::ArgumentError("choose one of --core, --q-size, --improvement, --qk");
			}
			return run_verify(verify);
		}
		if (*bound_cmd)
		{
			return run_bound_table(bounds);
		}
		if (*gen_cmd)
		{
			return run_generate(gen);
		}
		if (*search_cmd)
		{
			return run_search(search);
		}
		if (*poa_cmd)
		{
			if (!poa.q && !poa.k)
			{
				throw ahg::ArgumentError("choose --q or --k");
			}
			return run_poa(poa);
		}
		if (*greedy_cmd)
		{
			return run_greedy(greedy_file);
		}
	}
	catch (const ahg::ResourceError& e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return exit_input_error;
	}
	catch (const nlohmann::json::exception& e)
	{
		std::cerr << "error: malformed input: " << e.what() << '\n';
		return exit_input_error;
	}
	catch (const std::logic_error& e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return exit_input_error;
	}
	catch (const std::runtime_error& e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return exit_input_error;
	}
	return exit_input_error;
}
