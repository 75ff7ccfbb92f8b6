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

#ifndef AHG_LP_HPP
#define AHG_LP_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ahg/errors.hpp"
#include "ahg/rational.hpp"

// Exact two-phase primal simplex over rationals with Bland's rule.

namespace ahg::lp {

enum class Relation
{
	LessEqual,
	Equal,
	GreaterEqual
};

struct Constraint
{
	std::vector<Rational> coefficients;
	Relation relation = Relation::LessEqual;
	Rational rhs;
};

/// maximize objective . x subject to the constraints; every variable is free
/// unless a constraint bounds it.
class LinearProgram
{
public:
	std::size_t add_variable(std::string name)
	{
		names_.push_back(std::move(name));
		objective_.emplace_back();
		for (auto& c : constraints_)
		{
			c.coefficients.emplace_back();
		}
		return names_.size() - 1;
	}

	std::size_t variable_count() const noexcept { return names_.size(); }
	const std::vector<std::string>& variable_names() const noexcept { return names_; }
	const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
	const std::vector<Rational>& objective() const noexcept { return objective_; }

	void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs)
	{
		if (coefficients.size() != names_.size())
		{
			throw ArgumentError("constraint has " + std::to_string(coefficients.size()) + " coefficients for " +
								std::to_string(names_.size()) + " variables");
		}
		constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
	}

	/// Sparse form: (variable, coefficient) pairs; repeated variables accumulate.
	void add_sparse_constraint(const std::vector<std::pair<std::size_t, Rational>>& terms, Relation relation, Rational rhs)
	{
		std::vector<Rational> dense(names_.size());
		for (const auto& [var, coef] : terms)
		{
			if (var >= names_.size())
			{
				throw ArgumentError("constraint refers to unknown variable " + std::to_string(var));
			}
			dense[var] += coef;
		}
		add_constraint(std::move(dense), relation, std::move(rhs));
	}

	void set_objective(std::vector<Rational> coefficients)
	{
		if (coefficients.size() != names_.size())
		{
			throw ArgumentError("objective size does not match the variable count");
		}
		objective_ = std::move(coefficients);
	}

	void set_objective_coefficient(std::size_t var, Rational coef) { objective_.at(var) = std::move(coef); }

private:
	std::vector<std::string> names_;
	std::vector<Constraint> constraints_;
	std::vector<Rational> objective_;
};

enum class Status
{
	Optimal,
	Infeasible,
	Unbounded,
	CutOff ///< incremental re-solve stopped once the optimum fell to the cutoff
};

struct Result
{
	Status status = Status::Infeasible;
	Rational value;                  ///< objective value when Optimal
	std::vector<Rational> assignment; ///< one entry per variable when Optimal
	std::size_t pivots = 0;
};

struct SolveOptions
{
	std::ostream* trace = nullptr; ///< dumps tableaus after every pivot when set
};

inline bool satisfies(const Constraint& c, const std::vector<Rational>& x)
{
	Rational lhs;
	for (std::size_t k = 0; k < x.size(); ++k)
	{
		if (c.coefficients[k].sign() != 0)
		{
			lhs += c.coefficients[k] * x[k];
		}
	}
	switch (c.relation)
	{
	case Relation::LessEqual: return lhs <= c.rhs;
	case Relation::Equal: return lhs == c.rhs;
	case Relation::GreaterEqual: return lhs >= c.rhs;
	}
	return false;
}

/// Exact feasibility of an assignment; no tolerance.
inline bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x)
{
	if (x.size() != lp.variable_count())
	{
		return false;
	}
	for (const auto& c : lp.constraints())
	{
		if (!satisfies(c, x))
		{
			return false;
		}
	}
	return true;
}

namespace detail {

// Dense simplex tableau over mpq_class. Row r reads
//   x_basis(r) + sum_c at(r, c) x_c = rhs(r)
// and the objective row holds reduced costs d_c = z_c - c_c together with
// the current objective value; d >= 0 everywhere means the basis is optimal.
class Tableau
{
public:
	explicit Tableau(std::size_t cols) : cols_(cols), cost_(cols) {}

	std::size_t rows() const noexcept { return a_.size(); }
	std::size_t cols() const noexcept { return cols_; }
	mpq_class& at(std::size_t r, std::size_t c) { return a_[r][c]; }
	const mpq_class& at(std::size_t r, std::size_t c) const { return a_[r][c]; }
	mpq_class& rhs(std::size_t r) { return rhs_[r]; }
	const mpq_class& rhs(std::size_t r) const { return rhs_[r]; }
	std::size_t basis(std::size_t r) const { return basis_[r]; }
	mpq_class& cost(std::size_t c) { return cost_[c]; }
	const mpq_class& cost(std::size_t c) const { return cost_[c]; }
	mpq_class& value() { return value_; }
	const mpq_class& value() const { return value_; }

	std::size_t add_column()
	{
		for (auto& row : a_)
		{
			row.emplace_back();
		}
		cost_.emplace_back();
		return cols_++;
	}

	void add_row(std::vector<mpq_class> coefficients, mpq_class rhs, std::size_t basic)
	{
		a_.push_back(std::move(coefficients));
		rhs_.push_back(std::move(rhs));
		basis_.push_back(basic);
	}

	void erase_row(std::size_t r)
	{
		a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
		rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
		basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
	}

	/// Drops every column from `first` on; they must all be nonbasic.
	void truncate_columns(std::size_t first)
	{
		for (auto& row : a_)
		{
			row.resize(first);
		}
		cost_.resize(first);
		cols_ = first;
	}

	/// Eliminates basic columns from a row given in column space (used for new rows).
	void reduce(std::vector<mpq_class>& row, mpq_class& rhs) const
	{
		for (std::size_t r = 0; r < a_.size(); ++r)
		{
			const mpq_class f = row[basis_[r]];
			if (sgn(f) == 0)
			{
				continue;
			}
			for (std::size_t c = 0; c < cols_; ++c)
			{
				if (sgn(a_[r][c]) != 0)
				{
					row[c] -= f * a_[r][c];
				}
			}
			rhs -= f * rhs_[r];
		}
	}

	void pivot(std::size_t pr, std::size_t pc)
	{
		const mpq_class inv = 1 / a_[pr][pc];
		std::vector<std::size_t> nonzero;
		for (std::size_t c = 0; c < cols_; ++c)
		{
			if (sgn(a_[pr][c]) != 0)
			{
				a_[pr][c] *= inv;
				nonzero.push_back(c);
			}
		}
		rhs_[pr] *= inv;
		mpq_class tmp;
		auto eliminate = [&](std::vector<mpq_class>& row, mpq_class& rhs) {
			const mpq_class f = row[pc];
			if (sgn(f) == 0)
			{
				return;
			}
			for (std::size_t c : nonzero)
			{
				mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), a_[pr][c].get_mpq_t());
				mpq_sub(row[c].get_mpq_t(), row[c].get_mpq_t(), tmp.get_mpq_t());
			}
			mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), rhs_[pr].get_mpq_t());
			mpq_sub(rhs.get_mpq_t(), rhs.get_mpq_t(), tmp.get_mpq_t());
		};
		for (std::size_t r = 0; r < a_.size(); ++r)
		{
			if (r != pr)
			{
				eliminate(a_[r], rhs_[r]);
			}
		}
		// Objective row: z + d . x = value.
		eliminate(cost_, value_);
		basis_[pr] = pc;
	}

	void dump(std::ostream& os) const
	{
		for (std::size_t r = 0; r < a_.size(); ++r)
		{
			os << "x" << basis_[r] << " |";
			for (std::size_t c = 0; c < cols_; ++c)
			{
				os << ' ' << a_[r][c];
			}
			os << " | " << rhs_[r] << '\n';
		}
		os << "d  |";
		for (std::size_t c = 0; c < cols_; ++c)
		{
			os << ' ' << cost_[c];
		}
		os << " | " << value_ << "\n\n";
	}

	/// Sets the objective row for costs c (maximize c . x) under the current basis.
	void set_costs(const std::vector<mpq_class>& c)
	{
		for (std::size_t k = 0; k < cols_; ++k)
		{
			cost_[k] = -c[k];
		}
		value_ = 0;
		for (std::size_t r = 0; r < a_.size(); ++r)
		{
			const mpq_class& cb = c[basis_[r]];
			if (sgn(cb) == 0)
			{
				continue;
			}
			for (std::size_t k = 0; k < cols_; ++k)
			{
				if (sgn(a_[r][k]) != 0)
				{
					cost_[k] += cb * a_[r][k];
				}
			}
			value_ += cb * rhs_[r];
		}
	}

private:
	std::size_t cols_;
	std::vector<std::vector<mpq_class>> a_;
	std::vector<mpq_class> rhs_;
	std::vector<std::size_t> basis_;
	std::vector<mpq_class> cost_;
	mpq_class value_;
};

inline void trace_pivot(const SolveOptions& options, const Tableau& t, std::size_t count, std::size_t entering, std::size_t row)
{
	if (options.trace)
	{
		*options.trace << "pivot " << count << ": x" << entering << " enters at row " << row << '\n';
		t.dump(*options.trace);
	}
}

enum class PhaseOutcome
{
	Optimal,
	Unbounded
};

// Primal simplex on columns below `limit`. Bland's rule: the lowest-index
// column with negative reduced cost enters; ratio ties leave by lowest basic index.
inline PhaseOutcome primal_simplex(Tableau& t, std::size_t limit, std::size_t& pivots, const SolveOptions& options)
{
	while (true)
	{
		std::optional<std::size_t> entering;
		for (std::size_t c = 0; c < limit && !entering; ++c)
		{
			if (sgn(t.cost(c)) < 0)
			{
				entering = c;
			}
		}
		if (!entering)
		{
			return PhaseOutcome::Optimal;
		}
		std::optional<std::size_t> leaving;
		mpq_class best_ratio;
		for (std::size_t r = 0; r < t.rows(); ++r)
		{
			if (sgn(t.at(r, *entering)) <= 0)
			{
				continue;
			}
			mpq_class ratio = t.rhs(r) / t.at(r, *entering);
			if (!leaving || ratio < best_ratio || (ratio == best_ratio && t.basis(r) < t.basis(*leaving)))
			{
				leaving = r;
				best_ratio = std::move(ratio);
			}
		}
		if (!leaving)
		{
			return PhaseOutcome::Unbounded;
		}
		t.pivot(*leaving, *entering);
		trace_pivot(options, t, ++pivots, *entering, *leaving);
	}
}

enum class DualOutcome
{
	Optimal,
	Infeasible,
	CutOff
};

// Dual simplex from a dual-feasible basis, smallest-index rule on both sides.
// The objective value never increases, so it may stop once it reaches `cutoff`.
inline DualOutcome dual_simplex(Tableau& t, const std::optional<mpq_class>& cutoff, std::size_t& pivots, const SolveOptions& options)
{
	while (true)
	{
		if (cutoff && t.value() <= *cutoff)
		{
			return DualOutcome::CutOff;
		}
		std::optional<std::size_t> leaving;
		for (std::size_t r = 0; r < t.rows(); ++r)
		{
			if (sgn(t.rhs(r)) < 0 && (!leaving || t.basis(r) < t.basis(*leaving)))
			{
				leaving = r;
			}
		}
		if (!leaving)
		{
			return DualOutcome::Optimal;
		}
		std::optional<std::size_t> entering;
		mpq_class best_ratio;
		for (std::size_t c = 0; c < t.cols(); ++c)
		{
			if (sgn(t.at(*leaving, c)) >= 0)
			{
				continue;
			}
			mpq_class ratio = t.cost(c) / -t.at(*leaving, c);
			if (!entering || ratio < best_ratio)
			{
				entering = c;
				best_ratio = std::move(ratio);
			}
		}
		if (!entering)
		{
			return DualOutcome::Infeasible;
		}
		t.pivot(*leaving, *entering);
		trace_pivot(options, t, ++pivots, *entering, *leaving);
	}
}

} // namespace detail

/// Two-phase simplex that keeps its final tableau, so rows can be added later
/// and re-optimized with the dual simplex from the previous optimum.
///
/// Variables with a lower bound given by a single-variable row are shifted to
/// start at that bound; the remaining free variables are split into x+ - x-.
class Solver
{
public:
	explicit Solver(const LinearProgram& lp, SolveOptions options = {}) : options_(options), tableau_(0)
	{
		build(lp);
	}

	const Result& result() const noexcept { return result_; }

	/// Adds a row and re-optimizes. Requires the current status to be Optimal.
	/// With a cutoff, stops early with Status::CutOff once the optimum is known
	/// to be at most the cutoff.
	const Result& add_constraint(const std::vector<Rational>& coefficients, Relation relation, const Rational& rhs,
								 const std::optional<Rational>& cutoff = std::nullopt)
	{
		if (result_.status != Status::Optimal)
		{
			throw PreconditionError("rows can only be added to a solved, optimal program");
		}
		if (coefficients.size() != objective_.size())
		{
			throw ArgumentError("constraint width does not match the variable count");
		}
		if (relation == Relation::Equal)
		{
			append_row(coefficients, mpq_class(1), rhs.raw());
			append_row(coefficients, mpq_class(-1), rhs.raw());
		}
		else
		{
			append_row(coefficients, mpq_class(relation == Relation::LessEqual ? 1 : -1), rhs.raw());
		}
		std::optional<mpq_class> cut;
		if (cutoff)
		{
			cut = cutoff->raw();
		}
		switch (detail::dual_simplex(tableau_, cut, result_.pivots, options_))
		{
		case detail::DualOutcome::Optimal:
			extract();
			break;
		case detail::DualOutcome::Infeasible:
			result_.status = Status::Infeasible;
			result_.assignment.clear();
			break;
		case detail::DualOutcome::CutOff:
			result_.status = Status::CutOff;
			result_.value = Rational(tableau_.value());
			result_.assignment.clear();
			break;
		}
		return result_;
	}

private:
	struct Column
	{
		bool shifted = false;
		mpq_class lower; ///< shift when shifted
		std::size_t pos = 0;
		std::size_t neg = 0; ///< split partner when not shifted
	};

	// Coefficients of sign * (a . x) in column space, with the shift moved to the right-hand side.
	std::vector<mpq_class> to_columns(const std::vector<Rational>& a, const mpq_class& sign, mpq_class& rhs, std::size_t width) const
	{
		std::vector<mpq_class> row(width);
		for (std::size_t k = 0; k < a.size(); ++k)
		{
			if (a[k].sign() == 0)
			{
				continue;
			}
			const mpq_class coef = sign * a[k].raw();
			row[columns_[k].pos] = coef;
			if (columns_[k].shifted)
			{
				rhs -= coef * columns_[k].lower;
			}
			else
			{
				row[columns_[k].neg] = -coef;
			}
		}
		return row;
	}

	void append_row(const std::vector<Rational>& a, const mpq_class& sign, const mpq_class& b)
	{
		const std::size_t slack = tableau_.add_column();
		mpq_class rhs = sign * b;
		auto row = to_columns(a, sign, rhs, tableau_.cols());
		row[slack] = 1;
		tableau_.reduce(row, rhs);
		row[slack] = 1;
		tableau_.add_row(std::move(row), std::move(rhs), slack);
	}

	void build(const LinearProgram& lp)
	{
		const std::size_t n = lp.variable_count();
		const auto& cons = lp.constraints();
		objective_.resize(n);
		for (std::size_t k = 0; k < n; ++k)
		{
			objective_[k] = lp.objective()[k].raw();
		}

		// Presolve: the tightest single-variable lower bound of each variable becomes a shift.
		std::vector<std::optional<std::size_t>> bound_row(n);
		std::vector<mpq_class> lower(n);
		for (std::size_t r = 0; r < cons.size(); ++r)
		{
			const auto& c = cons[r];
			if (c.coefficients.size() != n)
			{
				throw ArgumentError("malformed linear program: constraint width mismatch");
			}
			std::optional<std::size_t> only;
			bool single = true;
			for (std::size_t k = 0; k < n && single; ++k)
			{
				if (c.coefficients[k].sign() != 0)
				{
					single = !only;
					only = k;
				}
			}
			if (!single || !only)
			{
				continue;
			}
			const int s = c.coefficients[*only].sign();
			const bool is_lower = c.relation == Relation::Equal || (s > 0) == (c.relation == Relation::GreaterEqual);
			if (!is_lower)
			{
				continue;
			}
			const mpq_class bound = c.rhs.raw() / c.coefficients[*only].raw();
			if (!bound_row[*only] || bound > lower[*only])
			{
				bound_row[*only] = r;
				lower[*only] = bound;
			}
		}
		std::vector<bool> dropped(cons.size(), false);
		std::size_t width = 0;
		columns_.resize(n);
		for (std::size_t k = 0; k < n; ++k)
		{
			columns_[k].pos = width++;
			if (bound_row[k] && cons[*bound_row[k]].relation != Relation::Equal)
			{
				columns_[k].shifted = true;
				columns_[k].lower = lower[k];
				dropped[*bound_row[k]] = true;
			}
			else if (bound_row[k])
			{
				columns_[k].shifted = true;
				columns_[k].lower = lower[k];
			}
			else
			{
				columns_[k].neg = width++;
			}
		}

		// Rows in column space with nonnegative right-hand sides.
		struct Row
		{
			std::vector<mpq_class> a;
			mpq_class rhs;
			Relation relation;
		};
		std::vector<Row> rows;
		for (std::size_t r = 0; r < cons.size(); ++r)
		{
			if (dropped[r])
			{
				continue;
			}
			Row row;
			row.rhs = cons[r].rhs.raw();
			row.a = to_columns(cons[r].coefficients, mpq_class(1), row.rhs, width);
			row.relation = cons[r].relation;
			if (sgn(row.rhs) < 0)
			{
				for (auto& v : row.a)
				{
					v = -v;
				}
				row.rhs = -row.rhs;
				if (row.relation != Relation::Equal)
				{
					row.relation = row.relation == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
				}
			}
			rows.push_back(std::move(row));
		}
		std::size_t slacks = 0;
		std::size_t artificials = 0;
		for (const auto& row : rows)
		{
			slacks += row.relation != Relation::Equal;
			artificials += row.relation != Relation::LessEqual;
		}
		const std::size_t artificial_base = width + slacks;
		const std::size_t cols = artificial_base + artificials;
		tableau_ = detail::Tableau(cols);
		std::size_t next_slack = width;
		std::size_t next_artificial = artificial_base;
		for (auto& row : rows)
		{
			row.a.resize(cols);
			std::size_t basic = 0;
			switch (row.relation)
			{
			case Relation::LessEqual:
				row.a[next_slack] = 1;
				basic = next_slack++;
				break;
			case Relation::GreaterEqual:
				row.a[next_slack++] = -1;
				row.a[next_artificial] = 1;
				basic = next_artificial++;
				break;
			case Relation::Equal:
				row.a[next_artificial] = 1;
				basic = next_artificial++;
				break;
			}
			tableau_.add_row(std::move(row.a), std::move(row.rhs), basic);
		}

		if (artificials > 0)
		{
			std::vector<mpq_class> phase1(cols);
			for (std::size_t c = artificial_base; c < cols; ++c)
			{
				phase1[c] = -1;
			}
			tableau_.set_costs(phase1);
			detail::primal_simplex(tableau_, cols, result_.pivots, options_);
			if (sgn(tableau_.value()) < 0)
			{
				result_.status = Status::Infeasible;
				return;
			}
			// Drive zero-level artificials out of the basis; rows with no other support are redundant.
			for (std::size_t r = 0; r < tableau_.rows();)
			{
				if (tableau_.basis(r) < artificial_base)
				{
					++r;
					continue;
				}
				std::optional<std::size_t> replacement;
				for (std::size_t c = 0; c < artificial_base && !replacement; ++c)
				{
					if (sgn(tableau_.at(r, c)) != 0)
					{
						replacement = c;
					}
				}
				if (replacement)
				{
					tableau_.pivot(r, *replacement);
					detail::trace_pivot(options_, tableau_, ++result_.pivots, *replacement, r);
					++r;
				}
				else
				{
					tableau_.erase_row(r);
				}
			}
			tableau_.truncate_columns(artificial_base);
		}

		std::vector<mpq_class> cost(tableau_.cols());
		for (std::size_t k = 0; k < n; ++k)
		{
			cost[columns_[k].pos] = objective_[k];
			if (!columns_[k].shifted)
			{
				cost[columns_[k].neg] = -objective_[k];
			}
		}
		tableau_.set_costs(cost);
		if (detail::primal_simplex(tableau_, tableau_.cols(), result_.pivots, options_) == detail::PhaseOutcome::Unbounded)
		{
			result_.status = Status::Unbounded;
			return;
		}
		extract();
	}

	void extract()
	{
		std::vector<mpq_class> column_value(tableau_.cols());
		for (std::size_t r = 0; r < tableau_.rows(); ++r)
		{
			column_value[tableau_.basis(r)] = tableau_.rhs(r);
		}
		const std::size_t n = columns_.size();
		result_.assignment.resize(n);
		mpq_class value = 0;
		for (std::size_t k = 0; k < n; ++k)
		{
			mpq_class x = column_value[columns_[k].pos];
			x += columns_[k].shifted ? columns_[k].lower : -column_value[columns_[k].neg];
			value += objective_[k] * x;
			result_.assignment[k] = Rational(std::move(x));
		}
		result_.value = Rational(std::move(value));
		result_.status = Status::Optimal;
	}

	SolveOptions options_;
	detail::Tableau tableau_;
	std::vector<Column> columns_;
	std::vector<mpq_class> objective_;
	Result result_;
};

inline Result solve(const LinearProgram& lp, const SolveOptions& options = {}) { return Solver(lp, options).result(); }

} // namespace ahg::lp

#endif // AHG_LP_HPP
