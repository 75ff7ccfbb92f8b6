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

#ifndef AHG_RATIONAL_HPP
#define AHG_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <regex>
#include <string>
#include <string_view>

#include "ahg/errors.hpp"

namespace ahg {

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always kept in canonical form: positive denominator and coprime parts.
class Rational
{
public:
	Rational() = default;
	template <std::integral T>
	Rational(T value) : value_(static_cast<long>(value)) {} // NOLINT(google-explicit-constructor)

	Rational(long numerator, long denominator)
	{
		if (denominator == 0)
		{
			throw DomainError("rational with zero denominator");
		}
		value_ = mpq_class(numerator, denominator);
		value_.canonicalize();
	}

	explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

	/// Parses "p/q" or an integer string. Decimal and exponent notation is rejected.
	static Rational parse(std::string_view text)
	{
		static const std::regex pattern(R"(\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*)");
		std::string s(text);
		std::smatch match;
		if (!std::regex_match(s, match, pattern))
		{
			throw ParseError("not an exact rational literal: '" + s + "'");
		}
		mpz_class num(match[1].str().front() == '+' ? match[1].str().substr(1) : match[1].str(), 10);
		mpz_class den(1);
		if (match[2].matched)
		{
			den = mpz_class(match[2].str(), 10);
			if (den == 0)
			{
				throw ParseError("zero denominator in '" + s + "'");
			}
		}
		return Rational(mpq_class(num, den));
	}

	const mpq_class& raw() const noexcept { return value_; }

	mpz_class numerator() const { return value_.get_num(); }
	mpz_class denominator() const { return value_.get_den(); }

	bool is_integer() const { return value_.get_den() == 1; }
	int sign() const { return sgn(value_); }

	/// "p/q", or "p" when the denominator is one.
	std::string str() const
	{
		if (is_integer())
		{
			return value_.get_num().get_str();
		}
		return value_.get_num().get_str() + "/" + value_.get_den().get_str();
	}

	/// Fixed-point rendering rounded half away from zero; display only.
	std::string decimal(int digits = 6) const
	{
		mpz_class scale;
		mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
		mpz_class scaled_num = abs(value_.get_num()) * scale * 2 + value_.get_den();
		mpz_class q = scaled_num / (value_.get_den() * 2);
		std::string body = q.get_str();
		if (static_cast<int>(body.size()) <= digits)
		{
			body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
		}
		std::string out = body.substr(0, body.size() - static_cast<std::size_t>(digits));
		if (digits > 0)
		{
			out += "." + body.substr(body.size() - static_cast<std::size_t>(digits));
		}
		return (sign() < 0 && q != 0 ? "-" : "") + out;
	}

	double to_double() const { return value_.get_d(); }

	Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
	Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
	Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
	Rational& operator/=(const Rational& o)
	{
		if (o.sign() == 0)
		{
			throw DomainError("division by zero");
		}
		value_ /= o.value_;
		return *this;
	}

	friend Rational operator+(Rational a, const Rational& b) { return a += b; }
	friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
	friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

	friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
	friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
	{
		const int c = cmp(a.value_, b.value_);
		return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
	}

	friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
	mpq_class value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace ahg

#endif // AHG_RATIONAL_HPP
