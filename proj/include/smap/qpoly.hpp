#pragma once

#include "smap/rational.hpp"

#include <string>
#include <vector>

namespace smap {

/* univariate polynomial in q, coefficient i is the q^i coefficient */
class QPoly {
public:
	QPoly() = default;
	QPoly(const Rational& c);
	explicit QPoly(std::vector<Rational> coeffs);
	static QPoly from_ints(const std::vector<long>& coeffs);
	static QPoly monomial(size_t k, const Rational& c = 1);

	const std::vector<Rational>& coeffs() const { return c_; }
	Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
	bool is_zero() const { return c_.empty(); }
	/* -1 for zero */
	long degree() const { return static_cast<long>(c_.size()) - 1; }

	Rational eval(const Rational& q) const;
	bool is_palindromic() const;
	bool has_nonnegative_integer_coeffs() const;

	QPoly& operator+=(const QPoly& o);
	QPoly& operator-=(const QPoly& o);
	friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
	friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
	friend QPoly operator*(const QPoly& a, const QPoly& b);
	QPoly operator-() const;
	friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

	QPoly pow(unsigned e) const;
	/* exact quotient; throws std::domain_error on nonzero remainder */
	QPoly div_exact(const QPoly& d) const;

	/* "1+4q+6q^2+4q^3+q^4" */
	std::string to_string() const;

private:
	void trim();
	std::vector<Rational> c_;
};

/* 1 + q + ... + q^{n-1} */
QPoly q_int(long n);
/* Gaussian binomial, zero when k > n */
QPoly q_binom(long n, long k);
/* sum_{i=a}^{b} q^i, zero when b < a */
QPoly q_range(long a, long b);

}  // namespace smap
