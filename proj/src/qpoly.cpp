#include "smap/qpoly.hpp"

#include <stdexcept>

namespace smap {

QPoly::QPoly(const Rational& c)
{
	if (c != 0)
		c_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
	trim();
}

QPoly QPoly::from_ints(const std::vector<long>& coeffs)
{
	std::vector<Rational> c;
	for (long x : coeffs)
		c.emplace_back(x);
	return QPoly(std::move(c));
}

QPoly QPoly::monomial(size_t k, const Rational& c)
{
	std::vector<Rational> v(k + 1);
	v[k] = c;
	return QPoly(std::move(v));
}

void QPoly::trim()
{
	while (!c_.empty() && c_.back() == 0)
		c_.pop_back();
}

Rational QPoly::eval(const Rational& q) const
{
	Rational r = 0;
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		r = r * q + *it;
	return r;
}

bool QPoly::is_palindromic() const
{
	for (size_t i = 0, j = c_.size(); i < j--; ++i)
		if (c_[i] != c_[j])
			return false;
	return true;
}

bool QPoly::has_nonnegative_integer_coeffs() const
{
	for (const auto& x : c_)
		if (x < 0 || x.get_den() != 1)
			return false;
	return true;
}

QPoly& QPoly::operator+=(const QPoly& o)
{
	if (o.c_.size() > c_.size())
		c_.resize(o.c_.size());
	for (size_t i = 0; i < o.c_.size(); ++i)
		c_[i] += o.c_[i];
	trim();
	return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
	if (o.c_.size() > c_.size())
		c_.resize(o.c_.size());
	for (size_t i = 0; i < o.c_.size(); ++i)
		c_[i] -= o.c_[i];
	trim();
	return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
	if (a.c_.empty() || b.c_.empty())
		return QPoly();
	std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
	for (size_t i = 0; i < a.c_.size(); ++i)
		for (size_t j = 0; j < b.c_.size(); ++j)
			c[i + j] += a.c_[i] * b.c_[j];
	return QPoly(std::move(c));
}

QPoly QPoly::operator-() const
{
	QPoly r = *this;
	for (auto& x : r.c_)
		x = -x;
	return r;
}

QPoly QPoly::pow(unsigned e) const
{
	QPoly r(1);
	for (unsigned i = 0; i < e; ++i)
		r = r * *this;
	return r;
}

QPoly QPoly::div_exact(const QPoly& d) const
{
	if (d.is_zero())
		throw std::domain_error("division by the zero polynomial");
	std::vector<Rational> rem = c_;
	if (rem.size() < d.c_.size()) {
		if (!is_zero())
			throw std::domain_error("inexact polynomial division");
		return QPoly();
	}
	size_t n = rem.size() - d.c_.size() + 1;
	std::vector<Rational> quo(n);
	const Rational& lead = d.c_.back();
	for (size_t k = n; k-- > 0;) {
		Rational f = rem[k + d.c_.size() - 1] / lead;
		quo[k] = f;
		if (f == 0)
			continue;
		for (size_t j = 0; j < d.c_.size(); ++j)
			rem[k + j] -= f * d.c_[j];
	}
	for (const auto& x : rem)
		if (x != 0)
			throw std::domain_error("inexact polynomial division");
	return QPoly(std::move(quo));
}

std::string QPoly::to_string() const
{
	if (c_.empty())
		return "0";
	std::string out;
	for (size_t i = 0; i < c_.size(); ++i) {
		const Rational& x = c_[i];
		if (x == 0)
			continue;
		Rational a = abs(x);
		if (out.empty()) {
			if (x < 0)
				out += '-';
		} else {
			out += x < 0 ? '-' : '+';
		}
		if (i == 0 || a != 1)
			out += smap::to_string(a);
		if (i >= 1)
			out += 'q';
		if (i >= 2)
			out += '^' + std::to_string(i);
	}
	return out;
}

QPoly q_int(long n)
{
	return q_range(0, n - 1);
}

QPoly q_range(long a, long b)
{
	if (b < a)
		return QPoly();
	if (a < 0)
		throw std::invalid_argument("negative exponent in q_range");
	std::vector<Rational> c(static_cast<size_t>(b) + 1);
	for (long i = a; i <= b; ++i)
		c[static_cast<size_t>(i)] = 1;
	return QPoly(std::move(c));
}

QPoly q_binom(long n, long k)
{
	if (n < 0 || k < 0 || k > n)
		return QPoly();
	QPoly num(1), den(1);
	for (long i = 0; i < k; ++i) {
		num = num * q_int(n - i);
		den = den * q_int(i + 1);
	}
	return num.div_exact(den);
}

}  // namespace smap
