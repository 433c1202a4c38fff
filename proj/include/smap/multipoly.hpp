#pragma once

#include "smap/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace smap {

using Exponents = std::vector<int>;

/* graded lexicographic, larger first; generator 0 is most significant */
struct GradedLexGreater {
	bool operator()(const Exponents& a, const Exponents& b) const;
};

/* all monomials of total degree k in n degree-1 generators, graded-lex order */
std::vector<Exponents> monomials_of_degree(size_t n, int k);

class MultiPoly {
public:
	using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

	MultiPoly() = default;
	explicit MultiPoly(std::vector<std::string> vars);
	MultiPoly(std::vector<std::string> vars, std::vector<int> degrees);

	static MultiPoly constant(const std::vector<std::string>& vars, const Rational& c);
	static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name);
	static MultiPoly monomial(const std::vector<std::string>& vars, const Exponents& e,
	                          const Rational& c = 1);

	const std::vector<std::string>& vars() const { return vars_; }
	const std::vector<int>& degrees() const { return degrees_; }
	const TermMap& terms() const { return terms_; }
	size_t nvars() const { return vars_.size(); }

	bool is_zero() const { return terms_.empty(); }
	Rational coeff(const Exponents& e) const;
	void add_term(const Exponents& e, const Rational& c);

	int monomial_degree(const Exponents& e) const;
	/* -1 for the zero polynomial */
	int degree() const;
	bool is_homogeneous() const;
	/* the homogeneous piece of degree k */
	MultiPoly part(int k) const;

	MultiPoly& operator+=(const MultiPoly& o);
	MultiPoly& operator-=(const MultiPoly& o);
	MultiPoly& operator*=(const Rational& c);

	friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
	friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
	friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
	friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
	friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
	MultiPoly operator-() const;
	friend bool operator==(const MultiPoly& a, const MultiPoly& b);

	MultiPoly pow(int e) const;

	/* replace generator i by images[i]; images share a common variable list */
	MultiPoly substitute(const std::vector<MultiPoly>& images) const;

	/* "3/4*D1^2*H1-D0" in graded-lex order; "0" for zero */
	std::string to_string() const;
	std::string monomial_string(const Exponents& e) const;
	Exponents parse_monomial(const std::string& s) const;

private:
	void check_compatible(const MultiPoly& o) const;

	std::vector<std::string> vars_;
	std::vector<int> degrees_;
	TermMap terms_;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_scale(const MultiPoly& p, const Rational& c);

/* parse "1/4*D1+D0-(D1+D2)^3" over the given generators; throws std::invalid_argument */
MultiPoly parse_polynomial(const std::vector<std::string>& vars, const std::string& s);

}  // namespace smap
