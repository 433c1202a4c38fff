#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smap/matrix.hpp"
#include "smap/multipoly.hpp"
#include "smap/qpoly.hpp"
#include "smap/rational.hpp"

#include <random>

using namespace smap;

TEST_CASE("rational parsing and printing")
{
	CHECK(to_string(parse_rational("6/8")) == "3/4");
	CHECK(to_string(parse_rational("-20")) == "-20");
	CHECK(to_string(parse_rational("-4/2")) == "-2");
	CHECK_THROWS_AS(parse_rational("4/-2"), std::invalid_argument);
	CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
	CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
	CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
	CHECK(binomial(6, 2) == 15);
	CHECK(binomial(4, 7) == 0);
}

TEST_CASE("monomials in graded-lex order")
{
	auto m = monomials_of_degree(3, 2);
	REQUIRE(m.size() == 6);
	CHECK(m.front() == Exponents{2, 0, 0});
	CHECK(m.back() == Exponents{0, 0, 2});
	/* count is C(n+k-1, k) */
	CHECK(monomials_of_degree(7, 4).size() == 210);
	CHECK(monomials_of_degree(5, 4).size() == 70);
	for (size_t i = 1; i < m.size(); ++i)
		CHECK(GradedLexGreater()(m[i - 1], m[i]));
}

TEST_CASE("polynomial arithmetic and parsing")
{
	std::vector<std::string> v = {"D1", "D2"};
	auto p = parse_polynomial(v, "(D1+D2)^3");
	CHECK(p.to_string() == "D1^3+3*D1^2*D2+3*D1*D2^2+D2^3");
	auto q = parse_polynomial(v, "1/4*D1 - -D2");
	CHECK(q.to_string() == "1/4*D1+D2");
	CHECK(parse_polynomial(v, "0").is_zero());
	CHECK(parse_polynomial(v, "D1-D1").is_zero());
	CHECK(p.is_homogeneous());
	CHECK_FALSE((p + q).is_homogeneous());
	CHECK((p + q).part(1) == q);
	CHECK_THROWS_AS(parse_polynomial(v, "D3"), std::invalid_argument);
	CHECK_THROWS_AS(parse_polynomial(v, "(D1"), std::invalid_argument);
	CHECK_THROWS_AS(parse_polynomial(v, "D1^"), std::invalid_argument);
	CHECK(p.parse_monomial("D1^2*D2") == Exponents{2, 1});
	MultiPoly other({"x"});
	CHECK_THROWS(p * other);
}

TEST_CASE("substitution")
{
	std::vector<std::string> a = {"x", "y"}, b = {"s", "t"};
	auto p = parse_polynomial(a, "x^2-y");
	auto r = p.substitute({parse_polynomial(b, "s+t"), parse_polynomial(b, "2*s*t")});
	CHECK(r == parse_polynomial(b, "s^2+t^2"));
}

TEST_CASE("unary minus binds looser than powers")
{
	std::vector<std::string> v = {"x", "y"};
	CHECK(parse_polynomial(v, "-x^2") == -parse_polynomial(v, "x*x"));
	CHECK(parse_polynomial(v, "y*-x^2") == -parse_polynomial(v, "x^2*y"));
	CHECK(parse_polynomial(v, "(-x)^2") == parse_polynomial(v, "x^2"));
}

TEST_CASE("random polynomial ring axioms")
{
	std::mt19937 rng(7);
	std::uniform_int_distribution<int> c(-9, 9), e(0, 3);
	std::vector<std::string> v = {"a", "b", "c", "d"};
	auto rnd = [&]() {
		MultiPoly p(v);
		for (int i = 0; i < 5; ++i)
			p.add_term({e(rng), e(rng), e(rng), e(rng)}, ratio(c(rng), 1 + std::abs(c(rng))));
		return p;
	};
	for (int t = 0; t < 100; ++t) {
		auto x = rnd(), y = rnd(), z = rnd();
		CHECK(x * (y + z) == x * y + x * z);
		CHECK((x * y) * z == x * (y * z));
		CHECK(x * y == y * x);
		CHECK(x.pow(3) == x * x * x);
		CHECK(parse_polynomial(v, x.to_string()) == x);
		CHECK((x - y) + y == x);
	}
}

TEST_CASE("rref and kernels")
{
	auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
	auto r = rref(m);
	CHECK(r.rank == 2);
	CHECK(r.pivot_cols == std::vector<size_t>{0, 1});
	auto k = kernel_basis(m);
	REQUIRE(k.size() == 1);
	/* hand solution: x = -z, y = -z */
	CHECK(k[0] == RationalVector{1, 1, -1});
	CHECK(normalize_leading({0, -2, 4}) == RationalVector{0, 1, -2});
	CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
	CHECK(kernel_basis(RationalMatrix(0, 2)).size() == 2);
}

TEST_CASE("trinomial expansion against multinomial coefficients")
{
	std::vector<std::string> v = {"x", "y", "z"};
	auto fact = [](long n) {
		Rational f = 1;
		for (long i = 2; i <= n; ++i)
			f *= i;
		return f;
	};
	auto s = parse_polynomial(v, "x+y+z");
	MultiPoly p = MultiPoly::constant(v, 1);
	for (int n = 0; n <= 6; ++n) {
		MultiPoly expect(v);
		for (int a = 0; a <= n; ++a)
			for (int b = 0; a + b <= n; ++b)
				expect.add_term({a, b, n - a - b}, fact(n) / (fact(a) * fact(b) * fact(n - a - b)));
		CHECK(p == expect);
		p = p * s;
	}
}

/* Laplace expansion along the first row */
static Rational det(const std::vector<std::vector<Rational>>& a)
{
	const size_t n = a.size();
	if (n == 0)
		return 1;
	Rational s = 0;
	for (size_t j = 0; j < n; ++j) {
		if (a[0][j] == 0)
			continue;
		std::vector<std::vector<Rational>> minor;
		for (size_t i = 1; i < n; ++i) {
			std::vector<Rational> row;
			for (size_t k = 0; k < n; ++k)
				if (k != j)
					row.push_back(a[i][k]);
			minor.push_back(row);
		}
		s += (j % 2 ? -1 : 1) * a[0][j] * det(minor);
	}
	return s;
}

/* largest k with a nonzero k x k minor */
static size_t rank_by_minors(const RationalMatrix& m)
{
	size_t best = 0;
	const size_t R = m.rows(), C = m.cols();
	for (unsigned rs = 1; rs < (1u << R); ++rs) {
		for (unsigned cs = 1; cs < (1u << C); ++cs) {
			size_t k = static_cast<size_t>(__builtin_popcount(rs));
			if (k != static_cast<size_t>(__builtin_popcount(cs)) || k <= best)
				continue;
			std::vector<std::vector<Rational>> a;
			for (size_t i = 0; i < R; ++i) {
				if (!(rs >> i & 1))
					continue;
				std::vector<Rational> row;
				for (size_t j = 0; j < C; ++j)
					if (cs >> j & 1)
						row.push_back(m.at(i, j));
				a.push_back(row);
			}
			if (det(a) != 0)
				best = k;
		}
	}
	return best;
}

TEST_CASE("rank-nullity and idempotence on random matrices")
{
	std::mt19937 rng(11);
	std::uniform_int_distribution<int> c(-3, 3);
	for (int t = 0; t < 70; ++t) {
		size_t rows = 1 + t % 5, cols = 1 + (t / 5) % 7;
		RationalMatrix m(rows, cols);
		for (size_t i = 0; i < rows; ++i)
			for (size_t j = 0; j < cols; ++j)
				m.at(i, j) = ratio(c(rng), 1 + std::abs(c(rng)));
		auto r = rref(m);
		CHECK(r.rank == rank_by_minors(m));
		CHECK(rref(r.matrix).matrix == r.matrix);
		auto k = kernel_basis(m);
		CHECK(k.size() + r.rank == cols);
		for (const auto& v : k)
			for (const auto& x : m.apply(v))
				CHECK(x == 0);
	}
}

/* q-Pascal recursion, independent of the product formula */
static QPoly pascal(long n, long k)
{
	if (k < 0 || k > n)
		return QPoly();
	if (k == 0 || k == n)
		return QPoly(1);
	return pascal(n - 1, k - 1) + QPoly::monomial(static_cast<size_t>(k)) * pascal(n - 1, k);
}

TEST_CASE("q-integers and q-binomials")
{
	CHECK(q_int(3).to_string() == "1+q+q^2");
	CHECK(q_binom(4, 2).to_string() == "1+q+2q^2+q^3+q^4");
	for (long n = 0; n <= 9; ++n)
		for (long k = 0; k <= n + 1; ++k)
			CHECK(q_binom(n, k) == pascal(n, k));
	/* at q=1 the Gaussian coefficient is the ordinary one */
	CHECK(q_binom(9, 4).eval(1) == binomial(9, 4));
	CHECK(q_binom(6, 3).is_palindromic());
	CHECK_THROWS_AS(q_int(3).div_exact(q_int(2)), std::domain_error);
	CHECK((q_int(2) * q_int(3)).div_exact(q_int(3)) == q_int(2));
	CHECK(QPoly::from_ints({1, -1}).to_string() == "1-q");
	CHECK((-QPoly(1)).to_string() == "-1");
}
