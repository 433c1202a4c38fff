#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smap/serre.hpp"

using namespace smap;

TEST_CASE("symmetric and exterior squares")
{
	/* P^1: Sym^2 P^1 = P^2 */
	CHECK(sigma2(q_int(2)) == q_int(3));
	CHECK(lambda2(q_int(2)) == QPoly::monomial(1));
	for (long n = 1; n <= 6; ++n) {
		QPoly p = q_int(n) * q_int(2);
		CHECK(sigma2(p) + lambda2(p) == p * p);
		/* dimension count at q=1 */
		Rational c = p.eval(1);
		CHECK(sigma2(p).eval(1) == c * (c + 1) / 2);
	}
	CHECK_THROWS_AS(sigma2(QPoly::from_ints({1, -1})), std::invalid_argument);
}

TEST_CASE("equivariant class of M_{0,4}")
{
	auto d = m04_derivation();
	CHECK(d.quotient.trivial_part == QPoly::from_ints({-1, 1}));
	CHECK(d.quotient.sign_part == QPoly::from_ints({-1}));
	CHECK(equiv_serre_m04().augmentation() == QPoly::from_ints({-2, 1}));
	CHECK(serre_space({SpaceKind::M0nConst, 4}, 0) == QPoly::from_ints({-2, 1}));
	/* eps * eps = 1 */
	EquivClass eps{QPoly(), QPoly(1)};
	CHECK(eps * eps == EquivClass::trivial(QPoly(1)));
}

TEST_CASE("basic spaces")
{
	CHECK(serre_space({SpaceKind::M00, 1}, 1) == QPoly(1));
	CHECK(serre_space({SpaceKind::M00, 1}, 2) == q_int(3));
	CHECK(serre_space({SpaceKind::PGL2}, 1) == QPoly::from_ints({0, -1, 0, 1}));
	CHECK(serre_space({SpaceKind::Config, 3}, 1) == q_int(2) * (q_int(2) - Rational(1)) * (q_int(2) - Rational(2)));
	CHECK(describe({SpaceKind::Grass2, 4}) == "G(2,4)");
}

TEST_CASE("stratum sum agrees with the closed form")
{
	CHECK(m02_strata().size() == 10);
	for (long r = 1; r <= 10; ++r) {
		CHECK(poincare_m02_strata(r) == poincare_m02_closed(r));
		for (const auto& s : m02_strata())
			CHECK_NOTHROW(stratum_serre(s, r));
	}
	/* some strata are virtual classes with negative coefficients */
	bool negative = false;
	for (const auto& s : m02_strata())
		for (const auto& c : stratum_serre(s, 1).coeffs())
			negative = negative || c < 0;
	CHECK(negative);
}

TEST_CASE("Poincare polynomial shape")
{
	for (long r = 1; r <= 8; ++r) {
		QPoly p = poincare_m02(r), q = poincare_m01(r);
		CHECK(p.degree() == expected_dim(r, 2, 2));
		CHECK(q.degree() == expected_dim(r, 2, 1));
		CHECK(p.is_palindromic());
		CHECK(q.is_palindromic());
		CHECK(p.has_nonnegative_integer_coeffs());
		CHECK(p.eval(1) == r * (r + 1) * (5 * r + 3));
		CHECK(poincare_m02(r).to_string() == p.to_string());
	}
	CHECK(poincare_m02(1).to_string() == "1+4q+6q^2+4q^3+q^4");
	CHECK(poincare_m01(1).to_string() == "1+2q+2q^2+q^3");
	CHECK_THROWS_AS(poincare_m02(0), std::invalid_argument);
}

TEST_CASE("Betti numbers")
{
	/* stable range: (5/2)j^2 + (3/2)j + 1 for j < r, one less at j = r */
	for (long r = 1; r <= 12; ++r) {
		QPoly p = poincare_m02(r);
		for (long j = 0; j <= p.degree(); ++j)
			CHECK(betti_m02(r, j) == p.coeff(static_cast<size_t>(j)));
		for (long j = 0; j < r; ++j)
			CHECK(2 * betti_m02(r, j) == 5 * j * j + 3 * j + 2);
		CHECK(2 * betti_m02(r, r) == 5 * r * r + 3 * r);
	}
	const long limit[] = {1, 5, 14, 28, 47, 71};
	for (long j = 0; j < 6; ++j)
		CHECK(betti_m02(20, j) == limit[j]);
	/* flag variety F(0,1;r) has Poincare polynomial [r+1][r] */
	for (long r = 1; r <= 6; ++r) {
		QPoly f = q_int(r + 1) * q_int(r);
		for (long i = 0; i <= f.degree() + 1; ++i)
			CHECK(flag_betti(r, i) == f.coeff(static_cast<size_t>(i)));
	}
}

TEST_CASE("expected dimension")
{
	CHECK(expected_dim(1, 2, 2) == 4);
	CHECK(expected_dim(1, 2, 1) == 3);
	CHECK(expected_dim(2, 1, 0) == 2);
}
