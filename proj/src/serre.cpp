#include "smap/serre.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace smap {

EquivClass operator+(const EquivClass& a, const EquivClass& b)
{
	return {a.trivial_part + b.trivial_part, a.sign_part + b.sign_part};
}

/* eps * eps = 1 */
EquivClass operator*(const EquivClass& a, const EquivClass& b)
{
	return {a.trivial_part * b.trivial_part + a.sign_part * b.sign_part,
	        a.trivial_part * b.sign_part + a.sign_part * b.trivial_part};
}

EquivClass EquivClass::div_trivial(const QPoly& d) const
{
	return {trivial_part.div_exact(d), sign_part.div_exact(d)};
}

static std::vector<Rational> poincare_coeffs(const QPoly& p, const char* who)
{
	if (!p.has_nonnegative_integer_coeffs())
		throw std::invalid_argument(std::string(who) + ": coefficients must be nonnegative integers");
	return p.coeffs();
}

static QPoly symmetric_square(const QPoly& p, long shift, const char* who)
{
	auto a = poincare_coeffs(p, who);
	if (a.empty())
		return QPoly();
	std::vector<Rational> out(2 * a.size() - 1);
	for (size_t i = 0; i < a.size(); ++i) {
		out[2 * i] += a[i] * (a[i] + shift) / 2;
		for (size_t j = i + 1; j < a.size(); ++j)
			out[i + j] += a[i] * a[j];
	}
	return QPoly(std::move(out));
}

QPoly sigma2(const QPoly& p)
{
	return symmetric_square(p, 1, "sigma2");
}

QPoly lambda2(const QPoly& p)
{
	return symmetric_square(p, -1, "lambda2");
}

EquivClass equiv_serre_square(const QPoly& p)
{
	return {sigma2(p), lambda2(p)};
}

/* N cells with Serre polynomial c each, p pairs of them exchanged by the
 * involution and the rest fixed */
static EquivClass permuted_cells(long n, long pairs, const QPoly& c)
{
	return {c * Rational(n - pairs), c * Rational(pairs)};
}

static void check_total(const EquivClass& e, const QPoly& expected, const char* what)
{
	if (e.trivial_part + e.sign_part != expected)
		throw std::logic_error(std::string("equivariant piece inconsistent: ") + what);
}

M04Derivation m04_derivation()
{
	const QPoly p1 = q_int(2);
	M04Derivation d;
	/* swap the first two factors, the other two are fixed */
	d.product = equiv_serre_square(p1) * EquivClass::trivial(p1 * p1);
	check_total(d.product, p1.pow(4), "(P^1)^4");

	/* open cells of the diagonals, removed with a minus sign */
	const QPoly f3 = (p1 * (p1 - Rational(1))) * (p1 - Rational(2));
	const QPoly f2 = p1 * (p1 - Rational(1));
	d.large_diagonals = permuted_cells(6, 2, -f3);
	d.medium_diagonals = permuted_cells(7, 2, -f2);
	d.small_diagonal = permuted_cells(1, 0, -p1);
	check_total(d.large_diagonals, -f3 * Rational(6), "large diagonals");
	check_total(d.medium_diagonals, -f2 * Rational(7), "medium diagonals");
	check_total(d.small_diagonal, -p1, "small diagonal");

	d.configuration = d.product + d.large_diagonals + d.medium_diagonals + d.small_diagonal;
	check_total(d.configuration, serre_space({SpaceKind::Config, 4}, 1), "F(P^1,4)");

	d.pgl2 = serre_space({SpaceKind::PGL2}, 1);
	d.quotient = d.configuration.div_trivial(d.pgl2);
	return d;
}

EquivClass equiv_serre_m04()
{
	const EquivClass expected{QPoly::from_ints({-1, 1}), QPoly::from_ints({-1})};
	M04Derivation d = m04_derivation();
	if (!(d.quotient == expected))
		throw std::logic_error("Serre_2(M_{0,4}) derivation does not close");
	if (d.quotient.augmentation() != serre_space({SpaceKind::M0nConst, 4}, 0))
		throw std::logic_error("Serre_2(M_{0,4}) does not augment to Serre(M_{0,4})");
	return expected;
}

/* Serre(M_{0,n}) = Serre(F(P^1,n)) / Serre(PGL2) for n >= 3 */
static QPoly serre_m0n(long n)
{
	if (n < 3)
		throw std::invalid_argument("M_{0,n} needs n >= 3");
	return serre_space({SpaceKind::Config, n}, 1).div_exact(serre_space({SpaceKind::PGL2}, 1));
}

QPoly serre_space(const SpaceDescriptor& s, long r)
{
	switch (s.kind) {
	case SpaceKind::M00:
		if (s.a <= 0)
			throw std::invalid_argument("M00 needs positive degree");
		return QPoly::monomial(static_cast<size_t>((s.a - 1) * (r + 1))) * q_binom(r + 1, 2);
	case SpaceKind::M0nConst:
		return serre_m0n(s.a) * q_int(r + 1);
	case SpaceKind::M0nLine:
		return serre_space({SpaceKind::Config, s.a}, r) * serre_space({SpaceKind::M00, 1}, r);
	case SpaceKind::Config: {
		QPoly p(1);
		for (long i = 0; i < s.a; ++i)
			p = p * (q_int(2) - Rational(i));
		return p;
	}
	case SpaceKind::Grass2:
		return q_binom(s.a, 2);
	case SpaceKind::PointLineFlag:
		return q_int(r + 1) * q_int(r);
	case SpaceKind::PGL2:
		return q_int(4) - q_int(2) * q_int(2);
	case SpaceKind::Proj:
		return q_int(r + 1);
	}
	throw std::invalid_argument("unknown space descriptor");
}

std::string describe(const SpaceDescriptor& s)
{
	const std::string a = std::to_string(s.a);
	switch (s.kind) {
	case SpaceKind::M00: return "M_{0,0}(P^r," + a + ")";
	case SpaceKind::M0nConst: return "M_{0," + a + "}(P^r,0)";
	case SpaceKind::M0nLine: return "M_{0," + a + "}(P^r,1)";
	case SpaceKind::Config: return "F(P^1," + a + ")";
	case SpaceKind::Grass2: return "G(2," + a + ")";
	case SpaceKind::PointLineFlag: return "F(0,1;r)";
	case SpaceKind::PGL2: return "PGL(2)";
	case SpaceKind::Proj: return "P^r";
	}
	return "?";
}

const std::vector<Stratum>& m02_strata()
{
	using K = SpaceKind;
	const SpaceDescriptor P{K::Proj};
	const SpaceDescriptor M03c{K::M0nConst, 3};
	const SpaceDescriptor L1{K::M0nLine, 1}, L2{K::M0nLine, 2}, L3{K::M0nLine, 3};
	auto plain = [](std::vector<SpaceDescriptor> n) {
		return StratumFactor{FactorKind::Plain, std::move(n), {}};
	};
	static const std::vector<Stratum> strata = {
		{"1", {plain({{K::Config, 2}, {K::M00, 2}})}, {}, false},
		{"2", {plain({{K::Config, 1}, {K::M00, 2}}), plain({M03c})}, {P}, false},
		{"3", {plain({L3}), plain({L1})}, {P}, false},
		{"4", {plain({L2}), plain({L2})}, {P}, false},
		{"5", {plain({M03c}), plain({L2}), plain({L1})}, {P, P}, false},
		{"6a", {plain({L2}), plain({M03c}), plain({L1})}, {P, P}, false},
		{"6b", {plain({L2}), plain({M03c}), plain({L1})}, {P, P}, false},
		{"7",
		 {StratumFactor{FactorKind::M04, {}, {}}, plain({P}),
		  StratumFactor{FactorKind::FiberSquare, {L1}, {P}}},
		 {},
		 true},
		{"8",
		 {plain({M03c}), plain({M03c}), StratumFactor{FactorKind::FiberSquare, {L1}, {P}}},
		 {P},
		 true},
		{"9", {plain({L1}), plain({M03c}), plain({M03c}), plain({L1})}, {P, P, P}, false},
	};
	return strata;
}

static QPoly product_of(const std::vector<SpaceDescriptor>& v, long r)
{
	QPoly p(1);
	for (const auto& s : v)
		p = p * serre_space(s, r);
	return p;
}

EquivClass stratum_equiv_serre(const Stratum& s, long r)
{
	EquivClass acc = EquivClass::trivial(QPoly(1));
	for (const auto& f : s.factors) {
		switch (f.kind) {
		case FactorKind::Plain:
			acc = acc * EquivClass::trivial(product_of(f.numer, r).div_exact(product_of(f.denom, r)));
			break;
		case FactorKind::FiberSquare:
			acc = acc * equiv_serre_square(product_of(f.numer, r).div_exact(product_of(f.denom, r)));
			break;
		case FactorKind::M04:
			acc = acc * equiv_serre_m04();
			break;
		}
	}
	acc = acc.div_trivial(product_of(s.base_divisors, r));
	if (!s.swap_automorphism && !acc.sign_part.is_zero())
		throw std::logic_error("stratum without automorphisms has a sign part");
	return acc;
}

QPoly stratum_serre(const Stratum& s, long r)
{
	QPoly p = stratum_equiv_serre(s, r).invariant_part();
	for (const auto& c : p.coeffs())
		if (c.get_den() != 1)
			throw std::logic_error("stratum " + s.label + " has a non-integral Serre polynomial");
	return p;
}

QPoly poincare_m02_strata(long r)
{
	QPoly sum;
	for (const auto& s : m02_strata())
		sum += stratum_serre(s, r);
	return sum;
}

QPoly poincare_m02_closed(long r)
{
	return q_int(r + 1) * q_int(r) *
	       (q_range(0, r + 2) + q_range(1, r + 1) * Rational(2) + q_range(2, r) * Rational(2));
}

QPoly poincare_m02(long r)
{
	if (r < 1)
		throw std::invalid_argument("poincare_m02 needs r >= 1");
	QPoly a = poincare_m02_strata(r);
	QPoly b = poincare_m02_closed(r);
	if (!(a == b))
		throw std::logic_error("stratum sum and closed form disagree at r=" + std::to_string(r));
	return a;
}

QPoly poincare_m01(long r)
{
	if (r < 1)
		throw std::invalid_argument("poincare_m01 needs r >= 1");
	QPoly third = q_range(0, r + 2) + q_range(1, r + 1) + q_range(2, r);
	QPoly even_powers;
	long top = (r % 2 == 0) ? (r - 2) / 2 : (r - 1) / 2;
	for (long i = 0; i <= top; ++i)
		even_powers += QPoly::monomial(static_cast<size_t>(2 * i));
	QPoly first = (r % 2 == 0) ? q_int(r + 1) : q_int(r);
	return first * even_powers * third;
}

long flag_betti(long r, long i)
{
	if (i < 0 || i > 2 * r - 1)
		return 0;
	/* r + 1/2 - |r - 1/2 - i|, doubled to stay in integers */
	long twice = 2 * r + 1 - std::labs(2 * r - 1 - 2 * i);
	return twice / 2;
}

/* sum of alpha_i for i in [lo, hi] clipped to [0, 2r-1] */
static long alpha_sum(long r, long lo, long hi)
{
	long s = 0;
	for (long i = std::max(0L, lo); i <= std::min(hi, 2 * r - 1); ++i)
		s += flag_betti(r, i);
	return s;
}

/* coefficient of q^j in [r+1][r][m] is the sum of alpha_i over j-m+1 <= i <= j */
long betti_m02(long r, long j)
{
	if (r < 1 || j < 0)
		return 0;
	long first = alpha_sum(r, j - (r + 3) + 1, j);
	long second = 2 * alpha_sum(r, (j - 1) - (r + 1) + 1, j - 1);
	long third = 2 * alpha_sum(r, (j - 2) - (r - 1) + 1, j - 2);
	return first + second + third;
}

long expected_dim(long r, long d, long n)
{
	return d + r + d * r + n - 3;
}

}  // namespace smap
