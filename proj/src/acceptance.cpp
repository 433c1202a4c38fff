#include "smap/acceptance.hpp"

#include "smap/chow.hpp"
#include "smap/correlators.hpp"
#include "smap/localization.hpp"
#include "smap/matrix.hpp"
#include "smap/relations.hpp"
#include "smap/serre.hpp"

#include <functional>
#include <random>
#include <stdexcept>

namespace smap {

namespace {

struct Failure : std::runtime_error {
	using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what)
{
	if (!ok)
		throw Failure(what);
}

QPoly ints(std::initializer_list<long> c)
{
	return QPoly::from_ints(std::vector<long>(c));
}

/* Euler characteristics and Poincare polynomials, r = 1..8 */
const std::vector<std::pair<long, QPoly>>& table_m01()
{
	static const std::vector<std::pair<long, QPoly>> t = {
		{6, ints({1, 2, 2, 1})},
		{27, ints({1, 3, 6, 7, 6, 3, 1})},
		{72, ints({1, 3, 7, 11, 14, 14, 11, 7, 3, 1})},
		{150, ints({1, 3, 7, 12, 18, 22, 24, 22, 18, 12, 7, 3, 1})},
		{270, ints({1, 3, 7, 12, 19, 26, 32, 35, 35, 32, 26, 19, 12, 7, 3, 1})},
		{441, ints({1, 3, 7, 12, 19, 27, 36, 43, 48, 49, 48, 43, 36, 27, 19, 12, 7, 3, 1})},
		{672, ints({1, 3, 7, 12, 19, 27, 37, 47, 56, 62, 65, 65, 62, 56, 47, 37, 27, 19, 12, 7, 3, 1})},
		{972, ints({1, 3, 7, 12, 19, 27, 37, 48, 60, 70, 78, 82, 84, 82, 78, 70, 60, 48, 37, 27, 19, 12, 7, 3, 1})},
	};
	return t;
}

const std::vector<std::pair<long, QPoly>>& table_m02()
{
	static const std::vector<std::pair<long, QPoly>> t = {
		{16, ints({1, 4, 6, 4, 1})},
		{78, ints({1, 5, 13, 20, 20, 13, 5, 1})},
		{216, ints({1, 5, 14, 27, 39, 44, 39, 27, 14, 5, 1})},
		{460, ints({1, 5, 14, 28, 46, 63, 73, 73, 63, 46, 28, 14, 5, 1})},
		{840, ints({1, 5, 14, 28, 47, 70, 92, 107, 112, 107, 92, 70, 47, 28, 14, 5, 1})},
		{1386, ints({1, 5, 14, 28, 47, 71, 99, 126, 146, 156, 156, 146, 126, 99, 71, 47, 28, 14, 5, 1})},
		{2128, ints({1, 5, 14, 28, 47, 71, 100, 133, 165, 190, 205, 210, 205, 190, 165, 133, 100, 71, 47, 28,
		             14, 5, 1})},
		{3096, ints({1, 5, 14, 28, 47, 71, 100, 134, 172, 209, 239, 259, 269, 269, 259, 239, 209, 172, 134, 100,
		             71, 47, 28, 14, 5, 1})},
	};
	return t;
}

std::string criterion_poincare()
{
	for (long r = 1; r <= 8; ++r) {
		const auto& [chi1, p1] = table_m01()[r - 1];
		const auto& [chi2, p2] = table_m02()[r - 1];
		QPoly a = poincare_m01(r), b = poincare_m02(r);
		expect(a == p1, "M_{0,1}(P^" + std::to_string(r) + ",2): got " + a.to_string());
		expect(b == p2, "M_{0,2}(P^" + std::to_string(r) + ",2): got " + b.to_string());
		expect(a.eval(1) == chi1, "Euler characteristic of M_{0,1}, r=" + std::to_string(r));
		expect(b.eval(1) == chi2, "Euler characteristic of M_{0,2}, r=" + std::to_string(r));
		expect(chi2 == r * (r + 1) * (5 * r + 3), "chi = r(r+1)(5r+3) at r=" + std::to_string(r));
		for (long j = 0; j <= b.degree(); ++j)
			expect(betti_m02(r, j) == b.coeff(static_cast<size_t>(j)), "Betti formula at r=" + std::to_string(r));
	}
	return "16 rows r=1..8, chi closed form, Betti formula";
}

std::string criterion_census()
{
	auto g2 = space_graphs(localization_space("m02d2"));
	auto g1 = space_graphs(localization_space("m01d2"));
	expect(g2.size() == 14, "expected 14 fixed loci for (n,d,r)=(2,2,1), got " + std::to_string(g2.size()));
	expect(g1.size() == 6, "expected 6 fixed loci for (1,2,1), got " + std::to_string(g1.size()));
	expect(enumerate_fixed_graphs(2, 2, 1).size() == 14 && enumerate_fixed_graphs(1, 2, 1).size() == 6,
	       "raw enumeration counts");
	const long a2[] = {2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 2, 2, 1, 1};
	const long a1[] = {2, 2, 1, 1, 2, 2};
	for (size_t i = 0; i < 14; ++i)
		expect(aut_order(g2[i]) == a2[i], "automorphism order of " + g2[i].describe());
	for (size_t i = 0; i < 6; ++i)
		expect(aut_order(g1[i]) == a1[i], "automorphism order of " + g1[i].describe());
	return "14 + 6 fixed loci, automorphism orders";
}

std::string criterion_euler()
{
	using F = std::function<PsiJet(const Rational&, const Rational&)>;
	auto pw = [](const Rational& x, int k) {
		Rational r = 1;
		for (int i = 0; i < k; ++i)
			r *= x;
		return r;
	};
	/* graph index in the reference order -> expression in lambda0, lambda1, psi */
	const std::vector<std::pair<size_t, F>> m02 = {
		{2, [&](auto l0, auto l1) { return PsiJet(-pw(l1 - l0, 4) / 4); }},
		{3, [&](auto l0, auto l1) { return PsiJet(-pw(l1 - l0, 4) / 4); }},
		{4, [&](auto l0, auto l1) { return PsiJet(2 * pw(l1 - l0, 4)); }},
		{5, [&](auto l0, auto l1) { return PsiJet(2 * pw(l1 - l0, 4)); }},
		{6, [&](auto l0, auto l1) { return PsiJet(-pw(l0 - l1, 4)); }},
		{7, [&](auto l0, auto l1) { return PsiJet(-pw(l0 - l1, 4)); }},
		{8, [&](auto l0, auto l1) { return PsiJet(-pw(l0 - l1, 4)); }},
		{9, [&](auto l0, auto l1) { return PsiJet(-pw(l0 - l1, 4)); }},
		{10, [&](auto l0, auto l1) { return PsiJet(pw(l0 - l1, 3), -2 * pw(l0 - l1, 2)); }},
		{11, [&](auto l0, auto l1) { return PsiJet(pw(l1 - l0, 3), -2 * pw(l1 - l0, 2)); }},
		{12, [&](auto l0, auto l1) { return PsiJet(2 * pw(l0 - l1, 4)); }},
		{13, [&](auto l0, auto l1) { return PsiJet(2 * pw(l0 - l1, 4)); }},
	};
	const std::vector<std::pair<size_t, F>> m01 = {
		{2, [&](auto l0, auto l1) { return PsiJet(2 * pw(l1 - l0, 3)); }},
		{3, [&](auto l0, auto l1) { return PsiJet(2 * pw(l0 - l1, 3)); }},
		{4, [&](auto l0, auto l1) { return PsiJet(pw(l0 - l1, 3)); }},
		{5, [&](auto l0, auto l1) { return PsiJet(pw(l1 - l0, 3)); }},
	};
	const std::vector<LambdaSpec> specs = {LambdaSpec{2, -1}, LambdaSpec{Rational(7, 3), 5}};
	auto g2 = space_graphs(localization_space("m02d2"));
	auto g1 = space_graphs(localization_space("m01d2"));
	size_t count = 0;
	for (const auto& s : specs) {
		for (const auto& [i, f] : m02) {
			expect(euler_normal(g2[i], s) == f(s.lambda[0], s.lambda[1]), "Euler class of " + g2[i].describe());
			++count;
		}
		for (const auto& [i, f] : m01) {
			expect(euler_normal(g1[i], s) == f(s.lambda[0], s.lambda[1]), "Euler class of " + g1[i].describe());
			++count;
		}
	}
	return std::to_string(count / specs.size()) + " expressions at 2 specializations";
}

const std::vector<std::pair<std::string, Rational>>& table_deg4()
{
	static const std::vector<std::pair<std::string, Rational>> t = {
		{"D2^4", 12}, {"D2^3*H1", -4}, {"D2^3*D1", -4}, {"D2^3*H2", -4}, {"D2^3*D0", 0},
		{"D2^2*D1*H1", 0}, {"D2^2*D1^2", -4}, {"D2^2*D1*H2", 0}, {"D2^2*D1*D0", 0}, {"D2^2*D0*H1", 0},
		{"D2^2*D0*H2", 0}, {"D2^2*D0^2", 0}, {"D2*D1^2*H1", 4}, {"D2*D1^3", 12}, {"D2*D1^2*H2", 4},
		{"D2*D1^2*D0", 0}, {"D2*D1*D0*H1", 0}, {"D2*D1*D0*H2", 0}, {"D2*D1*D0^2", 0}, {"D2*D0^2*H1", 0},
		{"D2*D0^2*H2", 0}, {"D2*D0^3", 0}, {"D1^3*H1", -8}, {"D1^4", -20}, {"D1^3*H2", -8},
		{"D1^3*D0", 0}, {"D1^2*D0*H1", 4}, {"D1^2*D0*H2", 4}, {"D1^2*D0^2", 4}, {"D1*D0^2*H1", -1},
		{"D1*D0^2*H2", -1}, {"D1*D0^3", -2}, {"D0^3*H1", Rational(1, 4)}, {"D0^3*H2", Rational(1, 4)},
		{"D0^4", Rational(3, 4)}, {"D2*D1*H1*H2", 2}, {"D2^2*H1*H2", 2}, {"D1^2*H1*H2", 2},
	};
	return t;
}

std::string criterion_integrals()
{
	const std::vector<std::pair<LambdaSpec, LambdaSpec>> pairs = {
		{default_spec_a(), default_spec_b()},
		{LambdaSpec{2, -1}, LambdaSpec{Rational(7, 3), 5}},
	};
	const auto& m02 = localization_space("m02d2");
	const auto& m01 = localization_space("m01d2");
	MultiPoly n2(m02.symbol_names()), n1(m01.symbol_names());
	expect(table_deg4().size() == 38, "reference table size");
	for (const auto& [a, b] : pairs) {
		for (const auto& [mono, value] : table_deg4()) {
			auto e = n2.parse_monomial(mono);
			expect(integrate_monomial(m02, e, a) == value && integrate_monomial(m02, e, b) == value,
			       "integral of " + mono);
		}
		expect(integrate_monomial(m01, n1.parse_monomial("D^3"), a) == 0 &&
		           integrate_monomial(m01, n1.parse_monomial("D^3"), b) == 0,
		       "integral of D^3");
		expect(integrate_monomial(m01, n1.parse_monomial("D^2*H1"), a) == 4 &&
		           integrate_monomial(m01, n1.parse_monomial("D^2*H1"), b) == 4,
		       "integral of D^2*H1");
	}
	/* the full tables are consistent with their vanishing and symmetry rules */
	expect(integrals_table("m02d2").size() == 70, "m02d2 table size");
	expect(integrals_table("m01d2").size() == 4, "m01d2 table size");
	return "38 + 2 integrals at 2 specialization pairs";
}

bool maps_back_to_identity(const Presentation& a, const std::map<std::string, MultiPoly>& ab,
                           const Presentation& b, const std::map<std::string, MultiPoly>& ba,
                           const GradedQuotient& ring_a)
{
	for (const auto& g : a.generators) {
		MultiPoly there = ab.at(g);
		MultiPoly back = apply_images(b, ba, there);
		if (!ring_a.equal(back, a.generator(g)))
			return false;
	}
	return true;
}

std::string criterion_presentations()
{
	const std::vector<std::pair<std::string, QPoly>> expected = {
		{"m01d1", q_int(2)},
		{"m02d1", q_int(2) * q_int(2)},
		{"m03d1", q_int(2).pow(3) + QPoly::monomial(1) * q_int(2)},
		{"m03d0", q_int(2)},
		{"m01d2", poincare_m01(1)},
		{"m02d2", poincare_m02(1)},
		{"m02d2alt", poincare_m02(1)},
	};
	for (const auto& [id, poly] : expected) {
		const auto& ring = catalog_ring(id);
		auto dims = ring.dims();
		expect(static_cast<long>(dims.size()) == poly.degree() + 1, "top degree of " + id);
		for (size_t k = 0; k < dims.size(); ++k)
			expect(static_cast<long>(dims[k]) == poly.coeff(k), "graded dimension of " + id);
		for (const auto& rel : ring.presentation().relations)
			expect(ring.is_zero(rel), "relation " + rel.to_string() + " of " + id);
		expect(ring.calibrations_consistent(), "calibrations of " + id);
	}
	expect(catalog_ring("m02d2").dims() == std::vector<size_t>{1, 4, 6, 4, 1}, "dims (1,4,6,4,1)");
	expect(catalog_ring("m01d2").dims() == std::vector<size_t>{1, 2, 2, 1}, "dims (1,2,2,1)");
	expect(catalog_ring("m02d1").dims() == std::vector<size_t>{1, 2, 1}, "dims (1,2,1)");
	expect(catalog_ring("m01d1").dims() == std::vector<size_t>{1, 1}, "dims (1,1)");
	expect(catalog_presentation("m02d2").relations.size() == 9, "nine relations");
	expect(catalog_presentation("m03d1").relations.size() == 6, "six relations");

	const auto& thm = catalog_presentation("m02d2");
	const auto& alt = catalog_presentation("m02d2alt");
	auto ta = theorem_to_alt_images();
	auto at = alt_to_theorem_images();
	expect(check_homomorphism(thm, catalog_ring("m02d2alt"), ta), "theorem -> alt is a homomorphism");
	expect(check_homomorphism(alt, catalog_ring("m02d2"), at), "alt -> theorem is a homomorphism");
	expect(maps_back_to_identity(thm, ta, alt, at, catalog_ring("m02d2")), "theorem -> alt -> theorem");
	expect(maps_back_to_identity(alt, at, thm, ta, catalog_ring("m02d2alt")), "alt -> theorem -> alt");
	expect(catalog_ring("m02d2").dims() == catalog_ring("m02d2alt").dims(), "equal graded dimensions");
	return "7 catalog rings, relations vanish, mutually inverse maps";
}

std::string criterion_session()
{
	const std::vector<std::pair<std::string, Rational>> session = {
		{"P1^4", Rational(3, 80)},        {"P1^3*H1", Rational(-1, 80)},   {"P1^3*H2", Rational(1, 16)},
		{"P1^3*P2", Rational(-3, 80)},    {"P1^2*H1*P2", Rational(1, 80)}, {"P1^2*H1*H2", Rational(-1, 40)},
		{"P1^2*P2^2", Rational(-1, 16)},  {"P1^2*P2*H2", Rational(3, 80)}, {"P1*H1*P2*H2", Rational(-1, 40)},
	};
	const auto& ring = catalog_ring("m02d2");
	const auto& p = ring.presentation();
	MultiPoly names(p.generators);
	expect(ring.basis(4) == std::vector<Exponents>{names.parse_monomial("D1^4")}, "top basis is D1^4");
	for (const auto& [expr, c] : session) {
		auto nf = ring.normal_form(p.parse(expr));
		expect(nf.size() == 1 && nf[0] == c, expr + " reduces to " + (nf.empty() ? "0" : to_string(nf[0])) + "*D1^4");
	}
	return "9 normal-form coefficients on D1^4";
}

bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v)
{
	if (basis.empty())
		return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
	auto a = RationalMatrix::from_rows(basis, v.size());
	auto b = a;
	b.append_row(v);
	return rref(a).rank == rref(b).rank;
}

RationalVector ratvec(std::initializer_list<Rational> v)
{
	return RationalVector(v);
}

std::string criterion_relations()
{
	auto k1 = find_relations("m02d2", 1, spanning_monomials("m02d2", 1));
	expect(k1.size() == 1 && in_span(k1, ratvec({2, 2, -4, -1, 1})), "degree-1 kernel");
	auto k2 = find_relations("m02d2", 2, spanning_monomials("m02d2", 2));
	expect(k2.size() == 1 && in_span(k2, ratvec({0, 1, 0, 0, 4, -4, 0})), "degree-2 kernel");
	auto k3 = find_relations("m02d2", 3, spanning_monomials("m02d2", 3));
	expect(k3.size() == 2, "degree-3 kernel is two-dimensional");
	expect(in_span(k3, ratvec({1, -3, -3, 6, 56, -72})), "cubic relation (D1+D2)^3/8 in the kernel");
	expect(in_span(k3, ratvec({Rational(1, 4), -1, -1, Rational(5, 2), 16, -16})),
	       "cubic relation D1*psi1*psi2 in the kernel");
	auto rep = verify_completeness("m02d2");
	expect(rep.all_match(), "monomial minus kernel counts equal Betti numbers");
	expect(rep.degrees.size() == 4 && rep.degrees[3].kernel.empty(), "degree-4 witness D1^2*H1*H2 is nonzero");
	return "kernels in degrees 1..3, counts 4,6,4,1";
}

std::string criterion_correlators()
{
	const std::vector<Rational> expected = {
		Rational(-3, 4), Rational(-3, 4), Rational(1, 4),  Rational(1, 4),  Rational(-5, 4), Rational(-5, 4),
		Rational(3, 4),  Rational(3, 4),  Rational(-1, 4), Rational(-1, 4), Rational(1, 2),  Rational(1, 2),
		Rational(5, 4),  Rational(-3, 4), Rational(-3, 4), Rational(1, 2),
	};
	auto rows = cross_check_all();
	expect(rows.size() == 16, "sixteen correlators");
	for (size_t i = 0; i < rows.size(); ++i) {
		expect(rows[i].ring == expected[i], rows[i].key.to_string() + " via ring is " + to_string(rows[i].ring));
		expect(rows[i].axioms == expected[i], rows[i].key.to_string() + " via axioms is " + to_string(rows[i].axioms));
		expect(correlator_via_ring(rows[i].key, 1) == expected[i], rows[i].key.to_string() + " with second calibration");
	}
	for (const char* id : {"m02d2", "m02d2alt"}) {
		const auto& ring = catalog_ring(id);
		const auto& p = ring.presentation();
		for (const auto& e : monomials_of_degree(p.generators.size(), 4)) {
			auto m = MultiPoly::monomial(p.generators, e);
			expect(ring.integrate(m, 0) == ring.integrate(m, 1), "calibration invariance on " + m.to_string());
		}
	}
	return "16 values by both routes, calibration sweep";
}

std::string criterion_properties()
{
	for (long r = 1; r <= 8; ++r)
		expect(poincare_m01(r).is_palindromic() && poincare_m02(r).is_palindromic(),
		       "palindromic Poincare polynomials at r=" + std::to_string(r));

	std::mt19937 rng(20261016);
	std::uniform_int_distribution<int> small(-6, 6);
	auto rnd = [&]() { return ratio(small(rng), 1 + std::abs(small(rng))); };

	for (int t = 0; t < 50; ++t) {
		PsiJet a(rnd(), rnd()), b(rnd(), rnd()), c(rnd(), rnd());
		expect(PsiJet::psi() * PsiJet::psi() == PsiJet(), "psi^2 = 0");
		expect(PsiJet(0, a.psi_part()).pow(2) == PsiJet(), "nilpotent part squares to zero");
		expect((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c, "psi-jet ring axioms");
		if (b.const_part() != 0)
			expect((a / b) * b == a, "psi-jet division");
	}

	for (int t = 0; t < 30; ++t) {
		RationalMatrix m(4, 6);
		for (size_t i = 0; i < 4; ++i)
			for (size_t j = 0; j < 6; ++j)
				m.at(i, j) = (t % 3 == 0 && i == 3) ? m.at(0, j) + m.at(1, j) : rnd();
		auto once = rref(m);
		auto twice = rref(once.matrix);
		expect(once.matrix == twice.matrix && once.rank == twice.rank, "rref is idempotent");
		for (const auto& v : kernel_basis(m)) {
			auto image = m.apply(v);
			expect(std::all_of(image.begin(), image.end(), [](const Rational& x) { return x == 0; }),
			       "kernel vectors are annihilated");
		}
	}

	const auto& src = catalog_presentation("m01d2");
	const auto& ring = catalog_ring("m02d2");
	for (int i : {1, 2}) {
		auto images = forget_pullback_images(i);
		expect(check_homomorphism(src, ring, images), "pullback along forgetting point " + std::to_string(3 - i));
		MultiPoly psi = apply_images(src, images, psi_elements("m01d2")[0]);
		MultiPoly target = psi_elements("m02d2")[i - 1] - ring.presentation().generator("D0");
		expect(ring.equal(psi, target), "psi pulls back to psi_i - D0");
	}

	const std::vector<std::string> vars = {"x", "y", "z"};
	auto rnd_poly = [&]() {
		MultiPoly p(vars);
		for (int t = 0; t < 4; ++t)
			p.add_term({std::abs(small(rng)) % 3, std::abs(small(rng)) % 3, std::abs(small(rng)) % 3}, rnd());
		return p;
	};
	for (int t = 0; t < 40; ++t) {
		MultiPoly a = rnd_poly(), b = rnd_poly(), c = rnd_poly();
		expect(a + b == b + a && a * b == b * a, "commutativity");
		expect((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), "associativity");
		expect(a * (b + c) == a * b + a * c, "distributivity");
		expect(a - a == MultiPoly(vars) && a * MultiPoly::constant(vars, 1) == a, "identities");
		expect(parse_polynomial(vars, a.to_string()) == a, "print/parse round trip");
	}
	return "palindromes, psi-jets, rref, pullbacks, polynomial ring axioms";
}

}  // namespace

std::vector<CriterionResult> run_acceptance()
{
	const std::vector<std::pair<std::string, std::function<std::string()>>> all = {
		{"poincare polynomials", criterion_poincare},
		{"fixed-locus census", criterion_census},
		{"euler classes", criterion_euler},
		{"integral tables", criterion_integrals},
		{"presentations", criterion_presentations},
		{"normal-form session", criterion_session},
		{"relations recovered", criterion_relations},
		{"correlators", criterion_correlators},
		{"property suites", criterion_properties},
	};
	std::vector<CriterionResult> out;
	for (size_t i = 0; i < all.size(); ++i) {
		CriterionResult r;
		r.id = static_cast<int>(i + 1);
		r.name = all[i].first;
		try {
			r.detail = all[i].second();
			r.pass = true;
		} catch (const std::exception& e) {
			r.detail = e.what();
		}
		out.push_back(std::move(r));
	}
	return out;
}

std::string format_result(const CriterionResult& r)
{
	return "criterion " + std::to_string(r.id) + " [" + r.name + "]: " + (r.pass ? "PASS" : "FAIL") + " (" +
	       r.detail + ")";
}

}  // namespace smap
