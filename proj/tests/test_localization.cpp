#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smap/chow.hpp"
#include "smap/localization.hpp"

#include <algorithm>
#include <random>

using namespace smap;

TEST_CASE("psi-jets")
{
	PsiJet a(3, 2), b(2, -1);
	CHECK(PsiJet::psi() * PsiJet::psi() == PsiJet());
	CHECK((a / b) * b == a);
	CHECK(a.pow(3) == PsiJet(27, 54));
	CHECK_THROWS_AS(a / PsiJet::psi(), std::domain_error);
	CHECK(PsiJet(1, -2).to_string() == "1-2*psi");
	CHECK(PsiJet(0, 1).to_string() == "psi");
}

TEST_CASE("weight specializations must be distinct")
{
	CHECK_THROWS_AS(LambdaSpec({1, 1}), std::invalid_argument);
	CHECK_THROWS_AS(LambdaSpec({1}), std::invalid_argument);
}

TEST_CASE("fixed-locus counts")
{
	CHECK(enumerate_fixed_graphs(2, 2, 1).size() == 14);
	CHECK(enumerate_fixed_graphs(1, 2, 1).size() == 6);
	/* degree one: a single edge, each marking at either end */
	for (int n = 0; n <= 4; ++n)
		CHECK(enumerate_fixed_graphs(n, 1, 1).size() == (1u << n));
	/* lines through two of the r+1 fixed points */
	CHECK(enumerate_fixed_graphs(0, 1, 2).size() == 3);
	CHECK(enumerate_fixed_graphs(0, 1, 3).size() == 6);
	/* unmarked conics in P^1: a double cover and two chains */
	CHECK(enumerate_fixed_graphs(0, 2, 1).size() == 3);
}

TEST_CASE("canonical form ignores vertex numbering")
{
	std::mt19937 rng(3);
	for (const auto& g : enumerate_fixed_graphs(2, 2, 2)) {
		std::vector<int> perm(g.nvertices());
		std::iota(perm.begin(), perm.end(), 0);
		std::shuffle(perm.begin(), perm.end(), rng);
		FixedGraph h = g;
		for (size_t v = 0; v < g.nvertices(); ++v) {
			h.label[perm[v]] = g.label[v];
			h.markings[perm[v]] = g.markings[v];
		}
		for (auto& e : h.edges)
			e = {perm[e.u], perm[e.v], e.degree};
		CHECK(h.canonical() == g.canonical());
		CHECK(aut_order(h) == aut_order(g));
	}
}

TEST_CASE("graph notation round trip")
{
	auto g = parse_fixed_graph("1{1}-1-0{2}-1-1", 2, 2);
	CHECK(g.nvertices() == 3);
	CHECK(g.special_points(1) == 3);
	CHECK(parse_fixed_graph(g.describe(), 2, 2).canonical() == g.canonical());
	CHECK_THROWS_AS(parse_fixed_graph("1{1-1-0", 2, 2), std::invalid_argument);
	CHECK(parse_fixed_graph("1-1-0{1,2}-1-1", 2, 2).has_m04_vertex());
}

TEST_CASE("Euler classes at sample graphs")
{
	LambdaSpec s{5, 2};
	const Rational t = 3;
	auto g2 = space_graphs(localization_space("m02d2"));
	CHECK(euler_normal(g2[2], s) == PsiJet(-t * t * t * t / 4));
	CHECK(euler_normal(g2[10], s) == PsiJet(t * t * t, -2 * t * t));
	CHECK(euler_normal(g2[12], s) == PsiJet(2 * t * t * t * t));
	/* the fixed locus with two contracted points: -t^3/2 */
	auto g1 = space_graphs(localization_space("m01d2"));
	CHECK(euler_normal(g1[0], s) == PsiJet(-t * t * t / 2));
	CHECK_THROWS_AS(euler_normal(g1[0], LambdaSpec{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("restriction rules reproduce the reference tables")
{
	for (const char* id : {"m02d2", "m01d2"}) {
		const auto& space = localization_space(id);
		auto graphs = space_graphs(space);
		for (size_t i = 0; i < graphs.size(); ++i)
			for (const auto& c : space.symbols) {
				auto ref = reference_restriction(id, i, c.name);
				REQUIRE(ref);
				for (const auto& s : {default_spec_a(), default_spec_b(), LambdaSpec{-4, Rational(1, 3)}})
					CHECK(restrict_class_rules(graphs[i], c, s) == ref->at(s));
			}
	}
}

TEST_CASE("splitting normalization")
{
	CHECK(normalize_splitting({{2}, 1}, 2, 2) == Splitting{{1}, 1});
	CHECK(normalize_splitting({{}, 2}, 0, 3) == Splitting{{}, 1});
}

/* exponents over localization symbols -> polynomial over ring generators of the same names */
static MultiPoly as_ring_element(const LocalizationSpace& space, const Presentation& p, const Exponents& e)
{
	MultiPoly names(space.symbol_names());
	return p.parse(names.monomial_string(e));
}

TEST_CASE("localization integrals agree with the presentations")
{
	const std::pair<const char*, const char*> pairs[] = {
		{"m02d2", "m02d2"}, {"m01d2", "m01d2"}, {"m03d1", "m03d1"}, {"m02d1", "m02d1"}, {"m01d1", "m01d1"}};
	for (const auto& [sid, rid] : pairs) {
		const auto& space = localization_space(sid);
		const auto& ring = catalog_ring(rid);
		for (const auto& e : integrals_table(sid))
			CHECK(ring.integrate(as_ring_element(space, ring.presentation(), e.exponents)) == e.value);
	}
}

TEST_CASE("integrals are independent of the specialization")
{
	std::mt19937 rng(5);
	std::uniform_int_distribution<int> w(-20, 20);
	const auto& space = localization_space("m02d2");
	for (int t = 0; t < 5; ++t) {
		Rational a = ratio(w(rng), 1 + std::abs(w(rng))), b = a + ratio(1 + std::abs(w(rng)), 7);
		LambdaSpec s{a, b};
		for (const auto& e : monomials_of_degree(space.symbols.size(), space.dimension()))
			CHECK(integrate_monomial(space, e, s) == integrate_monomial_checked(space, e));
	}
}

TEST_CASE("integral table rules")
{
	auto t = integrals_table("m02d2");
	REQUIRE(t.size() == 70);
	size_t ruled = std::count_if(t.begin(), t.end(), [](const IntegralEntry& e) { return !e.rule.empty(); });
	CHECK(ruled > 0);
	CHECK(t.front().monomial == "H1^4");
	CHECK_THROWS_AS(integrate_monomial_checked(localization_space("m02d2"), {1, 0, 0, 0, 0}),
	                std::invalid_argument);
	CHECK_THROWS_AS(localization_space("m09d9"), std::invalid_argument);
}
