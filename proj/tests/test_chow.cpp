#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smap/chow.hpp"

#include <random>

using namespace smap;

static Presentation small(const std::vector<std::string>& gens, const std::vector<std::string>& rels, int top)
{
	Presentation p;
	p.name = "test";
	p.generators = gens;
	for (const auto& r : rels)
		p.relations.push_back(p.parse(r));
	p.top_degree = top;
	return p;
}

TEST_CASE("graded dimensions of small quotients")
{
	CHECK(GradedQuotient(small({"H1"}, {"H1^2"}, 1)).dims() == std::vector<size_t>{1, 1});
	CHECK(GradedQuotient(small({"D", "H1"}, {"H1^2", "D^3"}, 3)).dims() == std::vector<size_t>{1, 2, 2, 1});
	CHECK_THROWS_AS(GradedQuotient(small({"x"}, {"x^2"}, 0)), std::invalid_argument);
	CHECK_THROWS_AS(GradedQuotient(small({"x", "y"}, {"x^2-y", "y^2"}, 3)), std::invalid_argument);
	auto p = small({"x", "y"}, {"x^2", "y^2"}, 2);
	p.calibrations = {{"x^2", 1}};
	CHECK_THROWS_AS(GradedQuotient{p}, std::invalid_argument);
}

TEST_CASE("normal forms in the two-pointed ring")
{
	const auto& ring = catalog_ring("m02d2");
	const auto& p = ring.presentation();
	CHECK(ring.normal_form(p.parse("P1^4")) == RationalVector{Rational(3, 80)});
	CHECK(ring.normal_form(p.parse("P1^3*H1")) == RationalVector{Rational(-1, 80)});
	CHECK(ring.normal_form(p.parse("P1^2*P2^2")) == RationalVector{Rational(-1, 16)});
	CHECK(ring.integrate(p.parse("P1^2*H1*P2")) == Rational(-1, 4));
	CHECK(ring.integrate(p.parse("D1^4")) == -20);
	CHECK(ring.integrate(p.parse("D2*D1*H1*H2")) == 2);
	for (const char* x : {"D1^2", "H1*H2", "D0*D1", "P1*P2"})
		CHECK(ring.integrate(p.parse(std::string("D0*D2*") + x)) == 0);
	CHECK_THROWS_AS(ring.normal_form(p.parse("D1+D1^2")), std::invalid_argument);
	CHECK_THROWS_AS(ring.integrate(p.parse("D1^3")), std::invalid_argument);
	CHECK(ring.reduce(p.parse("D1+D1^2")) == ring.reduce(p.parse("D1")) + ring.reduce(p.parse("D1^2")));
}

TEST_CASE("known relations vanish")
{
	const auto& ring = catalog_ring("m02d2");
	const auto& p = ring.presentation();
	for (const char* r : {"D0*P1", "D0*P2", "D1*P1*P2", "(D1+D2)^3", "H1^2", "H2^2", "D0*D2",
	                      "D1*D0+4*D0^2-4*D0*H1", "D0*H1-D0*H2",
	                      "D1^3-3*D1^2*H1-3*D1^2*H2+6*D1*H1*H2+56*D0^3-72*D0^2*H1",
	                      "D1^2*H1+D1^2*H2-4*D1*H1*H2-8*D0^3-8*D0^2*H1"})
		CHECK(ring.is_zero(p.parse(r)));
	CHECK_FALSE(ring.is_zero(p.parse("D1^2*H1*H2")));
	/* (D1+D2)^3 = 8*C1 and D1*psi1*psi2 = C1/4 + C2 */
	CHECK(ring.equal(p.parse("(D1+D2)^3"),
	                 p.parse("8*(D1^3-3*D1^2*H1-3*D1^2*H2+6*D1*H1*H2+56*D0^3-72*D0^2*H1)")));
}

TEST_CASE("normal form is linear, idempotent and multiplicative")
{
	std::mt19937 rng(17);
	std::uniform_int_distribution<int> c(-5, 5);
	for (const char* id : {"m02d2", "m02d2alt", "m03d1", "m01d2"}) {
		const auto& ring = catalog_ring(id);
		const auto& gens = ring.presentation().generators;
		auto rnd = [&](int k) {
			MultiPoly x(gens);
			for (const auto& e : monomials_of_degree(gens.size(), k))
				if (c(rng) > 2)
					x.add_term(e, ratio(c(rng), 1 + std::abs(c(rng))));
			return x;
		};
		for (int t = 0; t < 10; ++t) {
			int k = 1 + t % 2;
			auto a = rnd(k), b = rnd(ring.top_degree() - k), d = rnd(k);
			CHECK(ring.reduce(ring.reduce(a)) == ring.reduce(a));
			CHECK(ring.reduce(a + d) == ring.reduce(a) + ring.reduce(d));
			CHECK(ring.reduce(a * b) == ring.reduce(ring.reduce(a) * ring.reduce(b)));
		}
	}
}

TEST_CASE("psi classes")
{
	auto n3 = psi_elements("m03d1");
	CHECK(catalog_ring("m03d1").is_zero(n3[0] * n3[1]));
	auto n2 = psi_elements("m02d1");
	CHECK((n2[0] + n2[1]).is_zero());
	const auto& ring = catalog_ring("m02d2");
	const auto& p = ring.presentation();
	auto psi = psi_elements("m02d2");
	CHECK(ring.is_zero(p.generator("D2") - psi[0] - psi[1]));
	CHECK(ring.equal(psi[0], p.generator("P1")));
	CHECK(ring.equal(psi[1], p.generator("P2")));
	/* psi on the one-pointed line space: integral of psi is -2 */
	CHECK(catalog_ring("m01d1").integrate(psi_elements("m01d1")[0]) == -2);
	CHECK(psi_elements("m03d0").empty());
}

TEST_CASE("homomorphisms")
{
	for (const auto& p : catalog()) {
		std::map<std::string, MultiPoly> id;
		for (const auto& g : p.generators)
			id.emplace(g, p.generator(g));
		CHECK(check_homomorphism(p, catalog_ring(p.name), id));
	}
	const auto& thm = catalog_presentation("m02d2");
	CHECK(check_homomorphism(thm, catalog_ring("m02d2alt"), theorem_to_alt_images()));
	CHECK(check_homomorphism(catalog_presentation("m02d2alt"), catalog_ring("m02d2"), alt_to_theorem_images()));
	for (int i : {1, 2})
		CHECK(check_homomorphism(catalog_presentation("m01d2"), catalog_ring("m02d2"), forget_pullback_images(i)));
	/* a map that kills no relation */
	auto bad = theorem_to_alt_images();
	bad.at("P1") = catalog_presentation("m02d2alt").parse("D1");
	CHECK_FALSE(check_homomorphism(thm, catalog_ring("m02d2alt"), bad));
	bad.at("P1") = catalog_presentation("m02d2alt").parse("D1^2");
	CHECK_THROWS_AS(check_homomorphism(thm, catalog_ring("m02d2alt"), bad), std::invalid_argument);
}

TEST_CASE("JSON round trip")
{
	for (const auto& p : catalog()) {
		Presentation q = presentation_from_json(presentation_to_json(p));
		CHECK(q.name == p.name);
		CHECK(q.generators == p.generators);
		CHECK(q.relations == p.relations);
		CHECK(q.top_degree == p.top_degree);
		REQUIRE(q.calibrations.size() == p.calibrations.size());
		CHECK(GradedQuotient(q).dims() == catalog_ring(p.name).dims());
	}
	CHECK_THROWS_AS(presentation_from_json("{"), std::invalid_argument);
	CHECK_THROWS_AS(presentation_from_json(R"({"name":"x"})"), std::invalid_argument);
	CHECK_THROWS_AS(presentation_from_json(
	                    R"({"name":"x","generators":[{"symbol":"a","degree":2}],"relations":[],"top_degree":1})"),
	                std::invalid_argument);
}
