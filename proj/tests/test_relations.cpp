#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smap/chow.hpp"
#include "smap/localization.hpp"
#include "smap/relations.hpp"

#include <json.hpp>

using namespace smap;

static Exponents mono(const std::string& s)
{
	return MultiPoly(localization_space("m02d2").symbol_names()).parse_monomial(s);
}

TEST_CASE("constraint rows")
{
	auto cols = spanning_monomials("m02d2", 1);
	CHECK(constraint_row("m02d2", cols, mono("D2^2*H1")) == RationalVector{0, 2, 0, 0, -4});
	CHECK(constraint_row("m02d2", cols, mono("D2^2*H2")) == RationalVector{2, 0, 0, 0, -4});
	CHECK(constraint_row("m02d2", cols, mono("D1*D0*H1")) == RationalVector{0, 0, -1, 4, 0});
	CHECK(constraint_row("m02d2", cols, mono("D1*H1*H2")) == RationalVector{0, 0, 0, 2, 2});
	CHECK_THROWS_AS(constraint_row("m02d2", cols, mono("D1*H1")), std::invalid_argument);
}

TEST_CASE("the four hand-picked rows already determine the linear relation")
{
	auto cols = spanning_monomials("m02d2", 1);
	auto k = find_relations("m02d2", 1, cols,
	                        {mono("D2^2*H1"), mono("D2^2*H2"), mono("D1*D0*H1"), mono("D1*H1*H2")});
	REQUIRE(k.size() == 1);
	CHECK(k[0] == RationalVector{1, 1, -2, Rational(-1, 2), Rational(1, 2)});
	CHECK(find_relations("m02d2", 1, cols) == k);
}

TEST_CASE("kernel dimension is monotone in the multiplier set")
{
	for (int deg = 1; deg <= 3; ++deg) {
		auto cols = spanning_monomials("m02d2", deg);
		auto all = complementary_multipliers("m02d2", deg);
		size_t prev = cols.size();
		for (size_t n = 1; n <= all.size(); ++n) {
			std::vector<Exponents> some(all.begin(), all.begin() + static_cast<long>(n));
			size_t dim = find_relations("m02d2", deg, cols, some).size();
			CHECK(dim <= prev);
			prev = dim;
		}
		CHECK(prev == find_relations("m02d2", deg, cols).size());
	}
}

TEST_CASE("recovered relations hold in the presentation")
{
	const auto& ring = catalog_ring("m02d2");
	for (int deg = 1; deg <= 3; ++deg) {
		auto cols = spanning_monomials("m02d2", deg);
		for (const auto& v : find_relations("m02d2", deg, cols)) {
			MultiPoly rel = relation_polynomial("m02d2", cols, v);
			CHECK(ring.is_zero(ring.presentation().parse(rel.to_string())));
		}
	}
	/* the linear relation is D2 - psi1 - psi2 on the nose */
	auto cols = spanning_monomials("m02d2", 1);
	auto v = find_relations("m02d2", 1, cols).at(0);
	auto psi = psi_elements("m02d2");
	MultiPoly lhs = ring.presentation().parse(relation_polynomial("m02d2", cols, v).to_string());
	CHECK(lhs == ring.presentation().generator("D2") - psi[0] - psi[1]);
}

TEST_CASE("one-pointed conics")
{
	MultiPoly names(localization_space("m01d2").symbol_names());
	std::vector<Exponents> cols = {names.parse_monomial("D^2*H1"), names.parse_monomial("D^3")};
	auto k = find_relations("m01d2", 3, cols);
	REQUIRE(k.size() == 1);
	CHECK(k[0] == RationalVector{0, 1});
	CHECK(verify_completeness("m01d2").all_match());
}

TEST_CASE("completeness report")
{
	auto rep = verify_completeness("m02d2");
	REQUIRE(rep.degrees.size() == 4);
	const long betti[] = {4, 6, 4, 1};
	const size_t kernel[] = {1, 1, 2, 0};
	for (size_t i = 0; i < 4; ++i) {
		CHECK(rep.degrees[i].betti == betti[i]);
		CHECK(rep.degrees[i].kernel.size() == kernel[i]);
		CHECK(rep.degrees[i].match);
	}
	auto j = nlohmann::json::parse(rep.to_json());
	CHECK(j["match"] == true);
	CHECK(j["degrees"][1]["kernel"][0][1] == "1");
	CHECK(j["degrees"][1]["kernel"][0][4] == "4");
	CHECK_THROWS_AS(spanning_monomials("m03d1", 1), std::invalid_argument);
}
