#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smap/correlators.hpp"

#include <json.hpp>

using namespace smap;

static Rational ax(const std::string& s, int d = 2)
{
	return correlator_via_axioms(CorrelatorKey::parse(s, d));
}

static Rational ring(const std::string& s)
{
	return correlator_via_ring(CorrelatorKey::parse(s, 2));
}

TEST_CASE("key syntax")
{
	auto k = CorrelatorKey::parse("tau2(H), tau1(1)");
	CHECK(k.to_string() == "tau2(H),tau1(1)");
	CHECK(k.swapped().to_string() == "tau1(1),tau2(H)");
	CHECK_THROWS_AS(CorrelatorKey::parse("tau2(X)"), std::invalid_argument);
	CHECK_THROWS_AS(CorrelatorKey::parse("tau2(H),"), std::invalid_argument);
}

TEST_CASE("worked values")
{
	CHECK(ring("tau2(H),tau1(1)") == Rational(-1, 4));
	CHECK(ring("tau4(1),tau0(1)") == Rational(-3, 4));
	CHECK(ring("tau2(1),tau2(1)") == Rational(5, 4));
	CHECK(ax("tau1(H),tau1(H)") == Rational(1, 2));
	CHECK(ax("tau1(H),tau2(1)") == Rational(-3, 4));
	CHECK(ax("tau3(1),tau0(H)") == Rational(-5, 4));
}

TEST_CASE("low-degree anchors")
{
	CHECK(ax("tau0(H)", 1) == 1);
	CHECK(ax("tau0(H),tau0(H)", 1) == 1);
	CHECK(ax("tau1(1),tau0(H)", 1) == -1);
	CHECK(ax("tau1(1)", 1) == -2);
	CHECK(ax("tau2(H)", 2) == Rational(1, 4));
	CHECK(ax("tau3(1)", 2) == Rational(-3, 4));
	/* three points on a contracted component: only the point class survives */
	CHECK(ax("tau0(H),tau0(1),tau0(1)", 0) == 1);
	CHECK(ax("tau0(1),tau0(1),tau0(1)", 0) == 0);
}

TEST_CASE("string and dilaton consistency")
{
	CHECK(ax("tau3(H),tau0(1)") == ax("tau2(H)"));
	CHECK(ax("tau4(1),tau0(1)") == ax("tau3(1)"));
	CHECK(ax("tau1(1),tau3(1)") == -ax("tau3(1)"));
	CHECK(ax("tau1(1),tau2(H)") == -ax("tau2(H)"));
}

TEST_CASE("degree axiom and conventions")
{
	CHECK(ring("tau0(1),tau3(1)") == 0);
	CHECK(ax("tau0(1),tau3(1)") == 0);
	CHECK(ax("tau-1(H),tau5(1)") == 0);
	CHECK_THROWS_AS(ax("tau4(1),tau0(1)", 3), std::domain_error);
	CHECK_THROWS_AS(correlator_via_ring(CorrelatorKey::parse("tau4(1)", 2)), std::invalid_argument);
}

TEST_CASE("cross check")
{
	auto rows = cross_check_all();
	REQUIRE(rows.size() == 16);
	for (const auto& r : rows) {
		CHECK(r.agree);
		CHECK(correlator_via_ring(r.key, 1) == r.ring);
		CHECK(correlator_via_axioms(r.key.swapped()) == r.axioms);
	}
	auto j = nlohmann::json::parse(correlators_to_json(rows, "ring"));
	CHECK(j["tau2(H),tau1(1)"] == "-1/4");
	CHECK(j.size() == 16);
}
