#pragma once

#include "smap/matrix.hpp"
#include "smap/multipoly.hpp"

#include <string>
#include <vector>

namespace smap {

/* Monomials and multipliers are exponent vectors over the divisor symbols of
 * the localization space (H1,H2,D0,D1,D2 for m02d2; H1,D for m01d2). */

/* integrals of monomial_c * multiplier, one per monomial */
RationalVector constraint_row(const std::string& space_id, const std::vector<Exponents>& monomials,
                              const Exponents& multiplier);

/* all monomials of complementary degree */
std::vector<Exponents> complementary_multipliers(const std::string& space_id, int k);

/* kernel of the constraint matrix; an empty multiplier list means the full sweep */
std::vector<RationalVector> find_relations(const std::string& space_id, int k,
                                           const std::vector<Exponents>& monomials,
                                           const std::vector<Exponents>& multipliers = {});

/* the reduced spanning sets used for the completeness count */
std::vector<Exponents> spanning_monomials(const std::string& space_id, int k);

/* coefficient vector over `monomials` as a polynomial over the space symbols */
MultiPoly relation_polynomial(const std::string& space_id, const std::vector<Exponents>& monomials,
                              const RationalVector& coeffs);

struct DegreeReport {
	int degree = 0;
	std::vector<std::string> monomials;
	std::vector<RationalVector> kernel;
	long betti = 0;
	bool match = false;
};

struct CompletenessReport {
	std::string space_id;
	std::vector<DegreeReport> degrees;
	bool all_match() const;
	std::string to_json() const;
};

/* per degree: #spanning monomials - dim kernel == Betti number */
CompletenessReport verify_completeness(const std::string& space_id);

}  // namespace smap
