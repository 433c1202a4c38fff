#pragma once

#include "smap/matrix.hpp"
#include "smap/multipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace smap {

/* the integral of one top-degree monomial */
struct Calibration {
	std::string monomial;
	Rational value;
};

/* Q[generators]/(relations), all generators of degree 1 */
struct Presentation {
	std::string name;
	std::string description;
	std::vector<std::string> generators;
	std::vector<MultiPoly> relations;
	int top_degree = 0;
	/* the first entry is used by integrate; the rest are cross-checks */
	std::vector<Calibration> calibrations;

	MultiPoly parse(const std::string& expr) const { return parse_polynomial(generators, expr); }
	MultiPoly generator(const std::string& name) const { return MultiPoly::variable(generators, name); }
};

/* {"name", "description", "generators": [{"symbol","degree"}], "relations": [...],
 *  "top_degree", "calibrations": [{"monomial","value"}]} */
std::string presentation_to_json(const Presentation& p);
/* throws std::invalid_argument on schema violations */
Presentation presentation_from_json(const std::string& text);

class GradedQuotient {
public:
	/* throws std::invalid_argument if a relation is inhomogeneous, the ring does not
	 * vanish above top_degree, or a calibration monomial reduces to zero */
	explicit GradedQuotient(Presentation p);

	const Presentation& presentation() const { return p_; }
	int top_degree() const { return p_.top_degree; }
	std::vector<size_t> dims() const;
	const std::vector<Exponents>& monomials(int k) const { return piece(k).monomials; }
	const std::vector<Exponents>& basis(int k) const { return piece(k).basis; }

	/* coordinates of a homogeneous element in basis(k); throws on inhomogeneous input */
	RationalVector normal_form(const MultiPoly& e) const;
	/* the normal form written back as a polynomial in basis monomials */
	MultiPoly reduce(const MultiPoly& e) const;
	bool is_zero(const MultiPoly& e) const { return reduce(e).is_zero(); }
	bool equal(const MultiPoly& a, const MultiPoly& b) const { return is_zero(a - b); }

	/* top-degree element; uses calibrations[which] */
	Rational integrate(const MultiPoly& e, size_t which = 0) const;
	/* every calibration is reproduced by integrate with the first one */
	bool calibrations_consistent() const;

private:
	struct Piece {
		std::vector<Exponents> monomials;
		std::map<Exponents, size_t> column;
		RrefResult span;
		std::vector<Exponents> basis;
		std::vector<size_t> basis_cols;
	};
	const Piece& piece(int k) const;
	void check_element(const MultiPoly& e) const;

	Presentation p_;
	std::vector<Piece> pieces_;
};

/* identifiers: m01d1 m02d1 m03d1 m03d0 m01d2 m02d2 m02d2alt */
const std::vector<Presentation>& catalog();
const Presentation& catalog_presentation(const std::string& id);
/* built once and cached */
const GradedQuotient& catalog_ring(const std::string& id);

/* psi_i at index i-1, as elements of the catalog ring; empty for m03d0 */
std::vector<MultiPoly> psi_elements(const std::string& id);

/* true iff every relation of source maps to zero in target under
 * generator -> image; throws std::invalid_argument if an image is missing
 * or not homogeneous of degree 1 */
bool check_homomorphism(const Presentation& source, const GradedQuotient& target,
                        const std::map<std::string, MultiPoly>& images);

/* the maps between the two two-pointed degree-2 presentations */
std::map<std::string, MultiPoly> theorem_to_alt_images();
std::map<std::string, MultiPoly> alt_to_theorem_images();
/* forgetful pullback from the one-pointed to the two-pointed degree-2 ring, keeping point i */
std::map<std::string, MultiPoly> forget_pullback_images(int i);

/* substitute generator images into an element of source */
MultiPoly apply_images(const Presentation& source, const std::map<std::string, MultiPoly>& images,
                       const MultiPoly& e);

}  // namespace smap
