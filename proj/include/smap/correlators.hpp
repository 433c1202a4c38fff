#pragma once

#include "smap/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace smap {

/* tau_k(gamma) with gamma = 1 or H */
struct Insertion {
	int tau = 0;
	bool hyper = false;
	friend auto operator<=>(const Insertion&, const Insertion&) = default;
};

/* genus-zero correlator of P^1 */
struct CorrelatorKey {
	int degree = 0;
	std::vector<Insertion> insertions;

	/* "tau2(H),tau1(1)" */
	std::string to_string() const;
	static CorrelatorKey parse(const std::string& s, int degree = 2);
	CorrelatorKey swapped() const;
};

/* integral of psi_1^a H_1^.. psi_2^b H_2^.. in the two-pointed degree-2 ring;
 * keys failing the degree count give 0 */
Rational correlator_via_ring(const CorrelatorKey& k, size_t calibration = 0);

/* recursion through the string, divisor and dilaton equations, the
 * one-point closed forms and the three-point splitting identity;
 * throws std::domain_error on keys outside that closed set */
Rational correlator_via_axioms(const CorrelatorKey& k);

/* the sixteen degree-two two-point keys, table order */
std::vector<CorrelatorKey> two_point_keys();

struct CorrelatorRow {
	CorrelatorKey key;
	Rational ring;
	Rational axioms;
	bool agree = false;
};

/* throws std::logic_error naming the first key where the routes or the
 * swap symmetry disagree */
std::vector<CorrelatorRow> cross_check_all();

std::string correlators_to_json(const std::vector<CorrelatorRow>& rows, const std::string& method);

}  // namespace smap
