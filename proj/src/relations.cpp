#include "smap/relations.hpp"

#include "smap/localization.hpp"
#include "smap/serre.hpp"

#include <json.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace smap {

static const std::map<Exponents, Rational>& integrals(const std::string& space_id)
{
	static std::mutex lock;
	static std::map<std::string, std::map<Exponents, Rational>> cache;
	std::lock_guard<std::mutex> guard(lock);
	auto it = cache.find(space_id);
	if (it == cache.end()) {
		std::map<Exponents, Rational> table;
		for (const auto& e : integrals_table(space_id))
			table[e.exponents] = e.value;
		it = cache.emplace(space_id, std::move(table)).first;
	}
	return it->second;
}

static int total(const Exponents& e)
{
	int s = 0;
	for (int x : e)
		s += x;
	return s;
}

RationalVector constraint_row(const std::string& space_id, const std::vector<Exponents>& monomials,
                              const Exponents& multiplier)
{
	const auto& space = localization_space(space_id);
	const auto& table = integrals(space_id);
	RationalVector row;
	for (const auto& m : monomials) {
		if (m.size() != multiplier.size() || m.size() != space.symbols.size())
			throw std::invalid_argument("exponent vectors do not match the space symbols");
		if (total(m) + total(multiplier) != space.dimension())
			throw std::invalid_argument("monomial and multiplier degrees are not complementary");
		Exponents prod(m.size());
		for (size_t i = 0; i < m.size(); ++i)
			prod[i] = m[i] + multiplier[i];
		row.push_back(table.at(prod));
	}
	return row;
}

std::vector<Exponents> complementary_multipliers(const std::string& space_id, int k)
{
	const auto& space = localization_space(space_id);
	return monomials_of_degree(space.symbols.size(), space.dimension() - k);
}

std::vector<RationalVector> find_relations(const std::string& space_id, int k,
                                           const std::vector<Exponents>& monomials,
                                           const std::vector<Exponents>& multipliers)
{
	for (const auto& m : monomials)
		if (total(m) != k)
			throw std::invalid_argument("spanning monomial of the wrong degree");
	auto mults = multipliers.empty() ? complementary_multipliers(space_id, k) : multipliers;
	RationalMatrix m(0, monomials.size());
	for (const auto& mult : mults)
		m.append_row(constraint_row(space_id, monomials, mult));
	return kernel_basis(m);
}

std::vector<Exponents> spanning_monomials(const std::string& space_id, int k)
{
	const auto& space = localization_space(space_id);
	MultiPoly names(space.symbol_names());
	std::vector<std::string> list;
	if (space_id == "m02d2") {
		switch (k) {
		case 0: list = {"1"}; break;
		case 1: list = {"H1", "H2", "D0", "D1", "D2"}; break;
		case 2: list = {"D1^2", "D1*D0", "D1*H1", "D1*H2", "D0^2", "D0*H1", "H1*H2"}; break;
		case 3: list = {"D1^3", "D1^2*H1", "D1^2*H2", "D1*H1*H2", "D0^3", "D0^2*H1"}; break;
		case 4: list = {"D1^2*H1*H2"}; break;
		default: break;
		}
	} else if (space_id == "m01d2") {
		switch (k) {
		case 0: list = {"1"}; break;
		case 1: list = {"H1", "D"}; break;
		case 2: list = {"D^2", "D*H1"}; break;
		case 3: list = {"D^2*H1"}; break;
		default: break;
		}
	} else {
		throw std::invalid_argument("no spanning sets for space " + space_id);
	}
	std::vector<Exponents> out;
	for (const auto& s : list)
		out.push_back(names.parse_monomial(s));
	return out;
}

MultiPoly relation_polynomial(const std::string& space_id, const std::vector<Exponents>& monomials,
                              const RationalVector& coeffs)
{
	MultiPoly p(localization_space(space_id).symbol_names());
	for (size_t i = 0; i < monomials.size(); ++i)
		p.add_term(monomials[i], coeffs.at(i));
	return p;
}

static long betti(const std::string& space_id, int k)
{
	if (space_id == "m02d2")
		return betti_m02(1, k);
	if (space_id == "m01d2")
		return poincare_m01(1).coeff(static_cast<size_t>(k)).get_num().get_si();
	throw std::invalid_argument("no Betti numbers for space " + space_id);
}

bool CompletenessReport::all_match() const
{
	for (const auto& d : degrees)
		if (!d.match)
			return false;
	return true;
}

std::string CompletenessReport::to_json() const
{
	nlohmann::json j;
	j["space"] = space_id;
	j["degrees"] = nlohmann::json::array();
	for (const auto& d : degrees) {
		nlohmann::json kernel = nlohmann::json::array();
		for (const auto& v : d.kernel) {
			nlohmann::json row = nlohmann::json::array();
			for (const auto& x : v)
				row.push_back(to_string(x));
			kernel.push_back(row);
		}
		j["degrees"].push_back({{"degree", d.degree},
		                        {"monomials", d.monomials},
		                        {"kernel", kernel},
		                        {"betti", d.betti},
		                        {"match", d.match}});
	}
	j["match"] = all_match();
	return j.dump(2);
}

CompletenessReport verify_completeness(const std::string& space_id)
{
	const auto& space = localization_space(space_id);
	MultiPoly names(space.symbol_names());
	CompletenessReport rep;
	rep.space_id = space_id;
	for (int k = 1; k <= space.dimension(); ++k) {
		DegreeReport d;
		d.degree = k;
		auto mons = spanning_monomials(space_id, k);
		for (const auto& m : mons)
			d.monomials.push_back(names.monomial_string(m));
		d.kernel = find_relations(space_id, k, mons);
		d.betti = betti(space_id, k);
		d.match = static_cast<long>(mons.size() - d.kernel.size()) == d.betti;
		rep.degrees.push_back(std::move(d));
	}
	return rep;
}

}  // namespace smap
