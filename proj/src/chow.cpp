#include "smap/chow.hpp"

#include <json.hpp>

#include <memory>
#include <mutex>
#include <stdexcept>

namespace smap {

using nlohmann::json;

std::string presentation_to_json(const Presentation& p)
{
	json j;
	j["name"] = p.name;
	j["description"] = p.description;
	j["generators"] = json::array();
	for (const auto& g : p.generators)
		j["generators"].push_back({{"symbol", g}, {"degree", 1}});
	j["relations"] = json::array();
	for (const auto& r : p.relations)
		j["relations"].push_back(r.to_string());
	j["top_degree"] = p.top_degree;
	j["calibrations"] = json::array();
	for (const auto& c : p.calibrations)
		j["calibrations"].push_back({{"monomial", c.monomial}, {"value", to_string(c.value)}});
	return j.dump(2);
}

Presentation presentation_from_json(const std::string& text)
{
	json j;
	try {
		j = json::parse(text);
	} catch (const json::parse_error& e) {
		throw std::invalid_argument(std::string("presentation is not valid JSON: ") + e.what());
	}
	try {
		Presentation p;
		p.name = j.at("name").get<std::string>();
		p.description = j.value("description", "");
		for (const auto& g : j.at("generators")) {
			if (g.value("degree", 1) != 1)
				throw std::invalid_argument("only degree-1 generators are supported");
			p.generators.push_back(g.at("symbol").get<std::string>());
		}
		for (const auto& r : j.at("relations"))
			p.relations.push_back(p.parse(r.get<std::string>()));
		p.top_degree = j.at("top_degree").get<int>();
		for (const auto& c : j.value("calibrations", json::array()))
			p.calibrations.push_back(
			    {c.at("monomial").get<std::string>(), parse_rational(c.at("value").get<std::string>())});
		return p;
	} catch (const json::exception& e) {
		throw std::invalid_argument(std::string("presentation schema: ") + e.what());
	}
}

GradedQuotient::GradedQuotient(Presentation p) : p_(std::move(p))
{
	if (p_.top_degree < 0)
		throw std::invalid_argument("negative top degree");
	const size_t n = p_.generators.size();
	for (const auto& r : p_.relations) {
		if (r.vars() != p_.generators)
			throw std::invalid_argument("relation over a different generator list");
		if (!r.is_homogeneous())
			throw std::invalid_argument("relation " + r.to_string() + " is not homogeneous");
	}
	for (int k = 0; k <= p_.top_degree + 1; ++k) {
		Piece pc;
		pc.monomials = monomials_of_degree(n, k);
		for (size_t i = 0; i < pc.monomials.size(); ++i)
			pc.column[pc.monomials[i]] = i;
		RationalMatrix m(0, pc.monomials.size());
		for (const auto& r : p_.relations) {
			const int dr = r.degree();
			if (dr < 0 || dr > k)
				continue;
			for (const auto& mult : monomials_of_degree(n, k - dr)) {
				MultiPoly prod = r * MultiPoly::monomial(p_.generators, mult);
				RationalVector row(pc.monomials.size());
				for (const auto& [e, c] : prod.terms())
					row[pc.column.at(e)] = c;
				m.append_row(row);
			}
		}
		pc.span = rref(m);
		std::vector<bool> pivot(pc.monomials.size(), false);
		for (size_t c : pc.span.pivot_cols)
			pivot[c] = true;
		for (size_t c = 0; c < pc.monomials.size(); ++c) {
			if (!pivot[c]) {
				pc.basis.push_back(pc.monomials[c]);
				pc.basis_cols.push_back(c);
			}
		}
		pieces_.push_back(std::move(pc));
	}
	if (!pieces_.back().basis.empty())
		throw std::invalid_argument("presentation " + p_.name + " does not vanish above degree " +
		                            std::to_string(p_.top_degree));
	if (!p_.calibrations.empty()) {
		if (pieces_[p_.top_degree].basis.size() != 1)
			throw std::invalid_argument("calibrated presentation needs a one-dimensional top degree");
		for (const auto& c : p_.calibrations) {
			MultiPoly mono = p_.parse(c.monomial);
			if (mono.degree() != p_.top_degree)
				throw std::invalid_argument("calibration monomial " + c.monomial + " is not of top degree");
			if (normal_form(mono).at(0) == 0)
				throw std::invalid_argument("calibration monomial " + c.monomial + " reduces to zero");
		}
	}
}

const GradedQuotient::Piece& GradedQuotient::piece(int k) const
{
	if (k < 0)
		throw std::invalid_argument("negative degree");
	/* everything above the top vanishes */
	return pieces_[std::min<size_t>(static_cast<size_t>(k), pieces_.size() - 1)];
}

std::vector<size_t> GradedQuotient::dims() const
{
	std::vector<size_t> d;
	for (int k = 0; k <= p_.top_degree; ++k)
		d.push_back(pieces_[k].basis.size());
	return d;
}

void GradedQuotient::check_element(const MultiPoly& e) const
{
	if (e.vars() != p_.generators)
		throw std::invalid_argument("element is not over the generators of " + p_.name);
}

RationalVector GradedQuotient::normal_form(const MultiPoly& e) const
{
	check_element(e);
	if (e.is_zero())
		return {};
	if (!e.is_homogeneous())
		throw std::invalid_argument("normal_form needs a homogeneous element, got " + e.to_string());
	const int k = e.degree();
	if (k > p_.top_degree)
		return {};
	const Piece& pc = pieces_[k];
	RationalVector v(pc.monomials.size());
	for (const auto& [m, c] : e.terms())
		v[pc.column.at(m)] = c;
	for (size_t i = 0; i < pc.span.rank; ++i) {
		const size_t p = pc.span.pivot_cols[i];
		if (v[p] == 0)
			continue;
		Rational f = v[p];
		for (size_t c = 0; c < v.size(); ++c)
			v[c] -= f * pc.span.matrix.at(i, c);
	}
	RationalVector out;
	for (size_t c : pc.basis_cols)
		out.push_back(v[c]);
	return out;
}

MultiPoly GradedQuotient::reduce(const MultiPoly& e) const
{
	check_element(e);
	MultiPoly out(p_.generators);
	const int top = std::min(e.degree(), p_.top_degree);
	for (int k = 0; k <= top; ++k) {
		MultiPoly part = e.part(k);
		if (part.is_zero())
			continue;
		RationalVector nf = normal_form(part);
		for (size_t i = 0; i < nf.size(); ++i)
			if (nf[i] != 0)
				out.add_term(pieces_[k].basis[i], nf[i]);
	}
	return out;
}

Rational GradedQuotient::integrate(const MultiPoly& e, size_t which) const
{
	if (which >= p_.calibrations.size())
		throw std::invalid_argument("presentation " + p_.name + " has no calibration " + std::to_string(which));
	check_element(e);
	if (e.is_zero())
		return 0;
	if (!e.is_homogeneous() || e.degree() != p_.top_degree)
		throw std::invalid_argument("integrate needs an element of degree " + std::to_string(p_.top_degree));
	const Calibration& c = p_.calibrations[which];
	return normal_form(e).at(0) * c.value / normal_form(p_.parse(c.monomial)).at(0);
}

bool GradedQuotient::calibrations_consistent() const
{
	for (size_t i = 0; i < p_.calibrations.size(); ++i)
		if (integrate(p_.parse(p_.calibrations[i].monomial), 0) != p_.calibrations[i].value)
			return false;
	return true;
}

static Presentation make(std::string name, std::string description, std::vector<std::string> gens,
                         const std::vector<std::string>& rels, int top, std::vector<Calibration> cal)
{
	Presentation p;
	p.name = std::move(name);
	p.description = std::move(description);
	p.generators = std::move(gens);
	for (const auto& r : rels)
		p.relations.push_back(p.parse(r));
	p.top_degree = top;
	p.calibrations = std::move(cal);
	return p;
}

const std::vector<Presentation>& catalog()
{
	static const std::vector<Presentation> all = {
		make("m01d1", "M_{0,1}(P^1,1) = P^1", {"H1"}, {"H1^2"}, 1, {{"H1", 1}}),
		make("m02d1", "M_{0,2}(P^1,1) = P^1 x P^1", {"H1", "H2"}, {"H1^2", "H2^2"}, 2, {{"H1*H2", 1}}),
		make("m03d1", "M_{0,3}(P^1,1), blow-up of (P^1)^3 along the small diagonal",
		     {"H1", "H2", "H3", "D"},
		     {"H1^2", "H2^2", "H3^2", "(H1+H2-D)*(H2+H3-D)", "D*(H1-H2)", "D*(H2-H3)"}, 3,
		     {{"H1*H2*H3", 1}}),
		make("m03d0", "M_{0,3}(P^1,0) = P^1", {"H"}, {"H^2"}, 1, {{"H", 1}}),
		make("m01d2", "M_{0,1}(P^1,2)", {"D", "H1"}, {"H1^2", "D^3"}, 3, {{"D^2*H1", 4}}),
		make("m02d2", "M_{0,2}(P^1,2), presentation with psi classes P1, P2",
		     {"D0", "D2", "H1", "H2", "P1", "P2", "D1"},
		     {"H1^2", "H2^2", "D0*P1", "D0*P2", "D2-P1-P2", "1/4*D1+1/4*D2+D0-H1-P1",
		      "1/4*D1+1/4*D2+D0-H2-P2", "(D1+D2)^3", "D1*P1*P2"},
		     4, {{"D1^4", -20}, {"D2*D1*H1*H2", 2}}),
		make("m02d2alt", "M_{0,2}(P^1,2), four-generator presentation", {"D0", "H1", "H2", "D1"},
		     {"H1^2", "H2^2", "D0*H1-D0*H2", "D1*D0+4*D0^2-4*D0*H1",
		      "D1^3-3*D1^2*H1-3*D1^2*H2+6*D1*H1*H2+56*D0^3-72*D0^2*H1",
		      "D1^2*H1+D1^2*H2-4*D1*H1*H2-8*D0^3-8*D0^2*H1"},
		     4, {{"D1^4", -20}, {"D1^2*H1*H2", 2}}),
	};
	return all;
}

const Presentation& catalog_presentation(const std::string& id)
{
	for (const auto& p : catalog())
		if (p.name == id)
			return p;
	throw std::invalid_argument("unknown presentation " + id);
}

const GradedQuotient& catalog_ring(const std::string& id)
{
	static std::mutex lock;
	static std::map<std::string, std::unique_ptr<GradedQuotient>> cache;
	std::lock_guard<std::mutex> guard(lock);
	auto& slot = cache[id];
	if (!slot)
		slot = std::make_unique<GradedQuotient>(catalog_presentation(id));
	return *slot;
}

std::vector<MultiPoly> psi_elements(const std::string& id)
{
	const Presentation& p = catalog_presentation(id);
	std::vector<std::string> exprs;
	if (id == "m01d1")
		exprs = {"-2*H1"};
	else if (id == "m02d1")
		exprs = {"H2-H1", "H1-H2"};
	else if (id == "m03d1")
		exprs = {"H2+H3-D", "H1+H3-D", "H1+H2-D"};
	else if (id == "m01d2")
		exprs = {"1/4*D-H1"};
	else if (id == "m02d2")
		exprs = {"1/4*D1+1/4*D2+D0-H1", "1/4*D1+1/4*D2+D0-H2"};
	else if (id == "m02d2alt")
		exprs = {"1/2*D1+2*D0-3/2*H1-1/2*H2", "1/2*D1+2*D0-1/2*H1-3/2*H2"};
	std::vector<MultiPoly> out;
	for (const auto& e : exprs)
		out.push_back(p.parse(e));
	return out;
}

MultiPoly apply_images(const Presentation& source, const std::map<std::string, MultiPoly>& images,
                       const MultiPoly& e)
{
	std::vector<MultiPoly> v;
	for (const auto& g : source.generators) {
		auto it = images.find(g);
		if (it == images.end())
			throw std::invalid_argument("no image for generator " + g);
		if (!it->second.is_zero() && (!it->second.is_homogeneous() || it->second.degree() != 1))
			throw std::invalid_argument("image of " + g + " is not of degree 1");
		v.push_back(it->second);
	}
	return e.substitute(v);
}

bool check_homomorphism(const Presentation& source, const GradedQuotient& target,
                        const std::map<std::string, MultiPoly>& images)
{
	for (const auto& r : source.relations)
		if (!target.is_zero(apply_images(source, images, r)))
			return false;
	return true;
}

static std::map<std::string, MultiPoly> images_from(const Presentation& target,
                                                    const std::map<std::string, std::string>& m)
{
	std::map<std::string, MultiPoly> out;
	for (const auto& [g, expr] : m)
		out.emplace(g, target.parse(expr));
	return out;
}

std::map<std::string, MultiPoly> theorem_to_alt_images()
{
	return images_from(catalog_presentation("m02d2alt"), {
	                                                         {"D0", "D0"},
	                                                         {"D2", "D1+4*D0-2*H1-2*H2"},
	                                                         {"H1", "H1"},
	                                                         {"H2", "H2"},
	                                                         {"P1", "1/2*D1+2*D0-3/2*H1-1/2*H2"},
	                                                         {"P2", "1/2*D1+2*D0-1/2*H1-3/2*H2"},
	                                                         {"D1", "D1"},
	                                                     });
}

std::map<std::string, MultiPoly> alt_to_theorem_images()
{
	return images_from(catalog_presentation("m02d2"),
	                   {{"D0", "D0"}, {"H1", "H1"}, {"H2", "H2"}, {"D1", "D1"}});
}

std::map<std::string, MultiPoly> forget_pullback_images(int i)
{
	if (i != 1 && i != 2)
		throw std::invalid_argument("the two-pointed space has points 1 and 2");
	return images_from(catalog_presentation("m02d2"), {{"D", "D1+D2"}, {"H1", "H" + std::to_string(i)}});
}

}  // namespace smap
