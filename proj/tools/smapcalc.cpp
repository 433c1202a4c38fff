#include "smap/acceptance.hpp"
#include "smap/chow.hpp"
#include "smap/correlators.hpp"
#include "smap/localization.hpp"
#include "smap/relations.hpp"
#include "smap/serre.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace smap;
using ojson = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct Options {
	std::string format = "text";
	long r = 1;
	int points = 2;
	std::string space;
	std::string lambda = "1,0";
	std::string file;
	bool verify = false;
	bool dump_json = false;
	int degree = 1;
	std::string method = "both";
};

bool json_out(const Options& o)
{
	return o.format == "json";
}

ojson coeff_array(const QPoly& p)
{
	ojson a = ojson::array();
	for (const auto& c : p.coeffs())
		a.push_back(to_string(c));
	return a;
}

int cmd_serre(const Options& o)
{
	if (o.r < 1)
		throw UsageError("--r must be at least 1");
	QPoly p;
	if (o.points == 1)
		p = poincare_m01(o.r);
	else if (o.points == 2)
		p = poincare_m02(o.r);
	else
		throw UsageError("--points must be 1 or 2");
	if (json_out(o)) {
		ojson j{{"r", o.r}, {"points", o.points}, {"degree", 2}, {"poincare", coeff_array(p)},
		        {"polynomial", p.to_string()}, {"chi", to_string(p.eval(1))}};
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << p.to_string() << ", chi=" << to_string(p.eval(1)) << "\n";
	}
	return 0;
}

int cmd_betti(const Options& o)
{
	if (o.r < 1)
		throw UsageError("--r must be at least 1");
	QPoly p = poincare_m02(o.r);
	ojson list = ojson::array();
	bool ok = true;
	for (long j = 0; j <= p.degree(); ++j) {
		long b = betti_m02(o.r, j);
		ok = ok && p.coeff(static_cast<size_t>(j)) == b;
		list.push_back(b);
	}
	if (json_out(o)) {
		std::cout << ojson{{"r", o.r}, {"betti", list}, {"agrees_with_poincare", ok}}.dump(2) << "\n";
	} else {
		std::cout << "betti numbers of M_{0,2}(P^" << o.r << ",2):";
		for (const auto& b : list)
			std::cout << " " << b.get<long>();
		std::cout << "\n" << (ok ? "agrees" : "DISAGREES") << " with the Poincare polynomial\n";
	}
	return ok ? 0 : 1;
}

LambdaSpec parse_lambda(const std::string& s, size_t r)
{
	std::vector<Rational> v;
	std::stringstream ss(s);
	std::string item;
	while (std::getline(ss, item, ','))
		v.push_back(parse_rational(item));
	if (v.size() != r + 1)
		throw UsageError("--lambda needs " + std::to_string(r + 1) + " comma-separated weights");
	return LambdaSpec(v);
}

const LocalizationSpace& space_arg(const Options& o)
{
	try {
		return localization_space(o.space);
	} catch (const std::invalid_argument& e) {
		throw UsageError(e.what());
	}
}

int cmd_graphs(const Options& o)
{
	const auto& space = space_arg(o);
	LambdaSpec spec = parse_lambda(o.lambda, static_cast<size_t>(space.r));
	auto graphs = space_graphs(space);
	ojson rows = ojson::array();
	for (size_t i = 0; i < graphs.size(); ++i) {
		rows.push_back({{"index", i + 1},
		                {"graph", graphs[i].describe()},
		                {"aut", aut_order(graphs[i])},
		                {"euler", euler_normal(graphs[i], spec).to_string()}});
	}
	if (json_out(o)) {
		ojson lam = ojson::array();
		for (const auto& x : spec.lambda)
			lam.push_back(to_string(x));
		std::cout << ojson{{"space", space.id}, {"lambda", lam}, {"graphs", rows}}.dump(2) << "\n";
		return 0;
	}
	std::cout << "space " << space.id << ", specialization";
	for (size_t i = 0; i < spec.lambda.size(); ++i)
		std::cout << " lambda" << i << "=" << to_string(spec.lambda[i]);
	std::cout << "\n";
	for (const auto& r : rows)
		std::cout << "  Z" << r["index"].get<size_t>() << "  " << r["graph"].get<std::string>()
		          << "  aut=" << r["aut"].get<long>() << "  euler=" << r["euler"].get<std::string>() << "\n";
	return 0;
}

int cmd_integrals(const Options& o)
{
	const auto& space = space_arg(o);
	auto table = integrals_table(space.id);
	if (json_out(o)) {
		ojson j = ojson::object();
		for (const auto& e : table)
			j[e.monomial] = to_string(e.value);
		std::cout << j.dump(2) << "\n";
		return 0;
	}
	for (const auto& e : table) {
		std::cout << e.monomial << " = " << to_string(e.value);
		if (!e.rule.empty())
			std::cout << "  [" << e.rule << "]";
		std::cout << "\n";
	}
	return 0;
}

int cmd_presentation(const Options& o)
{
	Presentation p;
	if (!o.file.empty()) {
		std::ifstream in(o.file);
		if (!in)
			throw UsageError("cannot read " + o.file);
		std::stringstream buf;
		buf << in.rdbuf();
		try {
			p = presentation_from_json(buf.str());
		} catch (const std::invalid_argument& e) {
			throw UsageError(e.what());
		}
	} else {
		try {
			p = catalog_presentation(o.space);
		} catch (const std::invalid_argument& e) {
			throw UsageError(e.what());
		}
	}
	if (o.dump_json) {
		std::cout << presentation_to_json(p) << "\n";
		return 0;
	}
	GradedQuotient ring(p);
	bool ok = true;
	ojson checks = ojson::array();
	if (o.verify) {
		for (const auto& rel : p.relations) {
			bool z = ring.is_zero(rel);
			ok = ok && z;
			checks.push_back({{"check", "relation " + rel.to_string()}, {"ok", z}});
		}
		if (!p.calibrations.empty()) {
			bool c = ring.calibrations_consistent();
			ok = ok && c;
			checks.push_back({{"check", "calibrations agree"}, {"ok", c}});
		}
		if (o.file.empty() && (p.name == "m02d2" || p.name == "m02d2alt" || p.name == "m01d2")) {
			QPoly expect = p.name == "m01d2" ? poincare_m01(1) : poincare_m02(1);
			bool d = true;
			auto dims = ring.dims();
			for (size_t k = 0; k < dims.size(); ++k)
				d = d && expect.coeff(k) == static_cast<long>(dims[k]);
			d = d && static_cast<long>(dims.size()) == expect.degree() + 1;
			ok = ok && d;
			checks.push_back({{"check", "dimensions match Poincare polynomial " + expect.to_string()}, {"ok", d}});
		}
	}
	ojson dims = ring.dims();
	if (json_out(o)) {
		ojson rels = ojson::array();
		for (const auto& r : p.relations)
			rels.push_back(r.to_string());
		ojson j{{"name", p.name}, {"generators", p.generators}, {"relations", rels}, {"dims", dims}};
		if (o.verify)
			j["checks"] = checks, j["ok"] = ok;
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << p.name << ": Q[";
		for (size_t i = 0; i < p.generators.size(); ++i)
			std::cout << (i ? "," : "") << p.generators[i];
		std::cout << "] / (" << p.relations.size() << (p.relations.size() == 1 ? " relation)\n" : " relations)\n");
		for (const auto& r : p.relations)
			std::cout << "  " << r.to_string() << "\n";
		std::cout << "graded dimensions:";
		for (const auto& d : dims)
			std::cout << " " << d.get<size_t>();
		std::cout << "\n";
		for (const auto& c : checks)
			std::cout << (c["ok"].get<bool>() ? "  ok    " : "  FAIL  ") << c["check"].get<std::string>() << "\n";
	}
	return ok ? 0 : 1;
}

int cmd_relations(const Options& o)
{
	const std::string id = o.space.empty() ? "m02d2" : o.space;
	const auto& space = localization_space(id);
	if (o.degree < 1 || o.degree > space.dimension())
		throw UsageError("--degree must be between 1 and " + std::to_string(space.dimension()));
	auto rep = verify_completeness(id);
	const auto& d = rep.degrees[static_cast<size_t>(o.degree - 1)];
	auto mons = spanning_monomials(id, o.degree);
	if (json_out(o)) {
		ojson kernel = ojson::array();
		for (const auto& v : d.kernel) {
			ojson row = ojson::array();
			for (const auto& x : v)
				row.push_back(to_string(x));
			kernel.push_back(row);
		}
		std::cout << ojson{{"space", id},     {"degree", d.degree}, {"monomials", d.monomials},
		                   {"kernel", kernel}, {"betti", d.betti},   {"match", d.match}}
		                 .dump(2)
		          << "\n";
	} else {
		std::cout << "degree " << d.degree << " spanning monomials:";
		for (const auto& m : d.monomials)
			std::cout << " " << m;
		std::cout << "\nkernel dimension " << d.kernel.size() << "\n";
		for (const auto& v : d.kernel)
			std::cout << "  " << relation_polynomial(id, mons, v).to_string() << " = 0\n";
		std::cout << d.monomials.size() << " - " << d.kernel.size() << " = "
		          << d.monomials.size() - d.kernel.size() << ", betti " << d.betti
		          << (d.match ? " (match)" : " (MISMATCH)") << "\n";
	}
	return d.match ? 0 : 1;
}

int cmd_correlators(const Options& o)
{
	std::vector<CorrelatorRow> rows;
	bool ok = true;
	for (const auto& k : two_point_keys()) {
		CorrelatorRow r{k, 0, 0, false};
		if (o.method != "axioms")
			r.ring = correlator_via_ring(k);
		if (o.method != "ring")
			r.axioms = correlator_via_axioms(k);
		r.agree = r.ring == r.axioms;
		if (o.method == "both")
			ok = ok && r.agree;
		rows.push_back(r);
	}
	if (json_out(o)) {
		std::cout << correlators_to_json(rows, o.method) << "\n";
		return ok ? 0 : 1;
	}
	for (const auto& r : rows) {
		std::cout << "<" << r.key.to_string() << ">_{0,2} = ";
		if (o.method == "ring")
			std::cout << to_string(r.ring);
		else if (o.method == "axioms")
			std::cout << to_string(r.axioms);
		else
			std::cout << "ring " << to_string(r.ring) << ", axioms " << to_string(r.axioms)
			          << (r.agree ? "  AGREE" : "  DISAGREE");
		std::cout << "\n";
	}
	return ok ? 0 : 1;
}

int cmd_verify_all(const Options& o)
{
	auto results = run_acceptance();
	bool ok = true;
	ojson j = ojson::array();
	for (const auto& r : results) {
		ok = ok && r.pass;
		if (json_out(o))
			j.push_back({{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
		else
			std::cout << format_result(r) << "\n";
	}
	if (json_out(o))
		std::cout << ojson{{"criteria", j}, {"pass", ok}}.dump(2) << "\n";
	else
		std::cout << (ok ? "all criteria pass" : "some criteria FAIL") << "\n";
	return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
	CLI::App app{"exact computations on moduli of stable maps to P^1"};
	app.require_subcommand(1);
	app.fallthrough();
	Options o;
	app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

	auto* serre = app.add_subcommand("serre", "Poincare polynomial and Euler characteristic of M_{0,n}(P^r,2)");
	serre->add_option("--r", o.r, "target dimension")->required();
	serre->add_option("--points", o.points, "number of marked points (1 or 2)")->required();

	auto* betti = app.add_subcommand("betti", "Betti numbers of M_{0,2}(P^r,2) by the closed formula");
	betti->add_option("--r", o.r, "target dimension")->required();

	auto* graphs = app.add_subcommand("graphs", "torus-fixed loci with automorphism orders and Euler classes");
	graphs->add_option("--space", o.space, "m01d2 or m02d2")->required();
	graphs->add_option("--lambda", o.lambda, "weights, e.g. 1,0");

	auto* ints = app.add_subcommand("integrals", "all top-degree integrals of divisor monomials");
	ints->add_option("--space", o.space, "localization space id")->required();

	auto* pres = app.add_subcommand("presentation", "Chow ring presentation and its graded dimensions");
	pres->add_option("--space", o.space, "catalog id");
	pres->add_option("--file", o.file, "JSON presentation to load instead");
	pres->add_flag("--verify", o.verify, "check relations, calibrations and dimensions");
	pres->add_flag("--dump-json", o.dump_json, "print the presentation as JSON");

	auto* rels = app.add_subcommand("relations", "relations among divisor monomials from the integral table");
	rels->add_option("--degree", o.degree, "degree of the relations")->required();
	rels->add_option("--space", o.space, "m02d2 (default) or m01d2");

	auto* cors = app.add_subcommand("correlators", "the sixteen two-point degree-two correlators");
	cors->add_option("--method", o.method, "ring, axioms or both")->check(CLI::IsMember({"ring", "axioms", "both"}));

	auto* all = app.add_subcommand("verify-all", "run every acceptance check");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	}

	try {
		if (serre->parsed())
			return cmd_serre(o);
		if (betti->parsed())
			return cmd_betti(o);
		if (graphs->parsed())
			return cmd_graphs(o);
		if (ints->parsed())
			return cmd_integrals(o);
		if (pres->parsed()) {
			if (o.space.empty() == o.file.empty())
				throw UsageError("give exactly one of --space and --file");
			return cmd_presentation(o);
		}
		if (rels->parsed())
			return cmd_relations(o);
		if (cors->parsed())
			return cmd_correlators(o);
		if (all->parsed())
			return cmd_verify_all(o);
	} catch (const UsageError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "verification failed: " << e.what() << "\n";
		return 1;
	}
	return 2;
}
