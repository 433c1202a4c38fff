#include "smap/correlators.hpp"

#include "smap/chow.hpp"

#include <json.hpp>

#include <algorithm>
#include <mutex>
#include <optional>
#include <regex>
#include <stdexcept>

namespace smap {

std::string CorrelatorKey::to_string() const
{
	std::string s;
	for (const auto& x : insertions) {
		if (!s.empty())
			s += ',';
		s += "tau" + std::to_string(x.tau) + (x.hyper ? "(H)" : "(1)");
	}
	return s;
}

CorrelatorKey CorrelatorKey::parse(const std::string& s, int degree)
{
	static const std::regex item(R"(\s*tau(-?\d+)\((1|H)\)\s*)");
	CorrelatorKey k;
	k.degree = degree;
	size_t start = 0;
	while (start <= s.size()) {
		size_t comma = s.find(',', start);
		std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
		std::smatch m;
		if (!std::regex_match(part, m, item))
			throw std::invalid_argument("bad insertion '" + part + "', expected tauK(1) or tauK(H)");
		k.insertions.push_back({std::stoi(m[1]), m[2] == "H"});
		if (comma == std::string::npos)
			break;
		start = comma + 1;
	}
	return k;
}

CorrelatorKey CorrelatorKey::swapped() const
{
	CorrelatorKey k = *this;
	std::reverse(k.insertions.begin(), k.insertions.end());
	return k;
}

static int degree_sum(const std::vector<Insertion>& ins)
{
	int s = 0;
	for (const auto& x : ins)
		s += x.tau + (x.hyper ? 1 : 0);
	return s;
}

Rational correlator_via_ring(const CorrelatorKey& k, size_t calibration)
{
	if (k.degree != 2 || k.insertions.size() != 2)
		throw std::invalid_argument("the ring route covers two-point degree-two correlators");
	if (degree_sum(k.insertions) != 4)
		return 0;
	const GradedQuotient& ring = catalog_ring("m02d2");
	const Presentation& p = ring.presentation();
	const auto& a = k.insertions[0];
	const auto& b = k.insertions[1];
	if (a.tau < 0 || b.tau < 0)
		return 0;
	MultiPoly e = p.generator("P1").pow(a.tau) * p.generator("P2").pow(b.tau);
	if (a.hyper)
		e = e * p.generator("H1");
	if (b.hyper)
		e = e * p.generator("H2");
	return ring.integrate(e, calibration);
}

namespace {

class AxiomEngine {
public:
	Rational eval(int d, std::vector<Insertion> ins)
	{
		std::sort(ins.begin(), ins.end());
		auto key = std::make_pair(d, ins);
		auto it = memo_.find(key);
		if (it != memo_.end())
			return it->second;
		Rational v = compute(d, ins);
		memo_.emplace(key, v);
		return v;
	}

private:
	[[noreturn]] static void unsupported(int d, const std::vector<Insertion>& ins)
	{
		CorrelatorKey k{d, ins};
		throw std::domain_error("no axiom applies to <" + k.to_string() + ">_{0," + std::to_string(d) + "}");
	}

	static Rational factorial(int n)
	{
		Rational f = 1;
		for (int i = 2; i <= n; ++i)
			f *= i;
		return f;
	}

	static std::vector<Insertion> without(const std::vector<Insertion>& ins, size_t i)
	{
		auto out = ins;
		out.erase(out.begin() + static_cast<long>(i));
		return out;
	}

	static std::optional<size_t> find(const std::vector<Insertion>& ins, Insertion x)
	{
		for (size_t i = 0; i < ins.size(); ++i)
			if (ins[i] == x)
				return i;
		return std::nullopt;
	}

	/* sum over j of the correlator with tau_j lowered and gamma_j multiplied by H (if times_h) */
	Rational lowered(int d, const std::vector<Insertion>& rest, bool times_h)
	{
		Rational s = 0;
		for (size_t j = 0; j < rest.size(); ++j) {
			if (times_h && rest[j].hyper)
				continue; /* H^2 = 0 */
			auto t = rest;
			t[j].tau -= 1;
			if (times_h)
				t[j].hyper = true;
			s += eval(d, t);
		}
		return s;
	}

	/* splitting identity with the psi power carried by ins[i], tau >= 1 */
	Rational split(int d, const std::vector<Insertion>& ins, size_t i)
	{
		const Insertion lowered_i{ins[i].tau - 1, ins[i].hyper};
		const auto others = without(ins, i);
		Rational s = 0;
		for (int b1 = 0; b1 <= d; ++b1) {
			for (bool delta_h : {false, true}) {
				Rational left = eval(b1, {lowered_i, Insertion{0, delta_h}});
				if (left == 0)
					continue;
				auto right = others;
				right.insert(right.begin(), Insertion{0, !delta_h});
				s += left * eval(d - b1, right);
			}
		}
		return s;
	}

	Rational compute(int d, const std::vector<Insertion>& ins)
	{
		const int n = static_cast<int>(ins.size());
		for (const auto& x : ins)
			if (x.tau < 0)
				return 0;
		if (d < 0)
			unsupported(d, ins);
		if (degree_sum(ins) != 2 * d + n - 2)
			return 0;
		if (d == 0) {
			if (n < 3)
				return 0;
			int taus = 0, hs = 0;
			Rational denom = 1;
			for (const auto& x : ins) {
				taus += x.tau;
				hs += x.hyper;
				denom *= factorial(x.tau);
			}
			if (taus != n - 3 || hs != 1)
				return 0;
			return factorial(n - 3) / denom;
		}
		const Insertion one{0, false}, hyp{0, true}, dil{1, false};
		if (d == 1 && (ins == std::vector<Insertion>{hyp} || ins == std::vector<Insertion>{hyp, hyp}))
			return 1;
		if (n >= 2) {
			if (auto i = find(ins, one))
				return lowered(d, without(ins, *i), false);
			if (auto i = find(ins, hyp)) {
				auto rest = without(ins, *i);
				return d * eval(d, rest) + lowered(d, rest, true);
			}
			if (auto i = find(ins, dil))
				return (n - 3) * eval(d, without(ins, *i));
		}
		if (n == 1) {
			const Rational sq = factorial(d) * factorial(d);
			if (ins[0] == Insertion{2 * d - 2, true})
				return 1 / sq;
			if (ins[0] == Insertion{2 * d - 1, false}) {
				Rational harmonic = 0;
				for (int j = 1; j <= d; ++j)
					harmonic += Rational(1, j);
				return -2 * harmonic / sq;
			}
		}
		if (n == 2) {
			/* divisor equation for <H, a, b>, with the three-point side split instead */
			std::vector<Insertion> three{hyp, ins[0], ins[1]};
			Rational s = split(d, three, 1);
			for (size_t j = 0; j < 2; ++j) {
				if (ins[j].hyper)
					continue;
				auto t = ins;
				t[j] = Insertion{ins[j].tau - 1, true};
				s -= eval(d, t);
			}
			return s / d;
		}
		if (n == 3) {
			for (size_t i = 0; i < ins.size(); ++i)
				if (ins[i].tau >= 1)
					return split(d, ins, i);
		}
		unsupported(d, ins);
	}

	std::map<std::pair<int, std::vector<Insertion>>, Rational> memo_;
};

}  // namespace

Rational correlator_via_axioms(const CorrelatorKey& k)
{
	static std::mutex lock;
	static AxiomEngine engine;
	if (k.degree > 2 || k.insertions.size() > 3)
		throw std::domain_error("axiom route covers degree <= 2 and at most three insertions");
	std::lock_guard<std::mutex> guard(lock);
	return engine.eval(k.degree, k.insertions);
}

std::vector<CorrelatorKey> two_point_keys()
{
	const char* rows[] = {"tau4(1),tau0(1)", "tau0(1),tau4(1)", "tau3(H),tau0(1)", "tau0(1),tau3(H)",
	                      "tau3(1),tau0(H)", "tau0(H),tau3(1)", "tau3(1),tau1(1)", "tau1(1),tau3(1)",
	                      "tau2(H),tau1(1)", "tau1(1),tau2(H)", "tau2(H),tau0(H)", "tau0(H),tau2(H)",
	                      "tau2(1),tau2(1)", "tau2(1),tau1(H)", "tau1(H),tau2(1)", "tau1(H),tau1(H)"};
	std::vector<CorrelatorKey> out;
	for (const char* r : rows)
		out.push_back(CorrelatorKey::parse(r, 2));
	return out;
}

std::vector<CorrelatorRow> cross_check_all()
{
	std::vector<CorrelatorRow> rows;
	for (const auto& k : two_point_keys()) {
		CorrelatorRow r{k, correlator_via_ring(k), correlator_via_axioms(k), false};
		r.agree = r.ring == r.axioms;
		if (!r.agree)
			throw std::logic_error("routes disagree on " + k.to_string() + ": ring " + to_string(r.ring) +
			                       ", axioms " + to_string(r.axioms));
		if (correlator_via_ring(k.swapped()) != r.ring)
			throw std::logic_error("swap symmetry fails on " + k.to_string());
		rows.push_back(std::move(r));
	}
	return rows;
}

std::string correlators_to_json(const std::vector<CorrelatorRow>& rows, const std::string& method)
{
	nlohmann::ordered_json j = nlohmann::ordered_json::object();
	for (const auto& r : rows) {
		if (method == "ring")
			j[r.key.to_string()] = to_string(r.ring);
		else if (method == "axioms")
			j[r.key.to_string()] = to_string(r.axioms);
		else
			j[r.key.to_string()] = {{"ring", to_string(r.ring)}, {"axioms", to_string(r.axioms)}, {"agree", r.agree}};
	}
	return j.dump(2);
}

}  // namespace smap
