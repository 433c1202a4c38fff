#include "smap/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace smap {

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const
{
	int da = std::accumulate(a.begin(), a.end(), 0);
	int db = std::accumulate(b.begin(), b.end(), 0);
	if (da != db)
		return da > db;
	return a > b;
}

static void fill_monomials(size_t n, int k, size_t i, Exponents& cur, std::vector<Exponents>& out)
{
	if (i + 1 == n) {
		cur[i] = k;
		out.push_back(cur);
		return;
	}
	for (int e = k; e >= 0; --e) {
		cur[i] = e;
		fill_monomials(n, k - e, i + 1, cur, out);
	}
	cur[i] = 0;
}

std::vector<Exponents> monomials_of_degree(size_t n, int k)
{
	std::vector<Exponents> out;
	if (k < 0)
		return out;
	if (n == 0) {
		if (k == 0)
			out.emplace_back();
		return out;
	}
	Exponents cur(n, 0);
	fill_monomials(n, k, 0, cur, out);
	return out;
}

MultiPoly::MultiPoly(std::vector<std::string> vars)
	: vars_(std::move(vars)), degrees_(vars_.size(), 1)
{
}

MultiPoly::MultiPoly(std::vector<std::string> vars, std::vector<int> degrees)
	: vars_(std::move(vars)), degrees_(std::move(degrees))
{
	if (degrees_.size() != vars_.size())
		throw std::invalid_argument("degree list does not match variable list");
}

MultiPoly MultiPoly::constant(const std::vector<std::string>& vars, const Rational& c)
{
	MultiPoly p(vars);
	p.add_term(Exponents(vars.size(), 0), c);
	return p;
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, const std::string& name)
{
	MultiPoly p(vars);
	Exponents e(vars.size(), 0);
	for (size_t i = 0; i < vars.size(); ++i) {
		if (vars[i] == name) {
			e[i] = 1;
			p.add_term(e, 1);
			return p;
		}
	}
	throw std::invalid_argument("unknown variable " + name);
}

MultiPoly MultiPoly::monomial(const std::vector<std::string>& vars, const Exponents& e,
                              const Rational& c)
{
	MultiPoly p(vars);
	p.add_term(e, c);
	return p;
}

void MultiPoly::check_compatible(const MultiPoly& o) const
{
	if (vars_ != o.vars_)
		throw std::invalid_argument("mismatched variable lists");
}

Rational MultiPoly::coeff(const Exponents& e) const
{
	auto it = terms_.find(e);
	return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c)
{
	if (e.size() != vars_.size())
		throw std::invalid_argument("exponent vector has wrong length");
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(e, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

int MultiPoly::monomial_degree(const Exponents& e) const
{
	int d = 0;
	for (size_t i = 0; i < e.size(); ++i)
		d += e[i] * degrees_[i];
	return d;
}

int MultiPoly::degree() const
{
	int d = -1;
	for (const auto& [e, c] : terms_)
		d = std::max(d, monomial_degree(e));
	return d;
}

bool MultiPoly::is_homogeneous() const
{
	int d = -1;
	for (const auto& [e, c] : terms_) {
		int k = monomial_degree(e);
		if (d >= 0 && k != d)
			return false;
		d = k;
	}
	return true;
}

MultiPoly MultiPoly::part(int k) const
{
	MultiPoly r(vars_, degrees_);
	for (const auto& [e, c] : terms_)
		if (monomial_degree(e) == k)
			r.terms_.emplace(e, c);
	return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
	check_compatible(o);
	for (const auto& [e, c] : o.terms_)
		add_term(e, c);
	return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
	check_compatible(o);
	for (const auto& [e, c] : o.terms_)
		add_term(e, -c);
	return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto& [e, v] : terms_)
		v *= c;
	return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
	a.check_compatible(b);
	MultiPoly r(a.vars_, a.degrees_);
	Exponents e(a.vars_.size());
	for (const auto& [ea, ca] : a.terms_) {
		for (const auto& [eb, cb] : b.terms_) {
			for (size_t i = 0; i < e.size(); ++i)
				e[i] = ea[i] + eb[i];
			r.add_term(e, ca * cb);
		}
	}
	return r;
}

MultiPoly MultiPoly::operator-() const
{
	MultiPoly r = *this;
	for (auto& [e, c] : r.terms_)
		c = -c;
	return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b)
{
	return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(int e) const
{
	if (e < 0)
		throw std::invalid_argument("negative power");
	MultiPoly r = constant(vars_, 1);
	r.degrees_ = degrees_;
	MultiPoly base = *this;
	while (e > 0) {
		if (e & 1)
			r = r * base;
		e >>= 1;
		if (e)
			base = base * base;
	}
	return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const
{
	if (images.size() != vars_.size())
		throw std::invalid_argument("substitution needs one image per generator");
	if (images.empty())
		return *this;
	const auto& target = images[0].vars();
	for (const auto& im : images)
		if (im.vars() != target)
			throw std::invalid_argument("substitution images use different variable lists");
	MultiPoly r(target, images[0].degrees());
	for (const auto& [e, c] : terms_) {
		MultiPoly t = constant(target, c);
		t.degrees_ = images[0].degrees();
		for (size_t i = 0; i < e.size(); ++i)
			if (e[i])
				t = t * images[i].pow(e[i]);
		r += t;
	}
	return r;
}

std::string MultiPoly::monomial_string(const Exponents& e) const
{
	std::string s;
	for (size_t i = 0; i < e.size(); ++i) {
		if (!e[i])
			continue;
		if (!s.empty())
			s += '*';
		s += vars_[i];
		if (e[i] > 1)
			s += '^' + std::to_string(e[i]);
	}
	return s.empty() ? "1" : s;
}

Exponents MultiPoly::parse_monomial(const std::string& s) const
{
	Exponents e(vars_.size(), 0);
	if (s == "1")
		return e;
	std::stringstream ss(s);
	std::string factor;
	while (std::getline(ss, factor, '*')) {
		std::string name = factor;
		int power = 1;
		auto caret = factor.find('^');
		if (caret != std::string::npos) {
			name = factor.substr(0, caret);
			try {
				power = std::stoi(factor.substr(caret + 1));
			} catch (const std::exception&) {
				throw std::invalid_argument("bad exponent in monomial " + s);
			}
			if (power < 0)
				throw std::invalid_argument("negative exponent in monomial " + s);
		}
		size_t i = 0;
		while (i < vars_.size() && vars_[i] != name)
			++i;
		if (i == vars_.size())
			throw std::invalid_argument("unknown generator " + name + " in monomial " + s);
		e[i] += power;
	}
	return e;
}

std::string MultiPoly::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (const auto& [e, c] : terms_) {
		bool unit = true;
		for (int x : e)
			unit = unit && x == 0;
		Rational a = abs(c);
		if (out.empty()) {
			if (c < 0)
				out += '-';
		} else {
			out += c < 0 ? '-' : '+';
		}
		if (unit) {
			out += smap::to_string(a);
		} else {
			if (a != 1)
				out += smap::to_string(a) + '*';
			out += monomial_string(e);
		}
	}
	return out;
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q)
{
	return p + q;
}

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q)
{
	return p * q;
}

MultiPoly poly_scale(const MultiPoly& p, const Rational& c)
{
	return p * c;
}

namespace {

/* expr := term {(+|-) term}, term := factor {* factor}, factor := atom [^ int],
 * atom := rational | name | ( expr ) | -atom */
class PolyParser {
public:
	PolyParser(const std::vector<std::string>& vars, const std::string& s) : vars_(vars)
	{
		for (char c : s)
			if (!std::isspace(static_cast<unsigned char>(c)))
				src_ += c;
	}

	MultiPoly parse()
	{
		if (src_.empty())
			fail("empty expression");
		MultiPoly p = expr();
		if (pos_ != src_.size())
			fail("trailing input");
		return p;
	}

private:
	[[noreturn]] void fail(const std::string& why) const
	{
		throw std::invalid_argument("cannot parse polynomial '" + src_ + "': " + why);
	}
	bool eat(char c)
	{
		if (pos_ < src_.size() && src_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}
	MultiPoly expr()
	{
		MultiPoly p = term();
		while (pos_ < src_.size()) {
			if (eat('+'))
				p += term();
			else if (eat('-'))
				p -= term();
			else
				break;
		}
		return p;
	}
	MultiPoly term()
	{
		MultiPoly p = factor();
		while (eat('*'))
			p = p * factor();
		return p;
	}
	MultiPoly factor()
	{
		if (eat('-'))
			return -factor();
		MultiPoly p = atom();
		if (eat('^')) {
			size_t start = pos_;
			while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
				++pos_;
			if (start == pos_)
				fail("exponent expected");
			p = p.pow(std::stoi(src_.substr(start, pos_ - start)));
		}
		return p;
	}
	MultiPoly atom()
	{
		if (eat('(')) {
			MultiPoly p = expr();
			if (!eat(')'))
				fail("missing ')'");
			return p;
		}
		size_t start = pos_;
		if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
			while (pos_ < src_.size() &&
			       (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '/'))
				++pos_;
			return MultiPoly::constant(vars_, parse_rational(src_.substr(start, pos_ - start)));
		}
		while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
			++pos_;
		if (start == pos_)
			fail("unexpected character at position " + std::to_string(pos_));
		std::string name = src_.substr(start, pos_ - start);
		if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
			fail("unknown generator " + name);
		return MultiPoly::variable(vars_, name);
	}

	const std::vector<std::string>& vars_;
	std::string src_;
	size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(const std::vector<std::string>& vars, const std::string& s)
{
	return PolyParser(vars, s).parse();
}

}  // namespace smap
