#include "smap/rational.hpp"

#include <stdexcept>

namespace smap {

std::string to_string(const Rational& x)
{
	return x.get_str();
}

Rational parse_rational(const std::string& s)
{
	std::string t;
	for (char c : s)
		if (c != ' ')
			t.push_back(c);
	if (t.empty())
		throw std::invalid_argument("empty rational");
	size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
	bool slash = false;
	bool digits = false;
	for (size_t i = start; i < t.size(); ++i) {
		if (t[i] == '/') {
			if (slash || !digits)
				throw std::invalid_argument("bad rational: " + s);
			slash = true;
			digits = false;
		} else if (t[i] >= '0' && t[i] <= '9') {
			digits = true;
		} else {
			throw std::invalid_argument("bad rational: " + s);
		}
	}
	if (!digits)
		throw std::invalid_argument("bad rational: " + s);
	if (t[0] == '+')
		t.erase(0, 1);
	Rational x;
	x.set_str(t, 10);
	if (x.get_den() == 0)
		throw std::invalid_argument("zero denominator: " + s);
	x.canonicalize();
	return x;
}

Rational binomial(long n, long k)
{
	if (k < 0 || n < 0 || k > n)
		return 0;
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return Rational(r);
}

Rational ratio(long p, long q)
{
	if (q == 0)
		throw std::invalid_argument("zero denominator");
	Rational x(p, q);
	x.canonicalize();
	return x;
}

}  // namespace smap
