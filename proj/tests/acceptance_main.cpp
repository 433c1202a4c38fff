#include "smap/acceptance.hpp"

#include <iostream>

int main()
{
	bool ok = true;
	for (const auto& r : smap::run_acceptance()) {
		std::cout << smap::format_result(r) << "\n";
		ok = ok && r.pass;
	}
	return ok ? 0 : 1;
}
