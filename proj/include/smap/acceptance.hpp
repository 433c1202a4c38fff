#pragma once

#include <string>
#include <vector>

namespace smap {

struct CriterionResult {
	int id = 0;
	std::string name;
	bool pass = false;
	std::string detail;
};

/* criteria 1..9; an exception inside a criterion is recorded as a failure */
std::vector<CriterionResult> run_acceptance();

/* "criterion 3 [euler classes]: PASS (16 expressions at 2 specializations)" */
std::string format_result(const CriterionResult& r);

}  // namespace smap
