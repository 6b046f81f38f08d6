// Acceptance gate: one pass/fail line per criterion; nonzero exit when any
// criterion fails.

#include "asx/acceptance.hpp"

#include <cstdio>

int main()
{
	bool all = true;
	auto results = asx::run_acceptance({}, [&](const asx::CriterionResult& r) {
		std::printf("%s criterion %2d  %-42s (%.2fs)  %s\n",
		            r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds, r.detail.c_str());
		std::fflush(stdout);
		all = all && r.pass;
	});
	if (results.size() != 10)
	{
		std::printf("FAIL: expected 10 criteria, ran %zu\n", results.size());
		return 1;
	}
	return all ? 0 : 1;
}
