// The acceptance suite: ten numbered criteria with pinned tolerances,
// shared by the `acceptance` test binary and the CLI `verify` subcommand.

#ifndef ASX_ACCEPTANCE_HPP_
#define ASX_ACCEPTANCE_HPP_

#include <functional>
#include <string>
#include <vector>

namespace asx
{
	struct CriterionResult
	{
		int id = 0;
		std::string name;
		bool pass = false;
		std::string detail;
		double seconds = 0.0;
	};

	// Runs the requested criteria (all ten when `which` is empty); invokes
	// `on_done` after each one. Returns all results.
	std::vector<CriterionResult> run_acceptance(const std::vector<int>& which = {},
	                                            const std::function<void(const CriterionResult&)>& on_done = {});
}

#endif
