#ifndef ASX_ERROR_HPP_
#define ASX_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace asx
{
	// Base of all library errors. `code()` is a stable machine-readable
	// identifier used by the CLI when mapping errors to exit status / JSON.
	class Error : public std::runtime_error
	{
	public:
		Error(std::string code, const std::string& msg)
			: std::runtime_error(msg), _code(std::move(code)) { }

		const std::string& code() const noexcept { return _code; }

	private:
		std::string _code;
	};

	#define ASX_DEFINE_ERROR(NAME, CODE) \
		class NAME : public Error \
		{ \
		public: \
			explicit NAME(const std::string& msg) : Error(CODE, msg) { } \
		}

	ASX_DEFINE_ERROR(DomainError,          "domain");
	ASX_DEFINE_ERROR(RangeError,           "range");
	ASX_DEFINE_ERROR(PoleError,            "pole");
	ASX_DEFINE_ERROR(BranchError,          "branch");
	ASX_DEFINE_ERROR(PrecisionError,       "precision");
	ASX_DEFINE_ERROR(DegenerateRootsError, "degenerate_roots");
	ASX_DEFINE_ERROR(DivergentFitError,    "divergent_fit");
	ASX_DEFINE_ERROR(IllConditionedError,  "ill_conditioned");
	ASX_DEFINE_ERROR(TooSmallError,        "too_small");
	ASX_DEFINE_ERROR(NonConvergenceError,  "non_convergence");
	ASX_DEFINE_ERROR(PoleOnRayError,       "pole_on_ray");
	ASX_DEFINE_ERROR(SchemaError,          "schema");
	ASX_DEFINE_ERROR(IoError,              "io");

	#undef ASX_DEFINE_ERROR
}

#endif
