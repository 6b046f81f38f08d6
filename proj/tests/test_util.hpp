#ifndef ASX_TEST_UTIL_HPP_
#define ASX_TEST_UTIL_HPP_

#include "asx/bigcomplex.hpp"

#include "doctest.h"

namespace asxtest
{
	using asx::BigComplex;
	using asx::BigReal;

	inline BigReal R(const char* s) { return BigReal::parse(s); }
	inline BigReal R(long v) { return BigReal(v); }

	inline void check_close(const BigReal& got, const BigReal& want, const BigReal& tol)
	{
		const BigReal d = abs(got - want);
		if (!(d <= tol))
		{
			CAPTURE(got.str());
			CAPTURE(want.str());
			CAPTURE(d.str(6));
			CHECK(d <= tol);
		}
		else
			CHECK(true);
	}

	inline void check_close(const BigComplex& got, const BigComplex& want, const BigReal& tol)
	{
		const BigReal d = abs(got - want);
		if (!(d <= tol))
		{
			CAPTURE(got.str());
			CAPTURE(want.str());
			CAPTURE(d.str(6));
			CHECK(d <= tol);
		}
		else
			CHECK(true);
	}

	inline void check_rel(const BigComplex& got, const BigComplex& want, const BigReal& reltol)
	{
		check_close(got, want, reltol*abs(want));
	}
}

#endif
