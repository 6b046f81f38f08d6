// Dawson's function D(x) = e^{-x^2} int_0^x e^{t^2} dt and the universal
// constant a_* = sqrt(2) max_{x>=0} D(x).

#ifndef ASX_DAWSON_HPP_
#define ASX_DAWSON_HPP_

#include "asx/bigreal.hpp"

namespace asx
{
	// Maclaurin series D(x) = sum_k (-2)^k x^{2k+1} / (1*3*5*...*(2k+1)),
	// convergent everywhere. For x beyond ~1.5 the alternating terms grow to
	// ~e^{x^2} before decaying, so the working precision is escalated by
	// 2 x^2 / ln 2 bits to absorb the cancellation.
	BigReal dawson(const BigReal& x);

	// Location of the maximum of D on [0, 1.5]: the root of 1 - 2 x D(x) = 0,
	// found by golden-section search to 1e-12 in x (then the value is
	// insensitive to the residual location error to second order).
	BigReal dawson_max_location(Precision prec = 0);

	// a_* = sqrt(2) * D(x_star) = 0.76515208...
	BigReal a_star(Precision prec = 0);
}

#endif
