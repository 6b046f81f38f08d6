// Complex gamma function at arbitrary precision.
//
// Method: shift the argument until Re(z) is large enough, then apply the
// Stirling series for log Gamma with exact (rational) Bernoulli numbers:
//
//   log Gamma(z) ~ (z - 1/2) log z - z + log(2 pi)/2
//                  + sum_{k>=1} B_{2k} / (2k(2k-1) z^{2k-1})
//
// The truncation error after the term with B_{2N} is of the order of the
// first omitted term, which for |z| >= R is minimized near N ~ pi R at about
// exp(-2 pi R). Choosing R ~ 0.12 * prec + 16 therefore reaches the target
// precision. Gamma itself is exp(log Gamma); an additive branch ambiguity of
// 2 pi i k in the shifted logarithm cancels under exp, so no branch tracking
// is needed as long as only Gamma values (not log Gamma) leave this module.

#ifndef ASX_GAMMAFN_HPP_
#define ASX_GAMMAFN_HPP_

#include <vector>

#include "asx/bigcomplex.hpp"

namespace asx
{
	// B_0, B_2, B_4, ... as exact rationals (B_1 = -1/2 is not stored).
	// Computed by the Akiyama-Tanigawa style recurrence on demand; the cache
	// only grows and is guarded for concurrent use.
	const std::vector<mpq_class>& bernoulli_even(std::size_t count);

	// Gamma(z) for complex z away from the poles 0, -1, -2, ...
	BigComplex gamma_complex(const BigComplex& z);

	// The paper's guarded Gamma: Gamma(z) when Re(z) > -1, and 1 otherwise.
	// The only pole in the guarded half-plane is z = 0, which is an error.
	BigComplex gamma_guarded(const BigComplex& z);

	// Guarded Gamma for n + r with integer n (the typical call site).
	BigComplex gamma_guarded_shifted(long n, const BigComplex& r);

	// Test oracle: Gauss product Gamma(z) = lim n! n^z / (z (z+1) ... (z+n)),
	// accelerated by Neville extrapolation in 1/n over n = n0, 2 n0, ..,
	// levels * n0. Independent of the Stirling/Bernoulli path (and of
	// reflection and Lanczos schemes). Slow; test use only.
	BigComplex gamma_product_oracle(const BigComplex& z, unsigned long n0, unsigned levels);
}

#endif
