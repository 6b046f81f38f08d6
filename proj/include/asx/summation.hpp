// Least-term truncation, the optimal-weight law of the uniqueness theorems,
// the brute-force sup statistic behind the factorial-growth estimates, and
// the eta-optimality check of the fundamental inequality.

#ifndef ASX_SUMMATION_HPP_
#define ASX_SUMMATION_HPP_

#include "asx/formal.hpp"

namespace asx
{
	// Least-term truncation order n_x = [s_x], where s_x solves
	// G'(s) = ln|x|. For factorial growth (G = ln Gamma(s + rho) - s ln|alpha|)
	// s_x is the digamma root psi(s + rho) = ln|x alpha|; the transseries
	// rule takes n_x = [|x Delta|] directly.
	long least_term_index(const GrowthModel& g, const BigComplex& x);

	// Continuous least-term location s_x (digamma root), exposed for the
	// flanking-index law.
	BigReal least_term_location(const GrowthModel& g, const BigComplex& x);

	// The two orders n_+- = [s_x +- (1/a_*) sqrt(s_x / gamma)] flanking the
	// least term, where the normalized remainder sup is attained. (The
	// factor sqrt(s_x/gamma) follows from the width 1/sqrt(G''(s_x)) of the
	// term-size minimum, G'' ~ gamma/s; x* sqrt(2) = 1/a_* by the Dawson
	// stationarity 2 x* D(x*) = 1.)
	std::pair<long, long> flanking_indices(const GrowthModel& g, const BigComplex& x);
	std::pair<long, long> flanking_from_location(const BigReal& s_x, const BigReal& gamma);

	// Is the companion exponential recessive with real-positive decay rate
	// on this ray? (e^{i theta}(lambda1 - lambda2) in R+, equivalently
	// e^{i theta} alpha in R+ for the first-order case.) The imaginary part
	// is compared against 2^{-p/2} so near-Stokes rays classify explicitly.
	bool on_stokes_line(const BigComplex& alpha_or_minus_delta, const BigReal& theta);

	// w(k) = |C| (A sqrt(k) + B) Gamma_guard(k + rho) |Delta|^{-k}, with
	// A = a_* |R| on the Stokes line and A = 0 otherwise. `rho` is the
	// model's signed exponent difference for this component.
	BigReal optimal_weight(const GrowthModel& g, const BigComplex& C, bool on_stokes,
	                       const BigReal& B, long k);

	// Off-axis weight constant a(theta) = (1 + 1/|sin(theta/2)|)/2 for
	// theta != 0 (incommensurate formula; for rational multiples of pi the
	// true constant is marginally smaller, which this artifact does not
	// refine). theta = 0 is a DomainError: on the axis the sqrt(n) law of
	// optimal_weight applies instead.
	BigReal a_theta(const BigReal& theta);

	// Brute-force evaluation of
	//   sup_K (K + k0)^{-1/2} |x|^K e^{-G(K)} | sum_{j=n_x}^K c_j x^{-j} |
	// with e^{G(K)} = |c_K|, the signed-sum convention
	// sum_{j=n}^{k} = -sum_{j=k}^{n} for n > k, and the (K+k0)^{-1/2}
	// normalization dropped off-axis (theta != 0).
	struct SupStatistic
	{
		BigReal value;
		long argmax_K = 0;
		long n_x = 0;
	};
	SupStatistic sup_statistic(const CoeffSeq& seq, const BigComplex& x, long k0,
	                           const BigReal& theta);

	// Truncation to the least term: value = sum_{k=0}^{n_x} s_k x^{-k} and
	// the weight-law bound w(n_x) |x|^{-n_x}.
	struct LeastTermSum
	{
		BigComplex value;
		BigReal bound;
		long n_x = 0;
	};
	LeastTermSum sum_least_term(const CoeffSeq& seq, const GrowthModel& g,
	                            const BigComplex& x, const BigReal& B = BigReal(10l));

	// Smallest eta such that
	//   |f(x) - sum_{j<=n} c_j x^{-j}| < eta a_* gamma^{-1/2} (sqrt(n)+B)
	//                                     |c_{n+1}| |x|^{-n-1}
	// over the grid and n = 1..n_max. Grid maximum, hence a lower bound for
	// the true eta (which the theory pins at >= 1).
	BigReal eta_check(const Sampler& f, const CoeffSeq& seq, const GrowthModel& g,
	                  const Ray& ray, const BigReal& B, long n_max,
	                  const std::vector<BigReal>& grid);
}

#endif
