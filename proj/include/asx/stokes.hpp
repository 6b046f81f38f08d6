// Reference special functions, rescaled remainder sequences E_n, extraction
// of the constant beyond all orders along rays, and the phi-ODE route to
// the universal constant a_*.

#ifndef ASX_STOKES_HPP_
#define ASX_STOKES_HPP_

#include "asx/formal.hpp"

namespace asx
{
	// e^{-x} Ei(x) with Ei the principal-value exponential integral,
	// analytically continued as gamma_E + Log(x) + sum_k x^k/(k k!) with the
	// principal logarithm. This single branch realizes all three constants
	// of the Ei Stokes table (0 on the axis, +/- pi i off it). Internal
	// precision is escalated by 2|x|/ln 2 bits against the e^{|x|}
	// cancellation of the convergent series.
	BigComplex ref_ei(const BigComplex& x);

	// Ai(x) from its everywhere-convergent Maclaurin series; escalation is
	// proportional to |x|^{3/2}. PrecisionError beyond the escalation cap.
	BigComplex ref_airy(const BigComplex& x);

	// E_n(x) = (f(x) - sum_{k=0}^{n} s_k x^{-k}) / (x^r e^{-alpha x}) for n
	// in [n_lo, n_hi]: the remainder rescaled to the recessive exponential's
	// unit, the quantity whose limit is the Stokes constant.
	std::vector<BigComplex> remainder_seq(const Sampler& f, const CoeffSeq& seq,
	                                      const GrowthModel& g, const BigComplex& x,
	                                      long n_lo, long n_hi);

	struct StokesReport
	{
		Ray ray;
		BigComplex C;
		std::vector<std::pair<BigComplex, BigComplex>> samples; // (x, E_{n_x}(x))
		BigReal convergence_rate; // mean log-residual slope of the fit basis

		StokesReport() : C(0l), convergence_rate(0l) { }
	};

	// C = lim E_{n_x}(x) along the schedule of radii. On the axis the decay
	// is polynomial in n^{-1/2} and a {1, u, u^3, u^5} fit (u = n^{-1/2})
	// extrapolates it; off the axis the known leading factor
	// g_n = sqrt(2 pi/n) (1-e^{-i theta})^{-1} exp(n(e^{i theta}-1) - i(n+1) theta)
	// is used as a fit basis {1, g, g/n, g/n^2}. Two tail windows must
	// agree within `tol`, else NonConvergenceError.
	StokesReport stokes_constant(const Sampler& f, const CoeffSeq& seq, const GrowthModel& g,
	                             const Ray& ray, const std::vector<BigReal>& x_schedule,
	                             const BigReal& tol = BigReal(1e-4));

	// Max over s >= 0 of |phi(s)| for phi' + s phi/(1 + s/sqrt(n)) = 1,
	// phi(0) = 0, by classical RK4 with a step-halving check. As n grows the
	// value approaches a_* (the limit profile is the rescaled Dawson peak).
	BigReal phi_profile(const BigReal& n);
}

#endif
