// Formal series solutions from the coefficient recurrences, factorial-growth
// fitting of their coefficients, and the inverse direction: reconstructing a
// canonical equation from a series that solves it.

#ifndef ASX_FORMAL_HPP_
#define ASX_FORMAL_HPP_

#include <vector>

#include "asx/problems.hpp"

namespace asx
{
	// Rule used to place the least-term index n_x.
	enum class LeastTermRule
	{
		DigammaRoot,    // solve psi(s + rho) = ln|x alpha| (factorial growth)
		FloorAbsXDelta, // the generic transseries rule n_x = [|x Delta|]
	};

	// Fitted model of factorially divergent coefficients:
	//   s_n ~ (R + sum_m R_m n^-m) alpha^{-n} Gamma(n + r)
	struct GrowthModel
	{
		BigComplex R;
		std::vector<BigComplex> R_m;
		BigComplex alpha_or_Delta;
		BigComplex r;
		BigReal rho;   // Re r
		BigReal gamma; // curvature of G; 1 for factorial growth
		BigReal phi;   // oscillation exponent k^{i phi}; 0 throughout
		std::vector<BigReal> eps_residuals;
		LeastTermRule rule = LeastTermRule::DigammaRoot;

		GrowthModel() : R(0l), alpha_or_Delta(1l), r(0l), rho(0l), gamma(1l), phi(0l) { }

		// Model constructor without a fit (exact parameters known).
		static GrowthModel exact(BigComplex R, BigComplex alpha, BigComplex r);
	};

	// s_0..s_N for a canonical second-order problem by the recurrence
	//   s_n = (1/alpha)(n-1+r+(a1+b2)/n) s_{n-1}
	//         + sum_{j=2}^{n} (1/(n alpha)) ((j-n) a_j + b_{j+1}) s_{n-j}
	// with s_0 = 1, alpha = a_0, r = -a_1.
	CoeffSeq linear_series(const SecondOrderProblem& p, long N);
	std::vector<mpq_class> linear_series_exact(const SecondOrderProblem& p, long N);

	// s_1..s_N (s_0 = 0) for the first-order problem, by
	//   alpha s_k = (k+r-1) s_{k-1} + sum_{J_1} f_{p,i} s_{k_1} ... s_{k_p},
	// J_1 = ordered tuples with i + k_1 + .. + k_p = k and all k_m <= k-2.
	// Returns coefficients indexed 0..N with s_0 = 0; r_out (optional)
	// receives r = f_{1,1} + 2 f_{2,0} s_1.
	CoeffSeq nonlinear_series(const FirstOrderProblem& p, long N, BigComplex* r_out = nullptr);
	std::vector<mpq_class> nonlinear_series_exact(const FirstOrderProblem& p, long N, mpq_class* r_out = nullptr);

	// Airy h-coefficients by the recurrence (j+1) h_{j+1} = (j+1/6)(j+5/6) h_j
	// and by the closed form Gamma(n+5/6) Gamma(n+1/6) / (2 pi Gamma(n+1)),
	// the latter evaluated as an exact rising-factorial product (the 2 pi
	// cancels against Gamma(5/6) Gamma(1/6)). Both exact rationals.
	struct AiryCoeffs
	{
		std::vector<mpq_class> recurrence;
		std::vector<mpq_class> closed_form;
		CoeffSeq recurrence_f;  // same values rounded to working precision
		CoeffSeq closed_form_f;
	};
	AiryCoeffs airy_coeffs(long N);

	// Fits R, R_1..R_M from c_n = s_n alpha^n / Gamma_guard(n + r) by an
	// inverse-power least-squares fit over the tail window [N/2, N].
	GrowthModel fit_growth(const CoeffSeq& seq, const BigComplex& alpha,
	                       const BigComplex& r, unsigned M = 2);

	// Reconstructs canonical a_0..a_J, b_0..b_J from a series with growth
	// model `g` (R != 0 required): a_0 = alpha and a_1 = -r come from the
	// model; the b's follow exactly from the low-order recurrence equations;
	// each a_j (j >= 2) is the extrapolated limit of the exactly deflated
	// tail statistic w_n = u_n / ((j-n) s_{n-j}/s_{n-1}).
	// Internal precision is escalated with the series length to keep the
	// deflation cancellation below the extrapolation error.
	struct Reconstruction
	{
		CoeffSeq a;
		CoeffSeq b;
		std::vector<BigReal> window_disagreement; // per recovered a_j
	};
	Reconstruction reconstruct_equation(const CoeffSeq& seq, const GrowthModel& g, unsigned J);
}

#endif
