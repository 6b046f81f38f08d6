// Problem schemas for the two equation classes, canonicalization of
// second-order problems, and validation of the Gevrey-type coefficient
// hypotheses the uniqueness results require.

#ifndef ASX_PROBLEMS_HPP_
#define ASX_PROBLEMS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "asx/series.hpp"

namespace asx
{
	// y'' + a(x) y' + b(x) y = 0 on a ray, with a, b given by asymptotic
	// series (and optionally closed forms). When `coeffs_entire` is set the
	// finite coefficient lists ARE the functions (polynomials in 1/x) and
	// missing higher coefficients are exactly zero; otherwise reading past
	// the stored order is a RangeError.
	struct SecondOrderProblem
	{
		CoeffSeq a;
		CoeffSeq b;
		std::vector<mpq_class> a_rat; // optional exact coefficients
		std::vector<mpq_class> b_rat;
		bool coeffs_entire = true;
		BigReal kappa;
		Ray ray;
		Sampler a_closed; // optional
		Sampler b_closed;

		SecondOrderProblem() : kappa(BigReal(mpq_class(1, 2))) { }

		bool exact_rational() const { return !a_rat.empty(); }

		static SecondOrderProblem from_rational(std::vector<mpq_class> a,
		                                        std::vector<mpq_class> b,
		                                        BigReal kappa, Ray ray);

		// Invariants: distinct characteristic roots and
		// kappa < |a0^2 - 4 b0|^{-1/2}.
		void validate() const;
	};

	// y' = sum_{p=0}^P F_p(x) y^p with f_{0,0} = 0 and alpha = -f_{1,0} != 0.
	struct FirstOrderProblem
	{
		unsigned P = 1;
		std::vector<CoeffSeq> f; // f[p] = coefficients of F_p
		std::vector<std::vector<mpq_class>> f_rat;
		bool coeffs_entire = true;
		BigReal C_F;
		BigReal kappa;
		Ray ray;

		FirstOrderProblem() : C_F(1l), kappa(BigReal(mpq_class(1, 2))) { }

		bool exact_rational() const { return !f_rat.empty(); }

		BigComplex alpha() const;

		static FirstOrderProblem from_rational(std::vector<std::vector<mpq_class>> f,
		                                       BigReal C_F, BigReal kappa, Ray ray);

		// Invariants: f_{0,0} = 0, alpha != 0, kappa < |alpha|^{-1},
		// arg(x alpha) in (-pi/2, pi/2) on the ray.
		void validate() const;
	};

	// Record of y(x) = exp(lambda1 x) x^{r1} u(x), x = scale * x_new.
	struct CanonicalTransform
	{
		BigComplex lambda1; // the peeled root (the series-1 exponent)
		BigComplex lambda2;
		BigComplex r1;
		BigComplex r2;
		BigComplex Delta;   // lambda2 - lambda1
		BigComplex scale;   // e^{i theta} |Delta|^{-1}
		bool identity = false;
		bool truncation_flagged = false; // output order capped by input length
	};

	// Roots of lambda^2 + a0 lambda + b0, ordered lexicographically by
	// (Re, Im). Degenerate (equal) roots are an error: no terms beyond all
	// orders exist in that case.
	std::pair<BigComplex, BigComplex> characteristic_roots(const BigComplex& a0, const BigComplex& b0);

	// r_i = -(a1 lambda + b1) / (a0 + 2 lambda)
	BigComplex formal_exponents(const BigComplex& a0, const BigComplex& a1,
	                            const BigComplex& b1, const BigComplex& lambda);

	// Brings a problem to the normal form theta = 0, lambda1 = 0, |a0| = 1,
	// r1 = 0, b0 = b1 = 0 by y = exp(lambda1 x) x^{r1} u followed by the
	// rescaling x = e^{i theta} |Delta|^{-1} x_new. The peeled root is
	// chosen dominant on the ray (max Re(e^{i theta} lambda); ties resolved
	// toward Im(e^{i theta} (lambda1 - lambda2)) > 0), which reproduces the
	// worked Airy chain and keeps canonical problems fixed points.
	std::pair<SecondOrderProblem, CanonicalTransform> canonicalize(const SecondOrderProblem& p);

	struct GevreyReport
	{
		struct Entry
		{
			std::size_t n;
			BigReal ratio; // |coeff_n| / (kappa^n n!)
		};
		std::vector<Entry> coeff_ratios; // max over coefficient families
		BigReal bound_constant;          // the reported common bound
		bool pass = false;
		// When closed forms exist: grid check of the remainder inequality
		// |f(x) - S_n(x)| < const kappa^n n! |x|^{-n}; max ratio observed.
		std::optional<BigReal> remainder_constant;

		GevreyReport() : bound_constant(0l) { }
	};

	GevreyReport validate_gevrey(const SecondOrderProblem& p, std::size_t n_max);
	GevreyReport validate_gevrey(const FirstOrderProblem& p, std::size_t n_max);

	// The Airy substitution chain y(x) = exp(2/3 x^{3/2}) g, x = s^{2/3},
	// g = s^{-1/6} h, s = (3/4) t, ending at h'' + h' + 5/(36 t^2) h = 0.
	struct AiryChain
	{
		SecondOrderProblem h_equation;
		SecondOrderProblem aiges; // the intermediate g-equation
		CanonicalTransform aiges_to_h;

		// t-domain <-> Airy-variable maps for the recessive solution:
		// 2 sqrt(pi) x^{1/4} e^{t/2} Ai(x) = sum_k (-1)^k h_k t^{-k},
		// with x = (3 t / 4)^{2/3} and t = (4/3) x^{3/2}.
		BigComplex airy_x_of_t(const BigComplex& t) const;
		BigComplex t_of_airy_x(const BigComplex& x) const;

		// Coefficient map between the h-series in t and the series in
		// x^{-3k/2}: f_k = (3/4)^k h_k.
		mpq_class series_coeff_factor(unsigned long k) const;
	};

	AiryChain airy_chain();
}

#endif
