// The rational-inhomogeneity decomposition: for psi' + psi = R(x) with R a
// strictly proper rational function there is a unique K with
//   psi(x) = K e^{-x} Ei(x) + H(1/x) + C e^{-x},
// H analytic at infinity. K comes from the Borel-side evaluation
// K = sum_{k,j} R_{k,j} e^{r_j} / (k-1)!, and H from the Laplace
// representation z int_0^inf e^{-t} Rtilde(z t) dt expanded termwise.

#ifndef ASX_DECOMPOSE_HPP_
#define ASX_DECOMPOSE_HPP_

#include "asx/series.hpp"

namespace asx
{
	// R(x) = sum_j sum_k residues[k-1] (x - location)^{-k}
	struct RationalFunction
	{
		struct Pole
		{
			BigComplex location;
			std::vector<BigComplex> residues; // index k-1 for order k
		};
		std::vector<Pole> poles;

		BigComplex eval(const BigComplex& x) const;
		unsigned max_order() const;
		BigReal max_pole_radius() const;

		// At least one pole with a nonzero residue; no pole on the positive
		// real summation ray beyond x0.
		void validate(const BigReal& x0) const;
	};

	struct DecompositionResult
	{
		BigComplex K;
		CoeffSeq H_coeffs; // H(z) = sum_{m>=1} H_coeffs[m] z^m, z = 1/x
		BigComplex C;      // solution-dependent free constant (caller's choice)

		DecompositionResult() : K(0l), C(0l) { }

		BigComplex eval_H(const BigComplex& x) const;
	};

	// K by the Borel-side formula; H by termwise Laplace integration of the
	// entire function Rtilde(t) = (g(t) - K)/(1 - t) to `h_terms` Taylor
	// coefficients; C is not determined by R and defaults to 0.
	DecompositionResult decompose_rational(const RationalFunction& R, std::size_t h_terms = 64);

	// Ratio-test estimate of H's convergence radius in z = 1/x from the
	// computed coefficient prefix (should be >= 1/max_pole_radius).
	BigReal h_radius_estimate(const DecompositionResult& d);

	// Max over the real grid of |psi_ref(x) - (K e^{-x} Ei(x) + H(1/x)
	// + C e^{-x})|, with psi_ref the variation-of-constants solution
	//   psi_ref(x) = int_0^inf e^{-t} R(x - t) dt
	// evaluated by tanh-sinh quadrature: higher-order poles are first
	// reduced to simple ones by integration by parts, real poles take the
	// symmetric principal value, and complex poles get the half-residue
	// contour correction -pi i sign(Im r) e^{r - x} that selects the C = 0
	// representative of the straight-line contour.
	BigReal verify_decomposition(const RationalFunction& R, const DecompositionResult& d,
	                             const std::vector<BigReal>& x_grid);

	// tanh-sinh quadrature of f over [a, b] aiming at `tol` absolute error;
	// PrecisionError if the level cap cannot reach it.
	BigComplex tanh_sinh(const std::function<BigComplex(const BigReal&)>& f,
	                     const BigReal& a, const BigReal& b, const BigReal& tol);
}

#endif
