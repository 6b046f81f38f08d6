// Small dense linear algebra and tail-fit helpers shared by the growth
// fitter, the equation reconstructor and the Stokes-constant extrapolator.
// Systems here are tiny (a handful of basis functions), so plain Gaussian
// elimination with partial pivoting on BigComplex is all that is needed.

#ifndef ASX_EXTRAPOLATE_HPP_
#define ASX_EXTRAPOLATE_HPP_

#include <functional>
#include <vector>

#include "asx/bigcomplex.hpp"

namespace asx
{
	using CMatrix = std::vector<std::vector<BigComplex>>;

	// Solves A x = rhs in place; A square.
	std::vector<BigComplex> solve_dense(CMatrix A, std::vector<BigComplex> rhs);

	// Least squares for sum_j coef_j * basis[j](n_i) ~ vals_i via normal
	// equations (condition is harmless at a few hundred bits).
	std::vector<BigComplex> lsq_fit(const std::vector<BigReal>& nodes,
	                                const std::vector<BigComplex>& vals,
	                                const std::vector<std::function<BigComplex(const BigReal&)>>& basis);

	// Least squares in the inverse-power basis {1, 1/n, ..., 1/n^order};
	// returns the coefficients, [0] being the n -> infinity limit.
	std::vector<BigComplex> inverse_power_fit(const std::vector<BigReal>& nodes,
	                                          const std::vector<BigComplex>& vals,
	                                          unsigned order);

	// Least squares with explicit data columns: minimizes
	// || rhs - sum_j x_j columns[j] ||_2. Columns are scaled to unit max
	// before the normal-equation solve and unscaled afterwards.
	std::vector<BigComplex> lsq_columns(const std::vector<std::vector<BigComplex>>& columns,
	                                    const std::vector<BigComplex>& rhs);

	// Polynomial extrapolation of (node, value) pairs to node -> 0
	// (Neville scheme). Nodes must be distinct.
	BigComplex neville_to_zero(const std::vector<BigReal>& nodes,
	                           const std::vector<BigComplex>& vals);
}

#endif
