// Formal series prefixes, rays, truncated evaluation and the weight
// transform w_f(n) = sup_x x^n |f(x) - S_n(x)| that measures how close a
// function sits to a formal series.

#ifndef ASX_SERIES_HPP_
#define ASX_SERIES_HPP_

#include <functional>
#include <map>
#include <vector>

#include "asx/bigcomplex.hpp"

namespace asx
{
	// Finite prefix s_0..s_N of a formal series sum_k s_k x^{-k}.
	class CoeffSeq
	{
	public:
		CoeffSeq() = default;
		explicit CoeffSeq(std::vector<BigComplex> coeffs) : _c(std::move(coeffs)) { }

		static CoeffSeq constant(long v, std::size_t n_plus_1, Precision prec = 0)
		{
			return CoeffSeq(std::vector<BigComplex>(n_plus_1, BigComplex(v, prec)));
		}

		std::size_t size() const { return _c.size(); }
		long order() const { return static_cast<long>(_c.size()) - 1; } // N

		const BigComplex& operator[](std::size_t k) const
		{
			if (k >= _c.size())
				throw RangeError("coefficient index " + std::to_string(k) + " beyond series order");
			return _c[k];
		}

		const std::vector<BigComplex>& coeffs() const { return _c; }
		void push_back(BigComplex v) { _c.push_back(std::move(v)); }

	private:
		std::vector<BigComplex> _c;
	};

	// The ray R_theta = { x : e^{-i theta} x > x0 }, x0 > 0.
	struct Ray
	{
		BigReal theta; // radians in (-pi, pi]
		BigReal x0;

		Ray() : theta(0l), x0(1l) { }
		Ray(BigReal th, BigReal x0_) : theta(std::move(th)), x0(std::move(x0_))
		{
			if (!(x0 > BigReal(0l)))
				throw DomainError("ray requires x0 > 0");
		}

		BigComplex point(const BigReal& radius) const
		{
			return polar(radius, theta);
		}
	};

	using Sampler = std::function<BigComplex(const BigComplex&)>;

	// Partial sum sum_{k=0}^{n-1} s_k x^{-k}, evaluated Horner-style in 1/x.
	// n = 0 is the empty sum.
	BigComplex eval_truncated(const CoeffSeq& seq, const BigComplex& x, std::size_t n);

	// Geometric radii x0 * factor^i, i = 1..count (strictly beyond x0).
	std::vector<BigReal> geometric_grid(const BigReal& x0, const BigReal& factor, std::size_t count);

	// Grid maximum of |x|^n |f(x) - S_n(x)| over the given radii on the ray;
	// a lower bound for the supremum w_f(n), monotone under grid refinement.
	BigReal weight_transform(const Sampler& f, const CoeffSeq& seq, const Ray& ray,
	                         std::size_t n, const std::vector<BigReal>& grid);

	// Sampled weight profile n -> w(n) plus the constants of the optimal
	// weight law it is compared against.
	struct WeightProfile
	{
		std::map<std::size_t, BigReal> samples;
		BigReal A;      // a_* |R| on the Stokes line, 0 otherwise
		BigReal B;      // additive constant, "large enough"
		BigReal a_star; // the universal constant used to build A
		bool grid_lower_bound = true; // samples are grid maxima, not true sups
	};

	WeightProfile weight_profile(const Sampler& f, const CoeffSeq& seq, const Ray& ray,
	                             std::size_t n_max, const std::vector<BigReal>& grid,
	                             const BigReal& A, const BigReal& B);
}

#endif
