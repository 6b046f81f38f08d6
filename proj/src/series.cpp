#include "asx/series.hpp"

#include "asx/dawson.hpp"

namespace asx
{
	BigComplex eval_truncated(const CoeffSeq& seq, const BigComplex& x, std::size_t n)
	{
		if (n > seq.size())
			throw RangeError("eval_truncated: requested " + std::to_string(n) +
			                 " terms, series has " + std::to_string(seq.size()));
		if (x.is_zero())
			throw DomainError("eval_truncated: x = 0");
		if (n == 0)
			return BigComplex(0l, x.precision());

		const BigComplex u = BigComplex(1l, x.precision()) / x;
		BigComplex acc = seq[n - 1];
		for (std::size_t k = n - 1; k-- > 0; )
			acc = acc*u + seq[k];
		return acc;
	}

	std::vector<BigReal> geometric_grid(const BigReal& x0, const BigReal& factor, std::size_t count)
	{
		if (!(factor > BigReal(1l)))
			throw DomainError("geometric_grid: factor must exceed 1");
		std::vector<BigReal> g;
		g.reserve(count);
		BigReal r = x0;
		for (std::size_t i = 0; i < count; ++i)
		{
			r = r*factor;
			g.push_back(r);
		}
		return g;
	}

	BigReal weight_transform(const Sampler& f, const CoeffSeq& seq, const Ray& ray,
	                         std::size_t n, const std::vector<BigReal>& grid)
	{
		if (grid.empty())
			throw DomainError("weight_transform: empty grid");
		BigReal best(0l);
		for (const BigReal& radius : grid)
		{
			if (!(radius > ray.x0))
				throw DomainError("weight_transform: grid point not beyond x0");
			// the x^n amplification digs e^{-|x|} under the partial sums
			// for factorially divergent series; escalate accordingly
			const Precision p_esc = radius.precision() + 64
				+ static_cast<Precision>(1.4427*radius.to_double() + 1.0);
			const BigComplex x = polar(radius.round_to(p_esc), ray.theta.round_to(p_esc));
			const BigReal err = abs(f(x) - eval_truncated(seq, x, n));
			const BigReal w = (pow(radius.round_to(p_esc), static_cast<long>(n))*err)
				.round_to(radius.precision());
			if (w > best)
				best = w;
		}
		return best;
	}

	WeightProfile weight_profile(const Sampler& f, const CoeffSeq& seq, const Ray& ray,
	                             std::size_t n_max, const std::vector<BigReal>& grid,
	                             const BigReal& A, const BigReal& B)
	{
		WeightProfile p;
		p.A = A;
		p.B = B;
		p.a_star = a_star();
		for (std::size_t n = 1; n <= n_max; ++n)
			p.samples[n] = weight_transform(f, seq, ray, n, grid);
		return p;
	}
}
