#include "asx/summation.hpp"

#include "asx/dawson.hpp"
#include "asx/gammafn.hpp"

namespace asx
{
	BigReal least_term_location(const GrowthModel& g, const BigComplex& x)
	{
		const BigReal target = log(abs(x)*abs(g.alpha_or_Delta));
		const BigReal two(2l);
		// admissible least terms sit strictly inside the series (n_x >= 2);
		// below exp(psi(2 + rho)) ~ 1.53 the "minimum" is just the first term
		if (!(digamma_real(two + g.rho) < target))
			throw TooSmallError("least_term_location: |x| too small for a least term beyond the first terms");

		// Newton on psi(s + rho) = target from s0 = |x alpha|. MPFR has no
		// trigamma; a central difference at h = 2^{-p/3} gives the slope to
		// far more accuracy than a Newton step needs (psi' > 0, monotone).
		BigReal s = exp(target);
		for (int it = 0; it < 64; ++it)
		{
			const BigReal w = s + g.rho;
			const BigReal fval = digamma_real(w) - target;
			const BigReal h = pow2(-static_cast<long>(w.precision())/3, w.precision());
			const BigReal fp = (digamma_real(w + h) - digamma_real(w - h))/(BigReal(2l)*h);
			const BigReal step = fval/fp;
			s = s - step;
			if (abs(step) < pow2(-static_cast<long>(s.precision())/2))
				break;
		}
		if (!(s > two))
			throw TooSmallError("least_term_location: root s_x <= 2");
		return s;
	}

	long least_term_index(const GrowthModel& g, const BigComplex& x)
	{
		if (g.rule == LeastTermRule::FloorAbsXDelta)
		{
			const long n = floor(abs(x)*abs(g.alpha_or_Delta)).to_long();
			if (n < 1)
				throw TooSmallError("least_term_index: |x Delta| < 1");
			return n;
		}
		return floor(least_term_location(g, x)).to_long();
	}

	std::pair<long, long> flanking_from_location(const BigReal& s_x, const BigReal& gamma)
	{
		const BigReal spread = sqrt(s_x/gamma)/a_star(s_x.precision());
		return {floor(s_x - spread).to_long(), floor(s_x + spread).to_long()};
	}

	std::pair<long, long> flanking_indices(const GrowthModel& g, const BigComplex& x)
	{
		return flanking_from_location(least_term_location(g, x), g.gamma);
	}

	bool on_stokes_line(const BigComplex& alpha_or_minus_delta, const BigReal& theta)
	{
		const BigComplex dir = polar(BigReal(1l), theta)*alpha_or_minus_delta;
		const Precision p = dir.precision();
		const BigReal tol = pow2(-static_cast<long>(p)/2, p)*(abs(dir) + BigReal(1l));
		return dir.re() > BigReal(0l) && abs(dir.im()) <= tol;
	}

	BigReal optimal_weight(const GrowthModel& g, const BigComplex& C, bool on_stokes,
	                       const BigReal& B, long k)
	{
		if (!(B > BigReal(0l)))
			throw DomainError("optimal_weight: B > 0 required");
		if (k < 1)
			throw DomainError("optimal_weight: k >= 1");
		const BigReal A = on_stokes ? a_star(B.precision())*abs(g.R) : BigReal(0l);
		const BigComplex gk = gamma_guarded_shifted(k, BigComplex(g.rho));
		return abs(C)*(A*sqrt(BigReal(k)) + B)*abs(gk)*pow(abs(g.alpha_or_Delta), -k);
	}

	BigReal a_theta(const BigReal& theta)
	{
		const BigReal pi = const_pi(theta.precision());
		if (!(theta > -pi) || theta > pi)
			throw DomainError("a_theta: theta must lie in (-pi, pi]");
		if (theta.is_zero())
			throw DomainError("a_theta: theta = 0 is the on-axis case (sqrt(n) law)");
		const BigReal half(mpq_class(1, 2));
		const BigReal s = abs(sin(theta*half));
		return half*(BigReal(1l) + BigReal(1l)/s);
	}

	SupStatistic sup_statistic(const CoeffSeq& seq, const BigComplex& x, long k0,
	                           const BigReal& theta)
	{
		if (k0 < 0)
			throw DomainError("sup_statistic: k0 >= 0");
		const BigReal absx = abs(x);
		const long order = seq.order();

		// data-driven least-term index: first K with |c_{K+1}/c_K| >= |x|
		// (G' crosses ln|x| there; G is convex)
		long n_x = -1;
		for (long K = 1; K < order; ++K)
		{
			if (abs(seq[K + 1]) >= absx*abs(seq[K]))
			{
				n_x = K;
				break;
			}
		}
		if (n_x < 1)
			throw TooSmallError("sup_statistic: no least term inside the available coefficients");
		if (order < 2*n_x)
			throw RangeError("sup_statistic: series must cover K up to 2 n_x");

		const bool on_axis = theta.is_zero();
		const BigComplex xray = polar(absx, theta);

		// partial sums sum_{j=n_x}^{K}, built in both directions with the
		// signed convention for K < n_x
		std::vector<BigComplex> sums(2*n_x + 1, BigComplex(0l));
		std::vector<BigComplex> terms(2*n_x + 2, BigComplex(0l));
		for (long j = 1; j <= 2*n_x + 1 && j <= order; ++j)
			terms[j] = seq[j]*pow(xray, -j);
		BigComplex run(0l);
		for (long K = n_x; K <= 2*n_x; ++K)
		{
			run += terms[K];
			sums[K] = run;
		}
		run = BigComplex(0l);
		for (long K = n_x - 1; K >= 1; --K)
		{
			run -= terms[K + 1];
			sums[K] = run;
		}

		SupStatistic out;
		out.n_x = n_x;
		out.value = BigReal(-1l);
		BigReal xpow = absx; // |x|^K
		for (long K = 1; K <= 2*n_x; ++K)
		{
			const BigReal cK = abs(seq[K]);
			if (!cK.is_zero())
			{
				BigReal v = xpow*abs(sums[K])/cK;
				if (on_axis)
					v = v/sqrt(BigReal(K + k0));
				if (v > out.value)
				{
					out.value = v;
					out.argmax_K = K;
				}
			}
			xpow *= absx;
		}
		return out;
	}

	LeastTermSum sum_least_term(const CoeffSeq& seq, const GrowthModel& g,
	                            const BigComplex& x, const BigReal& B)
	{
		LeastTermSum out;
		out.n_x = least_term_index(g, x);
		if (static_cast<long>(seq.size()) < out.n_x + 1)
			throw RangeError("sum_least_term: series does not cover n_x");
		out.value = eval_truncated(seq, x, static_cast<std::size_t>(out.n_x) + 1);
		const bool stokes = on_stokes_line(g.alpha_or_Delta, arg(x));
		out.bound = optimal_weight(g, BigComplex(1l), stokes, B, out.n_x)
		            *pow(abs(x), -out.n_x);
		return out;
	}

	BigReal eta_check(const Sampler& f, const CoeffSeq& seq, const GrowthModel& g,
	                  const Ray& ray, const BigReal& B, long n_max,
	                  const std::vector<BigReal>& grid)
	{
		if (static_cast<long>(seq.size()) < n_max + 2)
			throw RangeError("eta_check: series must cover n_max + 1");
		const BigReal astar = a_star();
		const BigReal scale = astar/sqrt(g.gamma);
		BigReal worst(0l);
		for (const BigReal& radius : grid)
		{
			// |f - S_n| near the least term is e^{-|x|}-small against the
			// partial sums; escalate so the subtraction keeps its digits
			const Precision p_esc = radius.precision() + 64
				+ static_cast<Precision>(1.4427*radius.to_double() + 1.0);
			const BigComplex x = polar(radius.round_to(p_esc), ray.theta.round_to(p_esc));
			const BigComplex fx = f(x);
			const BigComplex invx = BigComplex(1l, p_esc)/x;
			BigComplex partial = BigComplex::zero(p_esc);
			BigComplex xpow(1l, p_esc); // x^{-n}
			BigReal xmag(1l, p_esc);    // |x|^{n+1}
			const BigReal rad = radius.round_to(p_esc);
			for (long n = 0; n <= n_max; ++n)
			{
				partial += seq[n].round_to(p_esc)*xpow;
				xpow *= invx;
				xmag *= rad;
				if (n == 0)
					continue; // weight law is asymptotic in n; start at n = 1
				const BigReal cn1 = abs(seq[n + 1]);
				if (cn1.is_zero())
					continue;
				const BigReal lhs = abs(fx - partial)*xmag;
				const BigReal eta = (lhs/(scale*(sqrt(BigReal(n)) + B)*cn1)).round_to(radius.precision());
				if (eta > worst)
					worst = eta;
			}
		}
		return worst;
	}
}
