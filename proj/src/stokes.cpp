#include "asx/stokes.hpp"

#include "asx/extrapolate.hpp"
#include "asx/summation.hpp"

#include <cmath>

namespace asx
{
	BigComplex ref_ei(const BigComplex& x)
	{
		if (x.is_zero())
			throw DomainError("ref_ei: x = 0");
		if (x.is_real() && x.re().sign() < 0)
			throw BranchError("ref_ei: the negative real axis is the branch cut");

		const Precision prec = x.precision();
		const double ax = abs(x).to_double();
		const Precision work = prec + 64 + static_cast<Precision>(2.0*ax/0.6931 + 1.0);
		const BigComplex xw = x.round_to(work);

		BigComplex sum = BigComplex::zero(work);
		BigComplex term(1l, work);
		const BigReal tol = pow2(-static_cast<long>(work) - 2, work);
		const long kmax = static_cast<long>(8.0*ax + 64.0) + 4*static_cast<long>(work);
		for (long k = 1; k <= kmax; ++k)
		{
			term *= xw/BigReal(k, work);
			const BigComplex add = term/BigReal(k, work);
			sum += add;
			if (static_cast<double>(k) > ax && abs(add) < tol*(abs(sum) + BigReal(1l, work)))
				break;
		}
		const BigComplex ei = BigComplex(const_euler(work)) + log(xw) + sum;
		return (exp(-xw)*ei).round_to(prec);
	}

	BigComplex ref_airy(const BigComplex& x)
	{
		const Precision prec = x.precision();
		const double ax = abs(x).to_double();
		if (ax > 1000.0)
			throw DomainError("ref_airy: |x| <= 1000");
		const double esc_bits = 3.0*std::pow(ax, 1.5) + 64.0;
		if (esc_bits > (1 << 20))
			throw PrecisionError("ref_airy: escalation beyond the configured cap");
		const Precision work = prec + static_cast<Precision>(esc_bits);
		const BigComplex xw = x.round_to(work);

		// y'' = x y: c_{m+3} = c_m / ((m+2)(m+3)); u has (c0, c1) = (1, 0),
		// v has (0, 1); Ai = Ai(0) u + Ai'(0) v
		const BigComplex x3 = pow(xw, 3l);
		BigComplex u_term(1l, work), u_sum(1l, work);
		BigComplex v_term = xw, v_sum = xw;
		const BigReal tol = pow2(-static_cast<long>(work) - 2, work);
		for (long m = 0; ; m += 3)
		{
			u_term = u_term*x3/BigReal((m + 2)*(m + 3), work);
			v_term = v_term*x3/BigReal((m + 3)*(m + 4), work);
			u_sum += u_term;
			v_sum += v_term;
			if (abs(u_term) + abs(v_term) < tol*(abs(u_sum) + abs(v_sum) + BigReal(1l, work)))
				break;
			if (m > 64 && static_cast<double>(m) > 16.0*ax*std::sqrt(ax) + 8.0*work)
				break;
		}

		// Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3)
		const BigReal third = BigReal(1l, work)/BigReal(3l, work);
		const BigReal g13 = gamma_real(third);
		const BigReal g23 = gamma_real(BigReal(2l, work)*third);
		const BigReal ai0 = pow(BigReal(3l, work), -BigReal(2l, work)*third)/g23;
		const BigReal aip0 = -pow(BigReal(3l, work), -third)/g13;
		return (BigComplex(ai0)*u_sum + BigComplex(aip0)*v_sum).round_to(prec);
	}

	std::vector<BigComplex> remainder_seq(const Sampler& f, const CoeffSeq& seq,
	                                      const GrowthModel& g, const BigComplex& x,
	                                      long n_lo, long n_hi)
	{
		if (n_lo < 0 || n_hi < n_lo)
			throw DomainError("remainder_seq: bad n range");
		if (static_cast<long>(seq.size()) < n_hi + 1)
			throw RangeError("remainder_seq: series does not cover n range");

		// f - S_n is e^{-Re(alpha x)}-small against f itself; escalate so the
		// subtraction still carries digits after the recessive rescale
		const Precision p_base = x.precision();
		const double depth = abs(g.alpha_or_Delta*x).to_double();
		const Precision p_esc = p_base + 64 + static_cast<Precision>(1.4427*depth + 1.0);
		const BigComplex xw = x.round_to(p_esc);

		// recessive scale x^r e^{-alpha x}
		const BigComplex scale = pow(xw, g.r.round_to(p_esc))*exp(-g.alpha_or_Delta.round_to(p_esc)*xw);
		const BigComplex fx = f(xw);
		std::vector<BigComplex> out;
		out.reserve(n_hi - n_lo + 1);
		for (long n = n_lo; n <= n_hi; ++n)
			out.push_back(((fx - eval_truncated(seq, xw, static_cast<std::size_t>(n) + 1))/scale).round_to(p_base));
		return out;
	}

	namespace
	{
		BigComplex offaxis_decay(long n, const BigReal& theta)
		{
			const Precision p = theta.precision();
			const BigReal twopi = BigReal(2l, p)*const_pi(p);
			const BigComplex eit = polar(BigReal(1l, p), theta);
			const BigComplex one(1l, p);
			const BigReal nn(n, p);
			const BigComplex expo = BigComplex(nn)*(eit - one)
				- BigComplex(BigReal(0l, p), (nn + BigReal(1l, p))*theta);
			return BigComplex(sqrt(twopi/nn))/(one - conj(eit))*exp(expo);
		}
	}

	StokesReport stokes_constant(const Sampler& f, const CoeffSeq& seq, const GrowthModel& g,
	                             const Ray& ray, const std::vector<BigReal>& x_schedule,
	                             const BigReal& tol)
	{
		if (x_schedule.size() < 6)
			throw DomainError("stokes_constant: schedule too short (need >= 6 samples)");
		for (std::size_t i = 1; i < x_schedule.size(); ++i)
			if (!(x_schedule[i] > x_schedule[i - 1]))
				throw DomainError("stokes_constant: schedule must increase");

		StokesReport rep;
		rep.ray = ray;

		std::vector<BigReal> ns;
		std::vector<BigComplex> Es;
		for (const BigReal& radius : x_schedule)
		{
			const BigComplex x = ray.point(radius);
			const long n_x = least_term_index(g, x);
			if (static_cast<long>(seq.size()) < n_x + 2)
				throw RangeError("stokes_constant: series does not cover n_x at the largest sample");
			const BigComplex E = remainder_seq(f, seq, g, x, n_x, n_x)[0];
			rep.samples.emplace_back(x, E);
			ns.push_back(BigReal(n_x));
			Es.push_back(E);
		}

		const bool on_axis = ray.theta.is_zero();
		auto fit_window = [&](std::size_t lo, std::size_t hi) -> BigComplex {
			std::vector<BigReal> nodes(ns.begin() + lo, ns.begin() + hi);
			std::vector<BigComplex> vals(Es.begin() + lo, Es.begin() + hi);
			std::vector<std::function<BigComplex(const BigReal&)>> basis;
			basis.push_back([](const BigReal&) { return BigComplex(1l); });
			if (on_axis)
			{
				for (int j : {1, 3, 5})
					basis.push_back([j](const BigReal& n) {
						return BigComplex(pow(sqrt(n), static_cast<long>(-j)));
					});
			}
			else
			{
				const BigReal th = ray.theta;
				basis.push_back([th](const BigReal& n) { return offaxis_decay(n.to_long(), th); });
				basis.push_back([th](const BigReal& n) { return offaxis_decay(n.to_long(), th)/BigComplex(n); });
				basis.push_back([th](const BigReal& n) { return offaxis_decay(n.to_long(), th)/BigComplex(n*n); });
				basis.push_back([th](const BigReal& n) { return offaxis_decay(n.to_long(), th)/BigComplex(n*n*n); });
			}
			return lsq_fit(nodes, vals, basis)[0];
		};

		const std::size_t m = ns.size();
		const BigComplex c_full = fit_window(0, m);
		const BigComplex c_tail = fit_window(m/3, m);
		if (abs(c_full - c_tail) > tol*(BigReal(1l) + abs(c_full)))
			throw NonConvergenceError("stokes_constant: window extrapolants disagree beyond tolerance");
		rep.C = c_tail;

		// mean log-residual slope against the last sample (diagnostic)
		BigReal slope(0l);
		if (m >= 2)
		{
			const BigReal r_first = abs(Es.front() - rep.C);
			const BigReal r_last = abs(Es.back() - rep.C);
			if (!r_first.is_zero() && !r_last.is_zero())
				slope = (log(r_last) - log(r_first))/(ns.back() - ns.front());
		}
		rep.convergence_rate = slope;
		return rep;
	}

	BigReal phi_profile(const BigReal& n)
	{
		if (!(n >= BigReal(10l)))
			throw DomainError("phi_profile: n >= 10");
		const Precision p = n.precision();
		const BigReal sqn = sqrt(n);

		auto rhs = [&sqn](const BigReal& s, const BigReal& y) {
			return BigReal(1l) - s*y/(BigReal(1l) + s/sqn);
		};

		auto integrate_max = [&](long steps) {
			const BigReal smax(8l, p);
			const BigReal h = smax/BigReal(steps, p);
			const BigReal half = BigReal(h)/BigReal(2l);
			BigReal s(0l, p), y(0l, p);
			BigReal best(0l, p);
			BigReal prev1(0l, p), prev2(0l, p);
			BigReal at_peak[3] = {BigReal(0l, p), BigReal(0l, p), BigReal(0l, p)};
			long best_i = -1;
			for (long i = 0; i < steps; ++i)
			{
				const BigReal k1 = rhs(s, y);
				const BigReal k2 = rhs(s + half, y + half*k1);
				const BigReal k3 = rhs(s + half, y + half*k2);
				const BigReal k4 = rhs(s + h, y + h*k3);
				y += h*(k1 + BigReal(2l)*k2 + BigReal(2l)*k3 + k4)/BigReal(6l);
				s += h;
				const BigReal ay = abs(y);
				if (ay > best)
				{
					best = ay;
					best_i = i;
					at_peak[0] = prev1;
					at_peak[1] = ay;
				}
				else if (i == best_i + 1)
					at_peak[2] = ay;
				prev2 = prev1;
				prev1 = ay;
			}
			// parabola refinement through the peak sample and neighbors
			const BigReal den = at_peak[0] - BigReal(2l)*at_peak[1] + at_peak[2];
			if (den.sign() < 0)
			{
				const BigReal d = at_peak[2] - at_peak[0];
				best = at_peak[1] - d*d/(BigReal(8l)*den);
			}
			return best;
		};

		// step-halving control: RK4 is O(h^4) and the refined max O(h^4)
		const BigReal coarse = integrate_max(1l << 11);
		const BigReal fine = integrate_max(1l << 12);
		if (abs(fine - coarse) > BigReal(1e-8))
			throw NonConvergenceError("phi_profile: step halving failed to settle");
		return fine;
	}
}
