#include "asx/decompose.hpp"

#include "asx/gammafn.hpp"
#include "asx/stokes.hpp"

#include <cmath>

namespace asx
{
	BigComplex RationalFunction::eval(const BigComplex& x) const
	{
		BigComplex acc(0l);
		for (const auto& p : poles)
		{
			const BigComplex d = x - p.location;
			BigComplex dpow = BigComplex(1l)/d;
			for (std::size_t k = 0; k < p.residues.size(); ++k)
			{
				acc += p.residues[k]*dpow;
				dpow /= d;
			}
		}
		return acc;
	}

	unsigned RationalFunction::max_order() const
	{
		std::size_t m = 0;
		for (const auto& p : poles)
			m = std::max(m, p.residues.size());
		return static_cast<unsigned>(m);
	}

	BigReal RationalFunction::max_pole_radius() const
	{
		BigReal r(0l);
		for (const auto& p : poles)
			if (abs(p.location) > r)
				r = abs(p.location);
		return r;
	}

	void RationalFunction::validate(const BigReal& x0) const
	{
		bool any = false;
		for (const auto& p : poles)
			for (const auto& res : p.residues)
				if (!res.is_zero())
					any = true;
		if (!any)
			throw SchemaError("rational function needs at least one pole with a nonzero residue");
		for (const auto& p : poles)
			if (p.location.is_real() && p.location.re() > x0)
				throw PoleOnRayError("pole on the summation ray beyond x0");
	}

	BigComplex DecompositionResult::eval_H(const BigComplex& x) const
	{
		if (H_coeffs.size() == 0)
			return BigComplex(0l);
		// Horner in z = 1/x
		const BigComplex z = BigComplex(1l)/x;
		BigComplex acc = H_coeffs[H_coeffs.size() - 1];
		for (std::size_t m = H_coeffs.size() - 1; m-- > 0; )
			acc = acc*z + H_coeffs[m];
		return acc;
	}

	DecompositionResult decompose_rational(const RationalFunction& R, std::size_t h_terms)
	{
		DecompositionResult out;

		// The cumulative sums rt_m = sum_{i<=m} g_i - K cancel down to
		// ~ rho^m/m! before being multiplied back by m!, so the whole
		// construction runs at p + log2(h_terms!) bits and rounds at the end.
		Precision p_base = default_precision();
		for (const auto& p : R.poles)
			p_base = std::max(p_base, p.location.precision());
		const double lg_fact = static_cast<double>(h_terms)
			*std::log2(std::max<double>(2.0, static_cast<double>(h_terms)));
		const Precision p_int = p_base + static_cast<Precision>(lg_fact) + 64;

		// K = sum_{k,j} R_{k,j} e^{r_j} / (k-1)!
		BigComplex K = BigComplex::zero(p_int);
		for (const auto& p : R.poles)
		{
			const BigComplex er = exp(p.location.round_to(p_int));
			BigReal fact(1l, p_int);
			for (std::size_t k1 = 0; k1 < p.residues.size(); ++k1)
			{
				if (k1 > 0)
					fact *= BigReal(static_cast<long>(k1), p_int);
				K += p.residues[k1].round_to(p_int)*er/fact;
			}
		}
		out.K = K.round_to(p_base);

		// Taylor coefficients of g(t) = sum R_{k,j} e^{r_j t} t^{k-1}/(k-1)!
		std::vector<BigComplex> g(h_terms + 1, BigComplex::zero(p_int));
		for (const auto& p : R.poles)
		{
			const BigComplex loc = p.location.round_to(p_int);
			for (std::size_t k1 = 0; k1 < p.residues.size(); ++k1)
			{
				if (p.residues[k1].is_zero())
					continue;
				const BigComplex res = p.residues[k1].round_to(p_int);
				// coeff of t^m in e^{r t} t^{k-1}/(k-1)!: r^{m-k+1}/((m-k+1)! (k-1)!)
				BigReal kfact(1l, p_int);
				for (std::size_t i = 2; i <= k1; ++i)
					kfact *= BigReal(static_cast<long>(i), p_int);
				BigComplex rpow(1l, p_int);
				BigReal mfact(1l, p_int);
				for (std::size_t m = k1; m <= h_terms; ++m)
				{
					const std::size_t e = m - k1;
					if (e > 0)
					{
						rpow *= loc;
						mfact *= BigReal(static_cast<long>(e), p_int);
					}
					g[m] += res*rpow/(mfact*kfact);
				}
			}
		}

		// Rtilde = (g - K)/(1 - t): coefficients are the cumulative sums
		// rt_m = sum_{i<=m} (g_i - K [i=0]); H(z) = sum_m rt_m m! z^{m+1}
		std::vector<BigComplex> h(h_terms + 1, BigComplex::zero(p_base));
		BigComplex acc = -K;
		BigReal mfact(1l, p_int);
		for (std::size_t m = 0; m < h_terms; ++m)
		{
			acc += g[m];
			if (m > 0)
				mfact *= BigReal(static_cast<long>(m), p_int);
			h[m + 1] = (acc*mfact).round_to(p_base);
		}
		out.H_coeffs = CoeffSeq(std::move(h));
		out.C = BigComplex::zero(p_base);
		return out;
	}

	BigReal h_radius_estimate(const DecompositionResult& d)
	{
		// 1/limsup |h_m|^{1/m} from the last stored coefficients
		const std::size_t M = d.H_coeffs.size();
		if (M < 8)
			throw RangeError("h_radius_estimate: too few coefficients");
		BigReal best(0l);
		for (std::size_t m = M - 4; m < M; ++m)
		{
			const BigReal a = abs(d.H_coeffs[m]);
			if (a.is_zero())
				continue;
			const BigReal root = exp(log(a)/BigReal(static_cast<long>(m)));
			if (root > best)
				best = root;
		}
		if (best.is_zero())
			return BigReal(1e30); // identically-zero tail: entire in z
		return BigReal(1l)/best;
	}

	BigComplex tanh_sinh(const std::function<BigComplex(const BigReal&)>& f,
	                     const BigReal& a, const BigReal& b, const BigReal& tol)
	{
		const Precision p = std::max(a.precision(), b.precision());
		const BigReal half(mpq_class(1, 2));
		const BigReal mid = (a + b)*half;
		const BigReal rad = (b - a)*half;
		const BigReal pi_half = const_pi(p)*half;

		// u range: 1 - tanh(pi/2 sinh u) < 2^-(p+16)
		const double du = std::log(((static_cast<double>(p) + 16.0)*0.6931/3.1415926)*2.0 + 1.0) + 1.0;
		const BigReal umax(du, p);

		auto node = [&](const BigReal& u, BigReal& x, BigReal& w) {
			const BigReal s = pi_half*sinh(u);
			const BigReal t = tanh(s);
			x = mid + rad*t;
			const BigReal c = cosh(s);
			w = rad*pi_half*cosh(u)/(c*c);
		};

		BigComplex prev(0l, p);
		BigReal h(1l, p);
		BigComplex sum(0l, p);
		{
			BigReal x(0l, p), w(0l, p);
			node(BigReal(0l, p), x, w);
			sum = f(x)*w;
		}
		// level 0: h = 1
		for (BigReal u = h; u <= umax; u += h)
		{
			BigReal x(0l, p), w(0l, p);
			node(u, x, w);
			sum += f(x)*w;
			node(-u, x, w);
			sum += f(x)*w;
		}
		prev = sum*h;

		for (int level = 1; level <= 13; ++level)
		{
			h = h*half;
			// new nodes at odd multiples of h
			BigComplex add(0l, p);
			for (BigReal u = h; u <= umax; u += h + h)
			{
				BigReal x(0l, p), w(0l, p);
				node(u, x, w);
				add += f(x)*w;
				node(-u, x, w);
				add += f(x)*w;
			}
			const BigComplex cur = prev*half + add*h;
			if (level >= 3 && abs(cur - prev) <= tol*(BigReal(1l) + abs(cur)))
				return cur;
			prev = cur;
		}
		throw PrecisionError("tanh_sinh: level cap reached before tolerance");
	}

	namespace
	{
		// I_1(r) = int_0^inf e^{-t}/(x - t - r) dt for real x, with the
		// principal value at a real pole and the half-residue correction
		// selecting the canonical (C = 0) branch at a complex pole.
		BigComplex simple_pole_integral(const BigReal& x, const BigComplex& r, const BigReal& tol)
		{
			const Precision p = x.precision();
			const BigComplex t0 = BigComplex(x) - r; // pole position in t
			const BigReal T = BigReal(0.70*static_cast<double>(p) + 48.0, p);

			auto F = [&](const BigReal& t) {
				return exp(BigReal(-t))/(BigComplex(x - t) - r);
			};

			// segment plan: dyadically widening pieces toward T
			auto integrate_span = [&](const BigReal& lo, const BigReal& hi) {
				BigComplex acc(0l, p);
				BigReal a = lo;
				BigReal w(1l, p);
				while (a < hi)
				{
					BigReal b = a + w;
					if (b > hi)
						b = hi;
					acc += tanh_sinh(F, a, b, tol);
					a = b;
					w *= BigReal(2l);
				}
				return acc;
			};

			const BigReal im_dist = abs(t0.im());
			const bool pole_is_real = im_dist <= pow2(-static_cast<long>(p)/2, p)*(BigReal(1l) + abs(t0));

			if (pole_is_real)
			{
				const BigReal tp = t0.re();
				if (!(tp > BigReal(0l)) || !(tp < T))
					return integrate_span(BigReal(0l, p), T); // pole off the path
				// PV window half-width: clear of 0 and of T
				BigReal w = BigReal(1l, p);
				if (tp*BigReal(mpq_class(1, 2)) < w)
					w = tp*BigReal(mpq_class(1, 2));
				if (!(w > BigReal(mpq_class(1, 100))))
					throw PoleOnRayError("pole too close to the endpoint of the integration path");
				// symmetric PV: F(tp+u) + F(tp-u) = 2 e^{-tp} sinh(u)/u for
				// the single simple pole, entire in u
				const BigReal etp = exp(-tp);
				auto sym = [&](const BigReal& u) {
					if (u.is_zero())
						return BigComplex(BigReal(2l)*etp);
					return BigComplex(BigReal(2l)*etp*sinh(u)/u);
				};
				BigComplex acc = integrate_span(BigReal(0l, p), tp - w);
				acc += tanh_sinh(sym, BigReal(0l, p), w, tol);
				acc += integrate_span(tp + w, T);
				return acc;
			}

			if (im_dist < BigReal(mpq_class(1, 20)))
				throw PoleOnRayError("complex pole too close to the integration path for stable quadrature");

			// straight path; split near the closest approach to help the nodes
			BigComplex acc(0l, p);
			const BigReal re0 = t0.re();
			if (re0 > BigReal(1l) && re0 < T - BigReal(1l))
			{
				acc += integrate_span(BigReal(0l, p), re0 - BigReal(1l));
				acc += tanh_sinh(F, re0 - BigReal(1l), re0 + BigReal(1l), tol);
				acc += integrate_span(re0 + BigReal(1l), T);
			}
			else
				acc += integrate_span(BigReal(0l, p), T);

			// canonical-branch correction: -pi i sign(Im r) e^{r - x}
			const BigReal pi = const_pi(p);
			const int s = r.im().sign();
			if (s != 0)
			{
				const BigComplex corr = BigComplex(BigReal(0l, p), s > 0 ? pi : -pi)*exp(r - BigComplex(x));
				acc -= corr;
			}
			return acc;
		}

		// psi_ref(x) = sum_j sum_k R_{k,j} I_k(r_j) with
		// I_k = (-(x-r)^{-(k-1)} + I_{k-1})/(k-1)
		BigComplex psi_reference(const RationalFunction& R, const BigReal& x, const BigReal& tol)
		{
			BigComplex acc(0l, x.precision());
			for (const auto& pb : R.poles)
			{
				const std::size_t m = pb.residues.size();
				std::vector<BigComplex> I(m + 1, BigComplex(0l));
				I[1] = simple_pole_integral(x, pb.location, tol);
				for (std::size_t k = 2; k <= m; ++k)
					I[k] = (-pow(BigComplex(x) - pb.location, -(static_cast<long>(k) - 1)) + I[k - 1])
					       / BigReal(static_cast<long>(k) - 1);
				for (std::size_t k1 = 0; k1 < m; ++k1)
					if (!pb.residues[k1].is_zero())
						acc += pb.residues[k1]*I[k1 + 1];
			}
			return acc;
		}
	}

	BigReal verify_decomposition(const RationalFunction& R, const DecompositionResult& d,
	                             const std::vector<BigReal>& x_grid)
	{
		if (x_grid.empty())
			throw DomainError("verify_decomposition: empty grid");
		const BigReal rho = R.max_pole_radius();
		BigReal worst(0l);
		for (const BigReal& x0 : x_grid)
		{
			if (!(x0 > rho + BigReal(mpq_class(1, 2))))
				throw DomainError("verify_decomposition: grid point inside/near the pole disk (H diverges)");
			const Precision pw = x0.precision() + 96;
			const BigReal x = x0.round_to(pw);
			const BigReal tol = pow2(-static_cast<long>(x0.precision()) - 64, pw);

			const BigComplex psi = psi_reference(R, x, tol);
			const BigComplex model = d.K.round_to(pw)*ref_ei(BigComplex(x))
				+ d.eval_H(BigComplex(x))
				+ d.C.round_to(pw)*BigComplex(exp(-x));
			const BigReal res = abs(psi - model).round_to(x0.precision());
			if (res > worst)
				worst = res;
		}
		return worst;
	}
}
