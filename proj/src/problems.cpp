#include "asx/problems.hpp"

namespace asx
{
	namespace
	{
		BigComplex coeff_or_zero(const CoeffSeq& s, std::size_t k)
		{
			return k < s.size() ? s[k] : BigComplex(0l);
		}

		std::vector<BigComplex> to_complex(const std::vector<mpq_class>& q)
		{
			std::vector<BigComplex> v;
			v.reserve(q.size());
			for (const auto& e : q)
				v.emplace_back(BigReal(e));
			return v;
		}
	}

	SecondOrderProblem SecondOrderProblem::from_rational(std::vector<mpq_class> a,
	                                                     std::vector<mpq_class> b,
	                                                     BigReal kappa, Ray ray)
	{
		SecondOrderProblem p;
		p.a = CoeffSeq(to_complex(a));
		p.b = CoeffSeq(to_complex(b));
		p.a_rat = std::move(a);
		p.b_rat = std::move(b);
		p.kappa = std::move(kappa);
		p.ray = std::move(ray);
		return p;
	}

	void SecondOrderProblem::validate() const
	{
		if (a.size() < 1 || b.size() < 1)
			throw SchemaError("second-order problem needs a_0 and b_0");
		const BigComplex a0 = a[0];
		const BigComplex b0 = coeff_or_zero(b, 0);
		characteristic_roots(a0, b0); // throws on degenerate roots
		const BigReal disc_abs = abs(a0*a0 - BigComplex(4l)*b0);
		if (!(kappa > BigReal(0l)))
			throw SchemaError("kappa must be positive");
		if (!(kappa*sqrt(disc_abs) < BigReal(1l)))
			throw SchemaError("kappa must satisfy kappa < |a0^2 - 4 b0|^{-1/2}");
	}

	BigComplex FirstOrderProblem::alpha() const
	{
		if (f.size() < 2 || f[1].size() < 1)
			throw SchemaError("first-order problem needs f_{1,0}");
		return -f[1][0];
	}

	FirstOrderProblem FirstOrderProblem::from_rational(std::vector<std::vector<mpq_class>> fr,
	                                                   BigReal C_F, BigReal kappa, Ray ray)
	{
		FirstOrderProblem p;
		p.P = fr.empty() ? 0 : static_cast<unsigned>(fr.size() - 1);
		p.f.clear();
		for (const auto& row : fr)
			p.f.emplace_back(to_complex(row));
		p.f_rat = std::move(fr);
		p.C_F = std::move(C_F);
		p.kappa = std::move(kappa);
		p.ray = std::move(ray);
		return p;
	}

	void FirstOrderProblem::validate() const
	{
		if (f.size() != P + 1)
			throw SchemaError("first-order problem: f must have P+1 coefficient rows");
		if (!f[0].coeffs().empty() && !f[0][0].is_zero())
			throw SchemaError("first-order problem requires f_{0,0} = 0");
		const BigComplex al = alpha();
		if (al.is_zero())
			throw SchemaError("first-order problem requires alpha = -f_{1,0} != 0");
		if (!(kappa > BigReal(0l)) || !(kappa*abs(al) < BigReal(1l)))
			throw SchemaError("kappa must satisfy 0 < kappa < |alpha|^{-1}");
		// arg(x alpha) in (-pi/2, pi/2) on the ray <=> Re(e^{i theta} alpha) > 0
		const BigComplex dir = polar(BigReal(1l), ray.theta) * al;
		if (!(dir.re() > BigReal(0l)))
			throw SchemaError("ray violates arg(x alpha) in (-pi/2, pi/2)");
	}

	std::pair<BigComplex, BigComplex> characteristic_roots(const BigComplex& a0, const BigComplex& b0)
	{
		const BigComplex disc = a0*a0 - BigComplex(4l)*b0;
		const BigReal scale = abs(a0)*abs(a0) + abs(b0) + BigReal(1l);
		if (abs(disc) <= pow2(-static_cast<long>(disc.precision()) + 8)*scale)
			throw DegenerateRootsError("characteristic polynomial has (numerically) equal roots");
		const BigComplex sq = sqrt(disc);
		const BigReal half = BigReal(mpq_class(1, 2));
		BigComplex r1 = (-a0 - sq)*BigComplex(half);
		BigComplex r2 = (-a0 + sq)*BigComplex(half);
		// lexicographic on (Re, Im)
		const bool ordered = (r1.re() < r2.re()) || (r1.re() == r2.re() && r1.im() <= r2.im());
		if (!ordered)
			std::swap(r1, r2);
		return {r1, r2};
	}

	BigComplex formal_exponents(const BigComplex& a0, const BigComplex& a1,
	                            const BigComplex& b1, const BigComplex& lambda)
	{
		const BigComplex den = a0 + BigComplex(2l)*lambda;
		if (den.is_zero())
			throw DegenerateRootsError("formal_exponents: a0 + 2 lambda = 0");
		return -(a1*lambda + b1)/den;
	}

	namespace
	{
		mpq_class qat(const std::vector<mpq_class>& v, std::size_t k)
		{
			return k < v.size() ? v[k] : mpq_class(0);
		}

		bool rational_sqrt(const mpq_class& q, mpq_class& out)
		{
			if (q < 0)
				return false;
			mpq_class c(q);
			c.canonicalize();
			if (mpz_perfect_square_p(c.get_num_mpz_t()) == 0
			    || mpz_perfect_square_p(c.get_den_mpz_t()) == 0)
				return false;
			mpz_class n, d;
			mpz_sqrt(n.get_mpz_t(), c.get_num_mpz_t());
			mpz_sqrt(d.get_mpz_t(), c.get_den_mpz_t());
			out = mpq_class(n, d);
			out.canonicalize();
			return true;
		}

		// Exact path: rational coefficients, theta = 0, real rational roots.
		// Keeps the worked chains (Airy) exact and makes canonicalization an
		// exact fixed point on canonical rational problems.
		bool canonicalize_rational(const SecondOrderProblem& p,
		                           SecondOrderProblem& q, CanonicalTransform& t)
		{
			if (!p.exact_rational() || !p.ray.theta.is_zero())
				return false;
			const mpq_class a0 = qat(p.a_rat, 0);
			const mpq_class a1 = qat(p.a_rat, 1);
			const mpq_class b0 = qat(p.b_rat, 0);
			const mpq_class b1 = qat(p.b_rat, 1);
			const mpq_class disc = a0*a0 - 4*b0;
			mpq_class sq;
			if (!rational_sqrt(disc, sq) || sq == 0)
				return false;

			// dominant (larger) root is peeled on the positive axis
			const mpq_class lam1 = (-a0 + sq)/2;
			const mpq_class lam2 = (-a0 - sq)/2;
			const mpq_class den1 = a0 + 2*lam1;
			const mpq_class den2 = a0 + 2*lam2;
			const mpq_class r1 = -(a1*lam1 + b1)/den1;
			const mpq_class r2 = -(a1*lam2 + b1)/den2;
			mpq_class absdelta = lam2 - lam1;
			if (absdelta < 0)
				absdelta = -absdelta;
			const mpq_class scale = 1/absdelta;

			t.lambda1 = BigComplex(BigReal(lam1));
			t.lambda2 = BigComplex(BigReal(lam2));
			t.r1 = BigComplex(BigReal(r1));
			t.r2 = BigComplex(BigReal(r2));
			t.Delta = BigComplex(BigReal(mpq_class(lam2 - lam1)));
			t.scale = BigComplex(BigReal(scale));
			t.identity = (lam1 == 0 && r1 == 0 && absdelta == 1);
			if (t.identity)
			{
				q = p;
				return true;
			}

			const std::size_t la = p.a_rat.size();
			const std::size_t lb = p.b_rat.size();
			const std::size_t out_la = std::max<std::size_t>(la, 2);
			const std::size_t out_lb = std::max<std::size_t>({lb, la + 1, 3});
			std::vector<mpq_class> at(out_la), bt(out_lb);
			for (std::size_t k = 0; k < out_la; ++k)
				at[k] = qat(p.a_rat, k);
			at[0] += 2*lam1;
			at[1] += 2*r1;
			for (std::size_t k = 0; k < out_lb; ++k)
			{
				bt[k] = qat(p.b_rat, k) + lam1*qat(p.a_rat, k);
				if (k >= 1)
					bt[k] += r1*qat(p.a_rat, k - 1);
			}
			bt[0] += lam1*lam1;
			bt[1] += 2*lam1*r1;
			bt[2] += r1*r1 - r1;

			mpq_class spow = scale; // scale^{1-k}
			for (std::size_t k = 0; k < out_la; ++k)
			{
				at[k] *= spow;
				spow /= scale;
			}
			spow = scale*scale;
			for (std::size_t k = 0; k < out_lb; ++k)
			{
				bt[k] *= spow;
				spow /= scale;
			}
			for (auto& v : at) v.canonicalize();
			for (auto& v : bt) v.canonicalize();

			q = SecondOrderProblem::from_rational(std::move(at), std::move(bt),
			                                      p.kappa*BigReal(absdelta),
			                                      Ray(BigReal(0l), p.ray.x0*BigReal(absdelta)));
			q.coeffs_entire = p.coeffs_entire;
			t.truncation_flagged = !p.coeffs_entire;

			if (p.a_closed && p.b_closed)
			{
				const Sampler pa = p.a_closed, pb = p.b_closed;
				const BigComplex sc = t.scale, l1 = t.lambda1, rr1 = t.r1;
				q.a_closed = [pa, sc, l1, rr1](const BigComplex& xn) {
					const BigComplex x = sc*xn;
					return sc*(pa(x) + BigComplex(2l)*l1 + BigComplex(2l)*rr1/x);
				};
				q.b_closed = [pa, pb, sc, l1, rr1](const BigComplex& xn) {
					const BigComplex x = sc*xn;
					const BigComplex mu = l1 + rr1/x;
					return sc*sc*(pb(x) + (pa(x) + mu)*mu - rr1/(x*x));
				};
			}
			return true;
		}
	}

	std::pair<SecondOrderProblem, CanonicalTransform> canonicalize(const SecondOrderProblem& p)
	{
		p.validate();
		{
			SecondOrderProblem q;
			CanonicalTransform t;
			if (canonicalize_rational(p, q, t))
				return {q, t};
		}
		const BigComplex a0 = p.a[0];
		const BigComplex a1 = coeff_or_zero(p.a, 1);
		const BigComplex b0 = coeff_or_zero(p.b, 0);
		const BigComplex b1 = coeff_or_zero(p.b, 1);

		auto [lo, hi] = characteristic_roots(a0, b0);
		const BigComplex dir = polar(BigReal(1l), p.ray.theta);

		// peel the root that dominates on the ray
		BigComplex lam1 = lo, lam2 = hi;
		const BigReal d_lo = (dir*lo).re();
		const BigReal d_hi = (dir*hi).re();
		if (d_hi > d_lo)
			std::swap(lam1, lam2);
		else if (d_hi == d_lo)
		{
			// anti-Stokes tie; orient so Im(e^{i theta}(lambda1 - lambda2)) > 0
			if ((dir*(lam1 - lam2)).im() < BigReal(0l))
				std::swap(lam1, lam2);
		}

		CanonicalTransform t;
		t.lambda1 = lam1;
		t.lambda2 = lam2;
		t.r1 = formal_exponents(a0, a1, b1, lam1);
		t.r2 = formal_exponents(a0, a1, b1, lam2);
		t.Delta = lam2 - lam1;
		const BigReal absdelta = abs(t.Delta);
		t.scale = dir / BigReal(absdelta);

		// float path: identity up to the root-extraction noise floor
		const BigReal idtol = pow2(-static_cast<long>(a0.precision()) + 24)
			*(BigReal(1l) + abs(a0) + abs(b0));
		const bool is_identity = abs(lam1) <= idtol && abs(t.r1) <= idtol
			&& p.ray.theta.is_zero() && abs(absdelta - BigReal(1l)) <= idtol;
		if (is_identity)
		{
			t.identity = true;
			return {p, t};
		}

		// substitution y = exp(lam1 x) x^{r1} u:
		//   a~_k = a_k + 2 lam1 [k=0] + 2 r1 [k=1]
		//   b~_k = b_k + lam1 a_k + r1 a_{k-1} + lam1^2 [k=0]
		//          + 2 lam1 r1 [k=1] + (r1^2 - r1) [k=2]
		const std::size_t la = p.a.size();
		const std::size_t lb = p.b.size();
		const std::size_t out_la = std::max<std::size_t>(la, 2);
		const std::size_t out_lb = std::max<std::size_t>({lb, la + 1, 3});

		std::vector<BigComplex> at(out_la, BigComplex(0l));
		std::vector<BigComplex> bt(out_lb, BigComplex(0l));
		for (std::size_t k = 0; k < out_la; ++k)
			at[k] = coeff_or_zero(p.a, k);
		at[0] += BigComplex(2l)*lam1;
		at[1] += BigComplex(2l)*t.r1;
		for (std::size_t k = 0; k < out_lb; ++k)
		{
			bt[k] = coeff_or_zero(p.b, k) + lam1*coeff_or_zero(p.a, k);
			if (k >= 1)
				bt[k] += t.r1*coeff_or_zero(p.a, k - 1);
		}
		bt[0] += lam1*lam1;
		bt[1] += BigComplex(2l)*lam1*t.r1;
		bt[2] += t.r1*t.r1 - t.r1;

		// rescale x = scale * x_new: a^_k = scale^{1-k} a~_k, b^_k = scale^{2-k} b~_k
		SecondOrderProblem q;
		std::vector<BigComplex> ah(out_la), bh(out_lb);
		for (std::size_t k = 0; k < out_la; ++k)
			ah[k] = pow(t.scale, 1l - static_cast<long>(k))*at[k];
		for (std::size_t k = 0; k < out_lb; ++k)
			bh[k] = pow(t.scale, 2l - static_cast<long>(k))*bt[k];
		q.a = CoeffSeq(std::move(ah));
		q.b = CoeffSeq(std::move(bh));
		q.coeffs_entire = p.coeffs_entire;
		t.truncation_flagged = !p.coeffs_entire; // composition capped at input length
		q.kappa = p.kappa*absdelta; // kappa in the rescaled variable
		q.ray = Ray(BigReal(0l), p.ray.x0*absdelta);

		if (p.a_closed && p.b_closed)
		{
			// a^(x~) = scale (a(x) + 2 lam1 + 2 r1 / x),  x = scale x~
			const Sampler pa = p.a_closed, pb = p.b_closed;
			const BigComplex sc = t.scale, l1 = lam1, r1 = t.r1;
			q.a_closed = [pa, sc, l1, r1](const BigComplex& xn) {
				const BigComplex x = sc*xn;
				return sc*(pa(x) + BigComplex(2l)*l1 + BigComplex(2l)*r1/x);
			};
			q.b_closed = [pa, pb, sc, l1, r1](const BigComplex& xn) {
				const BigComplex x = sc*xn;
				const BigComplex mu = l1 + r1/x;
				return sc*sc*(pb(x) + (pa(x) + mu)*mu - r1/(x*x));
			};
		}
		return {q, t};
	}

	namespace
	{
		GevreyReport build_report(const std::vector<BigReal>& per_n_ratio)
		{
			GevreyReport rep;
			BigReal worst(0l);
			for (std::size_t n = 0; n < per_n_ratio.size(); ++n)
			{
				rep.coeff_ratios.push_back({n, per_n_ratio[n]});
				if (per_n_ratio[n] > worst)
					worst = per_n_ratio[n];
			}
			rep.bound_constant = worst;
			// A finite sample is always bounded; fail only when the tail
			// shows sustained geometric growth (the bound is not uniform).
			const std::size_t n = per_n_ratio.size();
			if (n >= 8)
			{
				BigReal head(0l), tail(0l);
				for (std::size_t i = 0; i < n/2; ++i)
					if (per_n_ratio[i] > head) head = per_n_ratio[i];
				for (std::size_t i = n/2; i < n; ++i)
					if (per_n_ratio[i] > tail) tail = per_n_ratio[i];
				const bool increasing_tail = per_n_ratio[n-1] > per_n_ratio[3*n/4]
					&& per_n_ratio[3*n/4] > per_n_ratio[n/2];
				rep.pass = !(tail > BigReal(4l)*head && increasing_tail);
			}
			else
				rep.pass = true;
			return rep;
		}

		BigReal ratio_of(const BigComplex& c, const BigReal& kappa_pow_n, const BigReal& fact_n)
		{
			return abs(c)/(kappa_pow_n*fact_n);
		}
	}

	GevreyReport validate_gevrey(const SecondOrderProblem& p, std::size_t n_max)
	{
		std::vector<BigReal> ratios(n_max + 1, BigReal(0l));
		BigReal kpow(1l), fact(1l);
		for (std::size_t n = 0; n <= n_max; ++n)
		{
			if (n > 0)
			{
				kpow *= p.kappa;
				fact *= BigReal(static_cast<long>(n));
			}
			BigReal r = ratio_of(coeff_or_zero(p.a, n), kpow, fact);
			BigReal rb = ratio_of(coeff_or_zero(p.b, n), kpow, fact);
			ratios[n] = r > rb ? r : rb;
		}
		GevreyReport rep = build_report(ratios);

		if (p.a_closed && p.b_closed)
		{
			// remainder inequality on a short grid, n up to the stored order
			BigReal worst(0l);
			const std::size_t n_chk = std::min<std::size_t>(std::min(p.a.size(), p.b.size()), 8);
			const auto grid = geometric_grid(p.ray.x0, BigReal(2l), 5);
			for (std::size_t n = 1; n <= n_chk; ++n)
			{
				BigReal kn(1l), fn(1l);
				for (std::size_t i = 1; i <= n; ++i)
				{
					kn *= p.kappa;
					fn *= BigReal(static_cast<long>(i));
				}
				for (const auto& radius : grid)
				{
					const BigComplex x = p.ray.point(radius);
					const BigReal xa = pow(radius, static_cast<long>(n));
					BigReal ra = abs(p.a_closed(x) - eval_truncated(p.a, x, n))*xa/(kn*fn);
					BigReal rb = abs(p.b_closed(x) - eval_truncated(p.b, x, n))*xa/(kn*fn);
					if (ra > worst) worst = ra;
					if (rb > worst) worst = rb;
				}
			}
			rep.remainder_constant = worst;
		}
		return rep;
	}

	GevreyReport validate_gevrey(const FirstOrderProblem& p, std::size_t n_max)
	{
		std::vector<BigReal> ratios(n_max + 1, BigReal(0l));
		BigReal kpow(1l), fact(1l);
		for (std::size_t n = 0; n <= n_max; ++n)
		{
			if (n > 0)
			{
				kpow *= p.kappa;
				fact *= BigReal(static_cast<long>(n));
			}
			BigReal worst(0l);
			for (const auto& row : p.f)
			{
				BigReal r = ratio_of(coeff_or_zero(row, n), kpow, fact);
				if (r > worst)
					worst = r;
			}
			ratios[n] = worst;
		}
		return build_report(ratios);
	}

	BigComplex AiryChain::airy_x_of_t(const BigComplex& t) const
	{
		const BigComplex s = BigComplex(BigReal(mpq_class(3, 4)))*t;
		return pow(s, BigComplex(BigReal(mpq_class(2, 3))));
	}

	BigComplex AiryChain::t_of_airy_x(const BigComplex& x) const
	{
		const BigComplex s = pow(x, BigComplex(BigReal(mpq_class(3, 2))));
		return BigComplex(BigReal(mpq_class(4, 3)))*s;
	}

	mpq_class AiryChain::series_coeff_factor(unsigned long k) const
	{
		mpq_class f(1);
		const mpq_class q(3, 4);
		for (unsigned long i = 0; i < k; ++i)
			f *= q;
		return f;
	}

	AiryChain airy_chain()
	{
		AiryChain c;
		// g'' + (4/3 + 1/(3s)) g' + 2/(9s) g = 0 (the Airy equation after
		// y = exp(2/3 x^{3/2}) g, x = s^{2/3})
		c.aiges = SecondOrderProblem::from_rational(
			{mpq_class(4, 3), mpq_class(1, 3)},
			{mpq_class(0), mpq_class(2, 9)},
			BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(1l)));

		auto [h, t] = canonicalize(c.aiges);
		c.aiges_to_h = t;

		// the canonicalized problem is the h-equation with exact rational
		// coefficients; carry them explicitly
		c.h_equation = SecondOrderProblem::from_rational(
			{mpq_class(1)},
			{mpq_class(0), mpq_class(0), mpq_class(5, 36)},
			BigReal(mpq_class(1, 2)), h.ray);
		return c;
	}
}
