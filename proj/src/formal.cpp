#include "asx/formal.hpp"

#include "asx/extrapolate.hpp"
#include "asx/gammafn.hpp"

#include <cmath>

namespace asx
{
	namespace
	{
		// Generic-scalar coefficient access with exact zero extension for
		// entire (polynomial-in-1/x) coefficient functions.
		template <class S>
		S coeff(const std::vector<S>& v, std::size_t k, bool entire, const char* what)
		{
			if (k < v.size())
				return v[k];
			if (entire)
				return S(0);
			throw RangeError(std::string(what) + " coefficients shorter than required order");
		}

		// The linear recurrence, scalar-agnostic (exact rationals or
		// floating complex):
		// alpha n s_n = n(n-1+r) s_{n-1} + (a1+b2) s_{n-1}
		//               + sum_{j=2}^n ((j-n) a_j + b_{j+1}) s_{n-j}
		template <class S>
		std::vector<S> linear_core(const std::vector<S>& a, const std::vector<S>& b,
		                           bool entire, long N)
		{
			const S alpha = coeff(a, 0, entire, "a");
			const S a1 = coeff(a, 1, entire, "a");
			const S r = -a1;
			const S b2 = coeff(b, 2, entire, "b");
			if (!entire)
			{
				if (static_cast<long>(a.size()) < N + 1)
					throw RangeError("a coefficients shorter than N+1");
				if (static_cast<long>(b.size()) < N + 2)
					throw RangeError("b coefficients shorter than N+2");
			}

			// beyond jmax every ((j-n) a_j + b_{j+1}) vanishes identically
			const long jmax_a = static_cast<long>(a.size()) - 1;
			const long jmax_b = static_cast<long>(b.size()) - 2;
			const long jmax = std::max(jmax_a, jmax_b);

			std::vector<S> s;
			s.reserve(N + 1);
			s.push_back(S(1));
			for (long n = 1; n <= N; ++n)
			{
				S acc = (S(n - 1) + r + (a1 + b2)/S(n))*s[n - 1];
				const long jhi = std::min(n, jmax);
				for (long j = 2; j <= jhi; ++j)
				{
					const S term = (S(j - n)*coeff(a, j, entire, "a")
					                + coeff(b, j + 1, entire, "b"))*s[n - j];
					acc += term/S(n);
				}
				s.push_back(acc/alpha);
			}
			return s;
		}

		template <class S>
		void check_canonical(const std::vector<S>& a, const std::vector<S>& b)
		{
			if (a.empty())
				throw DomainError("linear_series: empty a");
			if (!b.empty() && !(b[0] == S(0)))
				throw DomainError("linear_series requires canonical form (b_0 = 0)");
			if (b.size() > 1 && !(b[1] == S(0)))
				throw DomainError("linear_series requires canonical form (b_1 = 0)");
		}

		// Ordered J_1 tuples: i + k_1 + ... + k_p = k, 1 <= k_m <= k-2.
		template <class S>
		S j1_sum(const std::vector<std::vector<S>>& f, bool entire,
		         const std::vector<S>& s, long k)
		{
			const long P = static_cast<long>(f.size()) - 1;
			S total(0);
			// p = 0: the inhomogeneous coefficient f_{0,k}
			total += coeff(f[0], k, entire, "f");
			const long part_max = k - 2;
			for (long p = 1; p <= P; ++p)
			{
				if (part_max < 1 && p >= 1)
					break; // no admissible parts
				// depth-first over ordered tuples
				std::vector<long> parts(p, 1);
				// iterate all tuples with entries in [1, part_max] and sum <= k
				long depth = 0;
				S prod = s[1]; // running product for current prefix (parts all 1)
				// simple recursive lambda
				std::function<void(long, long, const S&)> rec = [&](long pos, long remaining, const S& pref)
				{
					if (pos == p)
					{
						// i = remaining >= 0
						total += coeff(f[p], remaining, entire, "f")*pref;
						return;
					}
					const long left_min = (p - pos - 1); // each later part >= 1
					for (long v = 1; v <= std::min<long>(part_max, remaining - left_min); ++v)
						rec(pos + 1, remaining - v, pref*s[v]);
				};
				(void)depth; (void)parts; (void)prod;
				rec(0, k, S(1));
			}
			return total;
		}

		template <class S>
		std::vector<S> nonlinear_core(const std::vector<std::vector<S>>& f, bool entire,
		                              long N, S* r_out)
		{
			if (f.size() < 2)
				throw DomainError("nonlinear_series: need P >= 1");
			const S alpha = -coeff(f[1], 0, entire, "f");
			if (alpha == S(0))
				throw DomainError("nonlinear_series: alpha = 0");
			if (!entire)
				for (const auto& row : f)
					if (static_cast<long>(row.size()) < N + 1)
						throw RangeError("f coefficients shorter than N+1");

			std::vector<S> s;
			s.reserve(N + 1);
			s.push_back(S(0)); // the series starts at 1/x
			// alpha s_1 = f_{0,1}
			s.push_back(coeff(f[0], 1, entire, "f")/alpha);

			// Lemma 5 states r = f_{1,1} + 2 f_{2,0} f_{0,1} / alpha; its proof
			// uses r = f_{1,1} + 2 f_{2,0} s_1. These agree because
			// s_1 = f_{0,1}/alpha; assert rather than assume.
			const S f20 = f.size() > 2 ? coeff(f[2], 0, entire, "f") : S(0);
			const S r_lemma = coeff(f[1], 1, entire, "f") + S(2)*f20*coeff(f[0], 1, entire, "f")/alpha;
			const S r = coeff(f[1], 1, entire, "f") + S(2)*f20*s[1];
			if (!(r == r_lemma))
				throw DomainError("nonlinear_series: r identity violated (inconsistent inputs)");
			if (r_out)
				*r_out = r;

			for (long k = 2; k <= N; ++k)
			{
				S acc = (S(k - 1) + r)*s[k - 1];
				acc += j1_sum(f, entire, s, k);
				s.push_back(acc/alpha);
			}
			return s;
		}

		std::vector<BigComplex> complex_of(const CoeffSeq& c)
		{
			return c.coeffs();
		}
	}

	GrowthModel GrowthModel::exact(BigComplex R, BigComplex alpha, BigComplex r)
	{
		GrowthModel g;
		g.R = std::move(R);
		g.alpha_or_Delta = std::move(alpha);
		g.r = std::move(r);
		g.rho = g.r.re();
		return g;
	}

	CoeffSeq linear_series(const SecondOrderProblem& p, long N)
	{
		if (N < 1)
			throw DomainError("linear_series: N >= 1 required");
		if (p.exact_rational())
		{
			auto sx = linear_series_exact(p, N);
			std::vector<BigComplex> c;
			c.reserve(sx.size());
			for (const auto& q : sx)
				c.emplace_back(BigReal(q));
			return CoeffSeq(std::move(c));
		}
		check_canonical(p.a.coeffs(), p.b.coeffs());
		return CoeffSeq(linear_core(complex_of(p.a), complex_of(p.b), p.coeffs_entire, N));
	}

	std::vector<mpq_class> linear_series_exact(const SecondOrderProblem& p, long N)
	{
		if (!p.exact_rational())
			throw DomainError("linear_series_exact: problem has no rational coefficients");
		check_canonical(p.a_rat, p.b_rat);
		return linear_core(p.a_rat, p.b_rat, p.coeffs_entire, N);
	}

	CoeffSeq nonlinear_series(const FirstOrderProblem& p, long N, BigComplex* r_out)
	{
		if (N < 1)
			throw DomainError("nonlinear_series: N >= 1 required");
		p.validate();
		if (p.exact_rational())
		{
			mpq_class rq;
			auto sx = nonlinear_series_exact(p, N, &rq);
			if (r_out)
				*r_out = BigComplex(BigReal(rq));
			std::vector<BigComplex> c;
			c.reserve(sx.size());
			for (const auto& q : sx)
				c.emplace_back(BigReal(q));
			return CoeffSeq(std::move(c));
		}
		std::vector<std::vector<BigComplex>> f;
		for (const auto& row : p.f)
			f.push_back(row.coeffs());
		return CoeffSeq(nonlinear_core(f, p.coeffs_entire, N, r_out));
	}

	std::vector<mpq_class> nonlinear_series_exact(const FirstOrderProblem& p, long N, mpq_class* r_out)
	{
		if (!p.exact_rational())
			throw DomainError("nonlinear_series_exact: problem has no rational coefficients");
		return nonlinear_core(p.f_rat, p.coeffs_entire, N, r_out);
	}

	AiryCoeffs airy_coeffs(long N)
	{
		if (N < 0)
			throw DomainError("airy_coeffs: N >= 0");
		AiryCoeffs out;
		out.recurrence.reserve(N + 1);
		out.recurrence.push_back(mpq_class(1));
		for (long j = 0; j < N; ++j)
		{
			// (j+1) h_{j+1} = (j + 1/6)(j + 5/6) h_j
			mpq_class next = out.recurrence.back();
			next *= mpq_class((6*j + 1)*(6*j + 5), 36*(j + 1));
			next.canonicalize();
			out.recurrence.push_back(next);
		}

		// closed form Gamma(n+5/6) Gamma(n+1/6) / (2 pi Gamma(n+1)) as the
		// exact rising-factorial product (Gamma(5/6) Gamma(1/6) = 2 pi):
		// h_n = prod_{i<n} (6i+5) * prod_{i<n} (6i+1) / (36^n n!)
		out.closed_form.reserve(N + 1);
		mpz_class p5(1), p1(1), den(1);
		out.closed_form.push_back(mpq_class(1));
		for (long n = 1; n <= N; ++n)
		{
			p5 *= 6*(n - 1) + 5;
			p1 *= 6*(n - 1) + 1;
			den *= 36*n;
			mpq_class h(p5*p1, den);
			h.canonicalize();
			out.closed_form.push_back(h);
		}

		std::vector<BigComplex> rf, cf;
		rf.reserve(N + 1);
		cf.reserve(N + 1);
		for (long n = 0; n <= N; ++n)
		{
			rf.emplace_back(BigReal(out.recurrence[n]));
			cf.emplace_back(BigReal(out.closed_form[n]));
		}
		out.recurrence_f = CoeffSeq(std::move(rf));
		out.closed_form_f = CoeffSeq(std::move(cf));
		return out;
	}

	GrowthModel fit_growth(const CoeffSeq& seq, const BigComplex& alpha,
	                       const BigComplex& r, unsigned M)
	{
		const long N = seq.order();
		if (N < 50)
			throw RangeError("fit_growth: need at least 50 coefficients");
		if (M > 4)
			throw DomainError("fit_growth: M <= 4 (higher orders amplify noise)");

		// c_n = s_n alpha^n / Gamma_guard(n + r), Gamma recursed upward
		std::vector<BigComplex> c(N + 1, BigComplex(0l));
		BigComplex apow(1l);
		BigComplex gam(1l);
		bool gamma_live = false;
		for (long n = 1; n <= N; ++n)
		{
			apow *= alpha;
			const BigComplex z = BigComplex(BigReal(n)) + r;
			if (!gamma_live)
			{
				if (z.re() > BigReal(-1l) && !z.is_zero())
				{
					gam = gamma_complex(z);
					gamma_live = true;
				}
				else
					gam = BigComplex(1l);
			}
			else if (n > 1)
				gam *= (z - BigComplex(1l));
			c[n] = seq[n]*apow/gam;
		}

		// boundedness diagnostic: the tail quartile must not outgrow the
		// previous one
		BigReal q3(0l), q4(0l);
		for (long n = N/2; n < 3*N/4; ++n)
			if (abs(c[n]) > q3) q3 = abs(c[n]);
		for (long n = 3*N/4; n <= N; ++n)
			if (abs(c[n]) > q4) q4 = abs(c[n]);
		if (q4 > BigReal(2l)*q3)
			throw DivergentFitError("fit_growth: c_n tail is growing; wrong alpha/r or non-factorial growth");

		// inverse-power fit over the tail window [N/2, N]
		const long lo = N/2;
		const long pts = std::min<long>(24, N - lo);
		std::vector<BigReal> nodes;
		std::vector<BigComplex> vals;
		for (long i = 0; i < pts; ++i)
		{
			const long n = lo + (i*(N - lo))/(pts - 1);
			nodes.push_back(BigReal(n));
			vals.push_back(c[n]);
		}
		auto sol = inverse_power_fit(nodes, vals, M);

		GrowthModel g;
		g.R = sol[0];
		g.R_m.assign(sol.begin() + 1, sol.end());
		g.alpha_or_Delta = alpha;
		g.r = r;
		g.rho = r.re();
		g.gamma = BigReal(1l);
		g.phi = BigReal(0l);

		// eps_k = |c_k / R - 1 - sum_m R_m / (R k^m)|
		const long step = std::max<long>(1, N/64);
		for (long n = lo; n <= N; n += step)
		{
			BigComplex model(1l);
			BigReal nk(1l);
			for (unsigned m = 1; m <= M; ++m)
			{
				nk *= BigReal(n);
				model += g.R_m[m - 1]/(g.R*BigComplex(nk));
			}
			g.eps_residuals.push_back(abs(c[n]/g.R - model));
		}
		return g;
	}

	Reconstruction reconstruct_equation(const CoeffSeq& seq, const GrowthModel& g, unsigned J)
	{
		const long N = seq.order();
		if (abs(g.R).is_zero())
			throw DomainError("reconstruct_equation: requires R != 0");
		if (N < 8*static_cast<long>(J) + 40)
			throw RangeError("reconstruct_equation: series too short (>= 20 J recommended)");
		if (seq[0].is_zero())
			throw DomainError("reconstruct_equation: s_0 must be nonzero (canonical normalization)");

		// The deflated tail statistic cancels ~ (J+2) log2(N) bits; escalate
		// so the noise floor shrinks as the series grows.
		const Precision p_base = seq[seq.size() - 1].precision();
		const Precision p_int = p_base + static_cast<Precision>((J + 2)*std::ceil(std::log2(static_cast<double>(N)))) + 32;

		std::vector<BigComplex> s;
		s.reserve(N + 1);
		for (long n = 0; n <= N; ++n)
			s.push_back(seq[n].round_to(p_int));

		const BigComplex alpha = g.alpha_or_Delta.round_to(p_int);
		const BigComplex r = g.r.round_to(p_int);

		std::vector<BigComplex> a(J + 1, BigComplex(0l, p_int));
		std::vector<BigComplex> b(J + 1, BigComplex(0l, p_int));
		a[0] = alpha;
		if (J >= 1)
			a[1] = -r;
		const BigComplex a1 = -r;
		const BigComplex b2 = (alpha*s[1] - (r + a1)*s[0])/s[0];
		if (J >= 2)
			b[2] = b2;

		// b_{m+1} from the exact order-m recurrence equation
		auto exact_b = [&](long m) -> BigComplex {
			BigComplex rhs = alpha*BigComplex(BigReal(m, p_int))*s[m]
				- BigComplex(BigReal(m, p_int))*(BigComplex(BigReal(m - 1, p_int)) + r)*s[m - 1]
				- (a1 + b2)*s[m - 1];
			for (long j = 2; j < m; ++j)
				rhs -= (BigComplex(BigReal(j - m, p_int))*a[j] + b[j + 1])*s[m - j];
			return rhs/s[0];
		};
		if (J >= 3)
			b[3] = exact_b(2);

		Reconstruction out;

		// The deflated residual
		//   D(a)_n = u_n - sum_{i=2}^{J} ((i-n) a_i + b_{i+1}(a)) s_{n-i}/s_{n-1}
		// is affine in (a_2..a_J) once the b-chain (exact in the a's) is
		// substituted, and for the true a's it equals the i > J tail,
		// O(n^{1-J}). One joint least-squares solve with tail columns
		// n^{1-J-m} then recovers every a_j at once; solving jointly rather
		// than peeling one a_j at a time keeps low-order estimate errors
		// from being re-amplified by the n^2 gearing between stages.
		auto deflated = [&](const std::vector<BigComplex>& atrial,
		                    const std::vector<long>& ns) -> std::vector<BigComplex> {
			// b-chain for this trial a-vector
			std::vector<BigComplex> bt(J + 2, BigComplex(0l, p_int));
			bt[2] = b2;
			for (long m = 2; m <= static_cast<long>(J); ++m)
			{
				BigComplex rhs = alpha*BigComplex(BigReal(m, p_int))*s[m]
					- BigComplex(BigReal(m, p_int))*(BigComplex(BigReal(m - 1, p_int)) + r)*s[m - 1]
					- (a1 + b2)*s[m - 1];
				for (long j = 2; j < m; ++j)
					rhs -= (BigComplex(BigReal(j - m, p_int))*atrial[j] + bt[j + 1])*s[m - j];
				bt[m + 1] = rhs/s[0];
			}
			std::vector<BigComplex> d;
			d.reserve(ns.size());
			for (long n : ns)
			{
				BigComplex u = alpha*BigComplex(BigReal(n, p_int))*s[n]/s[n - 1]
					- BigComplex(BigReal(n, p_int))*(BigComplex(BigReal(n - 1, p_int)) + r)
					- (a1 + b2);
				for (unsigned i = 2; i <= J; ++i)
					u -= (BigComplex(BigReal(static_cast<long>(i) - n, p_int))*atrial[i] + bt[i + 1])
					     *s[n - static_cast<long>(i)]/s[n - 1];
				d.push_back(u);
			}
			return d;
		};

		const long w = std::max<long>(40, N/5);
		const long st = std::max<long>(1, w/20);
		auto solve_window = [&](long n_lo, long n_hi) -> std::vector<BigComplex> {
			std::vector<long> ns;
			for (long n = n_lo; n <= n_hi; n += st)
				ns.push_back(n);

			std::vector<BigComplex> zero_a(J + 1, BigComplex(0l, p_int));
			const std::vector<BigComplex> q = deflated(zero_a, ns);

			std::vector<std::vector<BigComplex>> cols;
			for (unsigned i = 2; i <= J; ++i)
			{
				std::vector<BigComplex> ei = zero_a;
				ei[i] = BigComplex(1l, p_int);
				std::vector<BigComplex> di = deflated(ei, ns);
				for (std::size_t t = 0; t < ns.size(); ++t)
					di[t] = q[t] - di[t]; // the column multiplying a_i
				cols.push_back(std::move(di));
			}
			for (unsigned m = 0; m < 3; ++m)
			{
				std::vector<BigComplex> tc;
				tc.reserve(ns.size());
				for (long n : ns)
					tc.push_back(BigComplex(pow(BigReal(n, p_int),
					             1l - static_cast<long>(J) - static_cast<long>(m))));
				cols.push_back(std::move(tc));
			}
			auto sol = lsq_columns(cols, q);
			return {sol.begin(), sol.begin() + (J - 1)}; // a_2..a_J
		};

		auto a_win2 = solve_window(N - w + 1, N);
		auto a_win1 = solve_window(std::max<long>(static_cast<long>(J) + 2, N - 2*w + 1), N - w);
		for (unsigned j = 2; j <= J; ++j)
		{
			const BigComplex est2 = a_win2[j - 2];
			const BigReal diff = abs(a_win1[j - 2] - est2);
			const BigReal tol = BigReal(1e-6)*(BigReal(1l) + abs(est2));
			if (diff > BigReal(10l)*tol)
				throw IllConditionedError("reconstruct_equation: tail windows disagree for a_" + std::to_string(j));
			a[j] = est2;
			out.window_disagreement.push_back(diff.round_to(p_base));
		}
		// final b-chain at the solved a's
		for (long m = 2; m + 1 <= static_cast<long>(J); ++m)
			b[m + 1] = exact_b(m);

		std::vector<BigComplex> aa, bb;
		for (unsigned k = 0; k <= J; ++k)
		{
			aa.push_back(a[k].round_to(p_base));
			bb.push_back(b[k].round_to(p_base));
		}
		out.a = CoeffSeq(std::move(aa));
		out.b = CoeffSeq(std::move(bb));
		return out;
	}
}
