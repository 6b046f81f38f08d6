#include "asx/acceptance.hpp"

#include "asx/dawson.hpp"
#include "asx/extrapolate.hpp"
#include "asx/decompose.hpp"
#include "asx/oracles.hpp"
#include "asx/problem_io.hpp"
#include "asx/stokes.hpp"
#include "asx/summation.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace asx
{
	namespace
	{
		using Clock = std::chrono::steady_clock;

		std::string fmt(const BigReal& v, int digits = 6)
		{
			return v.str(digits);
		}

		CoeffSeq ei_series(long N)
		{
			std::vector<BigComplex> c;
			c.push_back(BigComplex(0l));
			BigReal fact(1l);
			for (long k = 1; k <= N; ++k)
			{
				c.push_back(BigComplex(fact));
				fact *= BigReal(k);
			}
			return CoeffSeq(std::move(c));
		}

		GrowthModel ei_model()
		{
			return GrowthModel::exact(BigComplex(1l), BigComplex(1l), BigComplex(0l));
		}

		// 1. a_* matches the printed 0.765151 within 2e-5; stable to 1e-10
		//    under precision doubling; runs in under a second.
		CriterionResult c1()
		{
			CriterionResult r{1, "a_star value and stability"};
			const BigReal a256 = a_star(256);
			const BigReal a512 = a_star(512);
			const BigReal dev_paper = abs(a256 - BigReal::parse("0.765151"));
			const BigReal dev_prec = abs(a256 - a512.round_to(256));
			r.pass = dev_paper <= BigReal::parse("2e-5") && dev_prec <= BigReal::parse("1e-10");
			r.detail = "a* = " + a256.str(10) + ", |a* - 0.765151| = " + fmt(dev_paper)
				+ ", precision-doubling drift = " + fmt(dev_prec);
			return r;
		}

		// 2. Ei Stokes constants on theta = +-pi/3 within 1e-3 of +-pi i and
		//    0 on the axis, x-schedule up to 60 at 512 bits.
		CriterionResult c2()
		{
			CriterionResult r{2, "Ei Stokes constants on three rays"};
			PrecisionGuard guard(512);
			GrowthModel g = ei_model();
			Sampler f = [](const BigComplex& x) { return ref_ei(x); };
			CoeffSeq seq = ei_series(70);
			std::vector<BigReal> sched;
			for (long n = 20; n <= 60; n += 5)
				sched.push_back(BigReal(n));
			const BigReal pi = const_pi();
			const BigComplex pii(BigReal(0l), pi);
			const BigReal tol = BigReal::parse("1e-3");

			const auto plus = stokes_constant(f, seq, g, Ray(pi/BigReal(3l), BigReal(2l)), sched);
			const auto minus = stokes_constant(f, seq, g, Ray(-pi/BigReal(3l), BigReal(2l)), sched);
			const auto axis = stokes_constant(f, seq, g, Ray(BigReal(0l), BigReal(2l)), sched);
			const BigReal d1 = abs(plus.C - pii);
			const BigReal d2 = abs(minus.C + pii);
			const BigReal d3 = abs(axis.C);
			r.pass = d1 <= tol && d2 <= tol && d3 <= tol;
			r.detail = "|C(+pi/3) - pi i| = " + fmt(d1) + ", |C(-pi/3) + pi i| = " + fmt(d2)
				+ ", |C(0)| = " + fmt(d3);
			return r;
		}

		// 3. On-axis remainder law: extrapolated sqrt(n) E_n(n) within 5% of
		//    -(1/3) sqrt(2 pi), from samples n <= 400.
		CriterionResult c3()
		{
			CriterionResult r{3, "on-axis Ei remainder law"};
			GrowthModel g = ei_model();
			Sampler f = [](const BigComplex& x) { return ref_ei(x); };
			CoeffSeq seq = ei_series(410);
			std::vector<BigReal> ns;
			std::vector<BigComplex> vals; // sqrt(n) E_n(n)
			for (long n = 100; n <= 400; n += 50)
			{
				const BigComplex E = remainder_seq(f, seq, g, BigComplex(BigReal(n)), n, n)[0];
				ns.push_back(BigReal(n));
				vals.push_back(BigComplex(sqrt(BigReal(n)))*E);
			}
			// sqrt(n) E_n(n) = b0 + b1/n + b2/n^2 + ...
			const auto fitc = inverse_power_fit(ns, vals, 2);
			const BigReal target = -sqrt(BigReal(2l)*const_pi())/BigReal(3l);
			const BigReal dev = abs(fitc[0] - BigComplex(target))/abs(target);
			r.pass = dev <= BigReal::parse("0.05");
			r.detail = "extrapolated = " + fitc[0].re().str(8) + ", target = " + target.str(8)
				+ ", rel. dev = " + fmt(dev);
			return r;
		}

		// 4. Airy coefficients: recurrence equals closed form exactly up to
		//    n = 200 (rational arithmetic); fitted R within 1e-6 of 1/(2 pi)
		//    at N = 800.
		CriterionResult c4()
		{
			CriterionResult r{4, "Airy coefficients and growth constant"};
			auto hc = airy_coeffs(800);
			bool exact = true;
			for (long n = 0; n <= 200; ++n)
				exact = exact && (hc.recurrence[n] == hc.closed_form[n]);
			GrowthModel m = fit_growth(hc.recurrence_f, BigComplex(1l), BigComplex(0l), 2);
			const BigReal inv2pi = BigReal(1l)/(BigReal(2l)*const_pi());
			const BigReal dev = abs(m.R - BigComplex(inv2pi));
			r.pass = exact && dev <= BigReal::parse("1e-6");
			r.detail = std::string("recurrence == closed form (n <= 200): ")
				+ (exact ? "exact" : "MISMATCH") + ", |R - 1/2pi| = " + fmt(dev);
			return r;
		}

		// 5. Sup statistic for c_j = Gamma(j): on-axis within 2% of a_* at
		//    |x| = 200 with the argmax inside the flanking window; off-axis
		//    (theta = pi/2) the un-normalized sup stays bounded.
		CriterionResult c5()
		{
			CriterionResult r{5, "factorial-model sup statistic"};
			std::vector<BigComplex> c{BigComplex(1l)};
			BigReal g(1l);
			for (long j = 1; j <= 440; ++j)
			{
				c.push_back(BigComplex(g));
				g *= BigReal(j);
			}
			CoeffSeq seq(c);
			const BigReal astar = a_star();
			const long k0 = 25; // the statistic's "k_0 large enough"

			auto st = sup_statistic(seq, BigComplex(200l), k0, BigReal(0l));
			const BigReal dev = abs(st.value - astar)/astar;
			auto [lo, hi] = flanking_indices(ei_model(), BigComplex(200l));
			const bool in_window = st.argmax_K >= lo && st.argmax_K <= hi;

			const BigReal pihalf = const_pi()/BigReal(2l);
			BigReal v[3];
			int i = 0;
			for (long ax : {50, 100, 200})
			{
				std::vector<BigComplex> cc(c.begin(), c.begin() + 2*ax + 41);
				v[i++] = sup_statistic(CoeffSeq(cc), polar(BigReal(ax), pihalf), 0, pihalf).value;
			}
			const bool bounded = v[1] <= BigReal(2l)*v[0] && v[2] <= BigReal(2l)*v[0];

			r.pass = dev <= BigReal::parse("0.02") && in_window && bounded;
			std::ostringstream d;
			d << "on-axis dev = " << fmt(dev).c_str() << ", argmax " << st.argmax_K
			  << " in [" << lo << ", " << hi << "]: " << (in_window ? "yes" : "NO")
			  << ", off-axis sups = {" << fmt(v[0], 4) << ", " << fmt(v[1], 4) << ", " << fmt(v[2], 4) << "}";
			r.detail = d.str();
			return r;
		}

		// 6. Least-term summation errors under e^{-|x|} (Ei at 10, 20, 40;
		//    Airy h-series at t = 10, 20 against Ai through the chain), and
		//    the x = 40 error shows the x^{-1/2} enhancement within 3x.
		CriterionResult c6()
		{
			CriterionResult r{6, "least-term truncation errors"};
			GrowthModel g = ei_model();
			CoeffSeq seq = ei_series(120);
			bool ok = true;
			std::ostringstream d;
			BigReal err40(0l);
			for (long xv : {10, 20, 40})
			{
				const BigComplex x(xv);
				const auto res = sum_least_term(seq, g, x);
				const BigReal err = abs(res.value - ref_ei(x));
				ok = ok && err < exp(BigReal(-xv));
				if (xv == 40)
					err40 = err;
				d << "Ei x=" << xv << ": err = " << fmt(err, 4) << "; ";
			}
			// enhancement: err * sqrt(x) e^x within a factor 3 of (1/3) sqrt(2 pi)
			const BigReal scale = err40*sqrt(BigReal(40l))*exp(BigReal(40l));
			const BigReal lead = sqrt(BigReal(2l)*const_pi())/BigReal(3l);
			const bool enh = scale > lead/BigReal(3l) && scale < lead*BigReal(3l);
			d << "x=40 enhancement ratio = " << fmt(scale/lead, 4) << "; ";

			// Airy: the alternating h-series against 2 sqrt(pi) x^{1/4} e^{t/2} Ai(x)
			auto hc = airy_coeffs(30);
			AiryChain chain = airy_chain();
			for (long tv : {10, 20})
			{
				const BigComplex t(tv);
				std::vector<BigComplex> alt;
				for (long k = 0; k < static_cast<long>(hc.recurrence.size()); ++k)
				{
					BigComplex v(BigReal(hc.recurrence[k]));
					alt.push_back(k % 2 ? -v : v);
				}
				GrowthModel ga = GrowthModel::exact(
					BigComplex(BigReal(1l)/(BigReal(2l)*const_pi())), BigComplex(1l), BigComplex(0l));
				const auto res = sum_least_term(CoeffSeq(alt), ga, t);
				const BigComplex x = chain.airy_x_of_t(t);
				const BigComplex ref = BigComplex(2l)*BigComplex(sqrt(const_pi()))
					*pow(x, BigComplex(BigReal(mpq_class(1, 4))))
					*exp(t*BigComplex(BigReal(mpq_class(1, 2))))*ref_airy(x);
				const BigReal err = abs(res.value - ref);
				ok = ok && err < exp(-BigReal(tv));
				d << "Airy t=" << tv << ": err = " << fmt(err, 4) << "; ";
			}
			r.pass = ok && enh;
			r.detail = d.str();
			return r;
		}

		// 7. Decomposition: the three exact cases at residual < 2^{-p+16}
		//    (p = 256) and a seeded random two-pole R under 1e-30.
		CriterionResult c7()
		{
			CriterionResult r{7, "rational-inhomogeneity decomposition"};
			const BigReal target = pow2(-256 + 16);
			std::vector<BigReal> grid{BigReal(10l)};
			std::ostringstream d;
			bool ok = true;

			auto run_case = [&](const char* name, const RationalFunction& rf, std::size_t terms,
			                    const BigReal& bound, const std::vector<BigReal>& gr) {
				auto dec = decompose_rational(rf, terms);
				const BigReal res = verify_decomposition(rf, dec, gr);
				ok = ok && res < bound;
				d << name << ": " << fmt(res, 4) << "; ";
				return dec;
			};

			RationalFunction r1;
			r1.poles.push_back({BigComplex(0l), {BigComplex(1l)}});
			auto d1 = run_case("1/x", r1, 64, target, grid);
			ok = ok && abs(d1.K - BigComplex(1l)) < target;

			RationalFunction r2;
			r2.poles.push_back({BigComplex(0l), {BigComplex(0l), BigComplex(1l)}});
			auto d2 = run_case("1/x^2", r2, 64, target, grid);
			ok = ok && abs(d2.K - BigComplex(1l)) < target
				&& abs(d2.eval_H(BigComplex(10l)) + BigComplex(BigReal(mpq_class(1, 10)))) < target;

			RationalFunction r3;
			r3.poles.push_back({BigComplex(1l), {BigComplex(1l)}});
			auto d3 = run_case("1/(x-1)", r3, 160, target, grid);
			ok = ok && abs(d3.K - BigComplex(exp(BigReal(1l)))) < target;

			// seeded random conjugate pair, simple + double orders
			std::mt19937 rng(271828u);
			std::uniform_real_distribution<double> re(-0.5, 0.8), im(0.5, 1.2), cs(-1.0, 1.0);
			const BigComplex loc(BigReal(re(rng)), BigReal(im(rng)));
			const BigComplex res1(BigReal(cs(rng)), BigReal(cs(rng)));
			const BigComplex res2(BigReal(cs(rng)), BigReal(cs(rng)));
			RationalFunction r4;
			r4.poles.push_back({loc, {res1, res2}});
			r4.poles.push_back({conj(loc), {conj(res1), conj(res2)}});
			run_case("random two-pole", r4, 128, BigReal::parse("1e-30"),
			         {BigReal(10l), BigReal(14l)});

			r.pass = ok;
			r.detail = d.str() + "(bound 2^-240 for the exact cases)";
			return r;
		}

		// 8. Reconstruction roundtrip on the h-equation: residual strictly
		//    decreasing over N in {200, 400, 800}; b_2 within 1e-6 at 800.
		CriterionResult c8()
		{
			CriterionResult r{8, "equation reconstruction roundtrip"};
			auto hc = airy_coeffs(800);
			GrowthModel g = GrowthModel::exact(
				BigComplex(BigReal(1l)/(BigReal(2l)*const_pi())), BigComplex(1l), BigComplex(0l));
			const mpq_class b2_true(5, 36);
			std::vector<BigReal> resid;
			BigReal b2dev(1l);
			std::ostringstream d;
			for (long N : {200l, 400l, 800l})
			{
				std::vector<BigComplex> pre(hc.recurrence_f.coeffs().begin(),
				                            hc.recurrence_f.coeffs().begin() + N + 1);
				auto rec = reconstruct_equation(CoeffSeq(pre), g, 4);
				BigReal worst(0l);
				auto upd = [&worst](const BigReal& v) { if (v > worst) worst = v; };
				upd(abs(rec.a[0] - BigComplex(1l)));
				upd(abs(rec.a[1]));
				upd(abs(rec.a[2]));
				upd(abs(rec.a[3]));
				upd(abs(rec.a[4]));
				upd(abs(rec.b[2] - BigComplex(BigReal(b2_true))));
				upd(abs(rec.b[3]));
				upd(abs(rec.b[4]));
				resid.push_back(worst);
				if (N == 800)
					b2dev = abs(rec.b[2] - BigComplex(BigReal(b2_true)));
				d << "N=" << N << ": resid = " << fmt(worst, 4) << "; ";
			}
			const bool decreasing = resid[1] < resid[0] && resid[2] < resid[1];
			r.pass = decreasing && b2dev <= BigReal::parse("1e-6");
			d << "b2 dev at 800 = " << fmt(b2dev, 4);
			r.detail = d.str();
			return r;
		}

		// 9. Recurrence oracles: exact power-matching agreement on the
		//    bundled problems and 10 randomized ones of each class.
		CriterionResult c9()
		{
			CriterionResult r{9, "recurrence vs power-matching oracles"};
			bool ok = true;
			long checked = 0;

			// bundled: h-equation (via the airy chain) and the Ei problem
			{
				auto chain = airy_chain();
				auto s = linear_series_exact(chain.h_equation, 60);
				auto res = oracles::linear_residual(chain.h_equation.a_rat,
				                                    chain.h_equation.b_rat, s, 61);
				for (const auto& v : res)
					ok = ok && v == 0;
				++checked;
			}
			{
				FirstOrderProblem ei = FirstOrderProblem::from_rational(
					{{mpq_class(0), mpq_class(1)}, {mpq_class(-1)}},
					BigReal(1l), BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(2l)));
				auto s = nonlinear_series_exact(ei, 30);
				auto res = oracles::nonlinear_residual(ei.f_rat, s, 30);
				for (const auto& v : res)
					ok = ok && v == 0;
				++checked;
			}

			std::mt19937 rng(161803u);
			std::uniform_int_distribution<int> num(-6, 6), den(1, 5), len(1, 4);
			for (int trial = 0; trial < 10; ++trial)
			{
				std::vector<mpq_class> a{mpq_class(1)};
				std::vector<mpq_class> b{mpq_class(0), mpq_class(0)};
				for (int i = 0, la = len(rng); i < la; ++i)
					a.push_back(mpq_class(num(rng), den(rng)));
				for (int i = 0, lb = len(rng); i < lb; ++i)
					b.push_back(mpq_class(num(rng), den(rng)));
				SecondOrderProblem p = SecondOrderProblem::from_rational(
					a, b, BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(1l)));
				auto s = linear_series_exact(p, 60);
				auto res = oracles::linear_residual(a, b, s, 60);
				for (const auto& v : res)
					ok = ok && v == 0;
				++checked;
			}
			std::uniform_int_distribution<int> pd(1, 3), kd(0, 3);
			for (int trial = 0; trial < 10; ++trial)
			{
				const int P = pd(rng);
				std::vector<std::vector<mpq_class>> f(P + 1, std::vector<mpq_class>(4, mpq_class(0)));
				f[1][0] = mpq_class(-1);
				for (int nz = 0; nz < 4; ++nz)
				{
					int p = std::min<int>(P, pd(rng));
					int k = kd(rng);
					if (p == 0 && k == 0)
						k = 1;
					if (p == 1 && k == 0)
						continue;
					f[p][k] = mpq_class(num(rng), den(rng));
				}
				FirstOrderProblem rp = FirstOrderProblem::from_rational(
					f, BigReal(1l), BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(2l)));
				auto s = nonlinear_series_exact(rp, 25);
				auto res = oracles::nonlinear_residual(f, s, 25);
				for (const auto& v : res)
					ok = ok && v == 0;
				++checked;
			}
			r.pass = ok;
			r.detail = std::to_string(checked) + " problems matched exactly (rational arithmetic)";
			return r;
		}

		// 10. The a(theta) law and the phi-ODE route to a_*.
		CriterionResult c10()
		{
			CriterionResult r{10, "a(theta) law and phi profile"};
			const BigReal one_dev = abs(a_theta(const_pi()) - BigReal(1l));
			const BigReal th = BigReal::parse("0.01");
			const BigReal prod = th*a_theta(th);
			const bool prod_ok = prod >= BigReal::parse("0.99") && prod <= BigReal::parse("1.01");
			const BigReal phi6 = phi_profile(BigReal::parse("1e6"));
			const BigReal phi_dev = abs(phi6 - a_star());
			r.pass = one_dev <= pow2(-240) && prod_ok && phi_dev <= BigReal::parse("1e-3");
			r.detail = "|a(pi) - 1| = " + fmt(one_dev, 4) + ", theta*a(theta)|_{0.01} = "
				+ prod.str(6) + ", |phi(1e6) - a*| = " + fmt(phi_dev, 4);
			return r;
		}
	}

	std::vector<CriterionResult> run_acceptance(const std::vector<int>& which,
	                                            const std::function<void(const CriterionResult&)>& on_done)
	{
		using Runner = CriterionResult (*)();
		const Runner runners[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
		std::vector<CriterionResult> out;
		for (int id = 1; id <= 10; ++id)
		{
			if (!which.empty() && std::find(which.begin(), which.end(), id) == which.end())
				continue;
			const auto t0 = Clock::now();
			CriterionResult res;
			try
			{
				res = runners[id - 1]();
			}
			catch (const std::exception& e)
			{
				res.id = id;
				res.name = "criterion " + std::to_string(id);
				res.pass = false;
				res.detail = std::string("exception: ") + e.what();
			}
			res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
			// runtime limits that are part of the criteria
			if (res.id == 1 && res.seconds >= 1.0)
			{
				res.pass = false;
				res.detail += " [over 1 s runtime budget]";
			}
			if (res.id == 2 && res.seconds >= 90.0)
			{
				res.pass = false;
				res.detail += " [over 30 s/ray runtime budget]";
			}
			if (res.id == 3 && res.seconds >= 60.0)
			{
				res.pass = false;
				res.detail += " [over 60 s runtime budget]";
			}
			if (on_done)
				on_done(res);
			out.push_back(std::move(res));
		}
		return out;
	}
}
