#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "asx/formal.hpp"
#include "asx/gammafn.hpp"

#include "asx/oracles.hpp"
#include "test_util.hpp"

#include <random>

using namespace asx;
using asxtest::R;
using asxtest::check_close;

namespace
{
	SecondOrderProblem h_equation()
	{
		return SecondOrderProblem::from_rational(
			{mpq_class(1)}, {mpq_class(0), mpq_class(0), mpq_class(5, 36)},
			BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(1l)));
	}
}

TEST_CASE("linear_series: h-equation low orders and trivial case")
{
	auto s = linear_series_exact(h_equation(), 2);
	CHECK(s[0] == mpq_class(1));
	CHECK(s[1] == mpq_class(5, 36));
	CHECK(s[2] == mpq_class(385, 2592));

	// y'' + y' = 0: constant series
	SecondOrderProblem triv = SecondOrderProblem::from_rational(
		{mpq_class(1)}, {mpq_class(0)}, BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(1l)));
	auto st = linear_series_exact(triv, 10);
	for (int k = 1; k <= 10; ++k)
		CHECK(st[k] == 0);
}

TEST_CASE("linear_series agrees exactly with the power-matching oracle")
{
	// the recurrence is trusted only after this check (including its
	// summation bound n >= j >= 2 and the b_{j+1} index)
	auto s = linear_series_exact(h_equation(), 60);
	auto res = asx::oracles::linear_residual({mpq_class(1)},
	                                    {mpq_class(0), mpq_class(0), mpq_class(5, 36)}, s, 61);
	for (std::size_t m = 0; m <= 61; ++m)
		CHECK(res[m] == 0);

	// randomized canonical problems with finitely many rational coefficients
	std::mt19937 rng(20240817u);
	std::uniform_int_distribution<int> num(-6, 6);
	std::uniform_int_distribution<int> den(1, 5);
	std::uniform_int_distribution<int> len(1, 4);
	for (int trial = 0; trial < 10; ++trial)
	{
		std::vector<mpq_class> a{mpq_class(1)};
		std::vector<mpq_class> b{mpq_class(0), mpq_class(0)};
		const int la = len(rng), lb = len(rng);
		for (int i = 0; i < la; ++i)
			a.push_back(mpq_class(num(rng), den(rng)));
		for (int i = 0; i < lb; ++i)
			b.push_back(mpq_class(num(rng), den(rng)));
		SecondOrderProblem p = SecondOrderProblem::from_rational(
			a, b, BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(1l)));
		auto sx = linear_series_exact(p, 60);
		auto r = asx::oracles::linear_residual(a, b, sx, 60);
		for (std::size_t m = 0; m <= 60; ++m)
		{
			if (!(r[m] == 0))
			{
				CAPTURE(trial);
				CAPTURE(m);
			}
			CHECK(r[m] == 0);
		}
	}
}

TEST_CASE("nonlinear_series: Ei, quadratic example, zero solution, oracle")
{
	// y' = -y + 1/x: s_k = (k-1)!
	FirstOrderProblem ei = FirstOrderProblem::from_rational(
		{{mpq_class(0), mpq_class(1)}, {mpq_class(-1)}},
		BigReal(1l), BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(2l)));
	auto s = nonlinear_series_exact(ei, 8);
	mpq_class fact(1);
	for (int k = 1; k <= 8; ++k)
	{
		CHECK(s[k] == fact);
		fact *= k;
	}

	// y' = -y + 1/x^2 + y^2: s = (0, 0, 1, 2, 7, ...)
	FirstOrderProblem quad = FirstOrderProblem::from_rational(
		{{mpq_class(0), mpq_class(0), mpq_class(1)}, {mpq_class(-1)}, {mpq_class(1)}},
		BigReal(1l), BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(2l)));
	mpq_class rq;
	auto sq = nonlinear_series_exact(quad, 4, &rq);
	CHECK(sq[1] == 0);
	CHECK(sq[2] == 1);
	CHECK(sq[3] == 2);
	CHECK(sq[4] == 7);
	CHECK(rq == 0);

	// f_0 = 0: the zero solution
	FirstOrderProblem z = FirstOrderProblem::from_rational(
		{{mpq_class(0)}, {mpq_class(-1)}},
		BigReal(1l), BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(2l)));
	auto sz = nonlinear_series_exact(z, 10);
	for (int k = 0; k <= 10; ++k)
		CHECK(sz[k] == 0);

	// randomized problems, P <= 3, few nonzero f_{p,k}, N <= 25
	std::mt19937 rng(77031u);
	std::uniform_int_distribution<int> num(-4, 4);
	std::uniform_int_distribution<int> den(1, 4);
	std::uniform_int_distribution<int> pd(1, 3);
	std::uniform_int_distribution<int> kd(0, 3);
	for (int trial = 0; trial < 10; ++trial)
	{
		const int P = pd(rng);
		std::vector<std::vector<mpq_class>> f(P + 1, std::vector<mpq_class>(4, mpq_class(0)));
		f[1][0] = mpq_class(-1); // alpha = 1 keeps the ray condition simple
		for (int nz = 0; nz < 4; ++nz)
		{
			int p = std::min<int>(P, pd(rng));
			int k = kd(rng);
			if (p == 0 && k == 0)
				k = 1; // keep f_{0,0} = 0
			if (p == 1 && k == 0)
				continue; // do not disturb alpha
			f[p][k] = mpq_class(num(rng), den(rng));
		}
		FirstOrderProblem rp = FirstOrderProblem::from_rational(
			f, BigReal(1l), BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(2l)));
		auto sr = nonlinear_series_exact(rp, 25);
		auto res = asx::oracles::nonlinear_residual(f, sr, 25);
		for (std::size_t m = 0; m <= 25; ++m)
		{
			if (!(res[m] == 0))
			{
				CAPTURE(trial);
				CAPTURE(m);
			}
			CHECK(res[m] == 0);
		}
	}
}

TEST_CASE("airy_coeffs: recurrence equals closed form exactly")
{
	auto hc = airy_coeffs(200);
	CHECK(hc.recurrence[0] == mpq_class(1));
	CHECK(hc.recurrence[1] == mpq_class(5, 36));
	for (long n = 0; n <= 200; ++n)
		CHECK(hc.recurrence[n] == hc.closed_form[n]);

	// and against the Gamma closed form in floating point at a few spots:
	// h_n 2 pi Gamma(n+1) / (Gamma(n+5/6) Gamma(n+1/6)) = 1
	for (long n : {1l, 7l, 50l, 200l})
	{
		const BigReal nn(n);
		const BigComplex g = gamma_complex(BigComplex(nn + R("5/6")))
			*gamma_complex(BigComplex(nn + R("1/6")))
			/gamma_complex(BigComplex(nn + BigReal(1l)));
		const BigReal twopi = BigReal(2l)*const_pi();
		check_close(BigComplex(BigReal(hc.recurrence[n]))*BigComplex(twopi)/g,
		            BigComplex(1l), R("1e-60"));
	}
}

TEST_CASE("fit_growth: exact factorial model and the Airy tail")
{
	// s_n = Gamma(n + r) alpha^{-n} exactly -> R = 1, R_m = 0
	const BigComplex alpha(R("0.8"));
	const BigComplex r(R("0.25"));
	std::vector<BigComplex> s;
	BigComplex apow(1l), g = gamma_complex(BigComplex(1l) + r);
	s.push_back(BigComplex(1l)); // s_0 unused by the fit
	for (long n = 1; n <= 120; ++n)
	{
		if (n > 1)
			g *= (BigComplex(BigReal(n - 1)) + r);
		apow /= alpha;
		s.push_back(g*apow);
	}
	GrowthModel m = fit_growth(CoeffSeq(s), alpha, r, 2);
	check_close(m.R, BigComplex(1l), R("1e-40"));
	check_close(m.R_m[0], BigComplex(0l), R("1e-35"));
	CHECK(m.eps_residuals.back() < R("1e-38"));

	// Airy h_n -> R = 1/(2 pi)
	auto hc = airy_coeffs(800);
	GrowthModel ma = fit_growth(hc.recurrence_f, BigComplex(1l), BigComplex(0l), 2);
	const BigReal inv2pi = BigReal(1l)/(BigReal(2l)*const_pi());
	check_close(ma.R, BigComplex(inv2pi), R("1e-6"));

	// |c_n - 1/2pi| = O(1/n): residual at the last tail sample is small
	CHECK(ma.eps_residuals.back() < R("1e-2"));

	// window stability to 1e-8: refit on [N/2, 3N/4] only
	std::vector<BigComplex> head(hc.recurrence_f.coeffs().begin(),
	                             hc.recurrence_f.coeffs().begin() + 601);
	GrowthModel mb = fit_growth(CoeffSeq(head), BigComplex(1l), BigComplex(0l), 2);
	check_close(ma.R, mb.R, R("1e-8"));

	// Ei series s_k = (k-1)!: R = 1 against Gamma(n)
	std::vector<BigComplex> ei;
	ei.push_back(BigComplex(0l));
	BigReal fact(1l);
	for (long k = 1; k <= 80; ++k)
	{
		ei.push_back(BigComplex(fact));
		fact *= BigReal(k);
	}
	GrowthModel me = fit_growth(CoeffSeq(ei), BigComplex(1l), BigComplex(0l), 2);
	check_close(me.R, BigComplex(1l), R("1e-30"));

	// growing c_n trips the divergence diagnostic (alpha off by 1.2)
	CHECK_THROWS_AS(fit_growth(CoeffSeq(ei), BigComplex(R("1.2")), BigComplex(0l), 2),
	                DivergentFitError);
}

TEST_CASE("reconstruct_equation: h-equation roundtrip and guards")
{
	auto hc = airy_coeffs(400);
	GrowthModel g = GrowthModel::exact(BigComplex(BigReal(1l)/(BigReal(2l)*const_pi())),
	                                   BigComplex(1l), BigComplex(0l));
	auto rec = reconstruct_equation(hc.recurrence_f, g, 4);
	check_close(rec.a[0], BigComplex(1l), R("1e-40"));
	check_close(rec.a[1], BigComplex(0l), R("1e-40"));
	check_close(rec.b[2], BigComplex(R("5/36")), R("1e-40"));
	check_close(rec.a[2], BigComplex(0l), R("1e-30"));
	check_close(rec.a[3], BigComplex(0l), R("1e-30"));
	check_close(rec.b[3], BigComplex(0l), R("1e-30"));
	check_close(rec.b[4], BigComplex(0l), R("1e-30"));

	// R = 0 violates the uniqueness hypothesis
	GrowthModel g0 = GrowthModel::exact(BigComplex(0l), BigComplex(1l), BigComplex(0l));
	CHECK_THROWS_AS(reconstruct_equation(hc.recurrence_f, g0, 4), DomainError);

	// tail-window instability is detected: perturb the tail incoherently
	std::vector<BigComplex> noisy = hc.recurrence_f.coeffs();
	std::mt19937 rng(5u);
	std::uniform_real_distribution<double> dis(-1e-7, 1e-7);
	for (std::size_t n = 2; n < noisy.size(); ++n)
		noisy[n] = noisy[n]*(BigComplex(1l) + BigComplex(dis(rng)));
	CHECK_THROWS_AS(reconstruct_equation(CoeffSeq(noisy), g, 4), IllConditionedError);
}

TEST_CASE("reconstruct_equation recovers a nontrivial rational equation")
{
	// canonical problem with infinitely many series coefficients in play:
	// a = 1 + 1/x + 1/(2x^2) - 1/(4x^3), b = x^{-2} (1/3 + 1/(5x) + 1/(7x^2))
	std::vector<mpq_class> a{mpq_class(1), mpq_class(1), mpq_class(1, 2), mpq_class(-1, 4)};
	std::vector<mpq_class> b{mpq_class(0), mpq_class(0), mpq_class(1, 3), mpq_class(1, 5), mpq_class(1, 7)};
	SecondOrderProblem p = SecondOrderProblem::from_rational(
		a, b, BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(1l)));
	const long N = 420;
	CoeffSeq s = linear_series(p, N);
	GrowthModel g = fit_growth(s, BigComplex(1l), BigComplex(-1l), 2);
	CHECK(abs(g.R) > R("1e-8")); // hypothesis R != 0 holds here

	GrowthModel gx = GrowthModel::exact(g.R, BigComplex(1l), BigComplex(-1l)); // r = -a_1
	auto rec = reconstruct_equation(s, gx, 4);
	check_close(rec.a[2], BigComplex(R("1/2")), R("1e-12"));
	check_close(rec.a[3], BigComplex(R("-1/4")), R("1e-9"));
	check_close(rec.b[2], BigComplex(R("1/3")), R("1e-40"));
	check_close(rec.b[3], BigComplex(R("1/5")), R("1e-40"));
	check_close(rec.b[4], BigComplex(R("1/7")), R("1e-12"));
}
