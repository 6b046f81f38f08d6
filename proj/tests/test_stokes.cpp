#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "asx/dawson.hpp"
#include "asx/stokes.hpp"
#include "asx/summation.hpp"

#include "test_util.hpp"

using namespace asx;
using asxtest::R;
using asxtest::check_close;

namespace
{
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
}

TEST_CASE("ref_ei against frozen oracle values")
{
	check_close(ref_ei(BigComplex(1l)),
	            BigComplex(R("0.697174883235066068765478681919551595317175431")), R("1e-42"));
	check_close(ref_ei(BigComplex(10l)),
	            BigComplex(R("0.113147020473410778034051681354477014764768156")), R("1e-42"));
	check_close(ref_ei(BigComplex(R(2), R(3))),
	            BigComplex(R("0.1491007153385036312814852343017267916816"),
	                       R("-0.6992477959176072253897876089099441666547")), R("1e-38"));
	// leading asymptote x e^{-x} Ei(x) -> 1
	check_close(BigComplex(R(300))*ref_ei(BigComplex(R(300))), BigComplex(1l), R("0.01"));
	CHECK_THROWS_AS(ref_ei(BigComplex(-2l)), BranchError);
	CHECK_THROWS_AS(ref_ei(BigComplex(0l)), DomainError);
}

TEST_CASE("ref_airy against frozen values and its differential equation")
{
	check_close(ref_airy(BigComplex(0l)),
	            BigComplex(R("0.355028053887817239260063186004183176397979174")), R("1e-42"));
	check_close(ref_airy(BigComplex(R("2.5"))),
	            BigComplex(R("0.0157259233804704899952660465407641684543158232")), R("1e-42"));
	check_close(ref_airy(BigComplex(R(-3))),
	            BigComplex(R("-0.378814293677658074347243916499674850504991436")), R("1e-40"));

	// Ai'' - x Ai = 0 by central differences at x = 1.7
	const BigReal h = R("1e-12");
	const BigComplex x(R("1.7"));
	const BigComplex d2 = (ref_airy(x + BigComplex(h)) - BigComplex(2l)*ref_airy(x)
	                       + ref_airy(x - BigComplex(h)))/BigComplex(h*h);
	check_close(d2, x*ref_airy(x), R("1e-18"));

	// classical asymptote as a sanity bound
	const BigComplex xa(R(40));
	const BigComplex z = pow(xa, BigComplex(R("1.5")));
	const BigComplex lead = ref_airy(xa)*BigComplex(2l)*BigComplex(sqrt(const_pi()))
		*pow(xa, BigComplex(R("0.25")))*exp(BigComplex(R("2/3"))*z);
	check_close(lead, BigComplex(1l), R("0.01"));

	CHECK_THROWS_AS(ref_airy(BigComplex(R(2000))), DomainError);
}

TEST_CASE("remainder_seq: definition and on-axis magnitude")
{
	GrowthModel g = ei_model();
	CoeffSeq seq = ei_series(80);
	Sampler f = [](const BigComplex& x) { return ref_ei(x); };

	// f = partial sum itself: E_n is the negated rescaled tail
	Sampler part = [&](const BigComplex& x) { return eval_truncated(seq, x, 21); };
	auto Es = remainder_seq(part, seq, g, BigComplex(30l), 25, 25);
	const BigComplex expect = -(seq[21]*pow(BigComplex(30l), -21l)
	                            + seq[22]*pow(BigComplex(30l), -22l)
	                            + seq[23]*pow(BigComplex(30l), -23l)
	                            + seq[24]*pow(BigComplex(30l), -24l)
	                            + seq[25]*pow(BigComplex(30l), -25l))*exp(BigComplex(30l));
	check_close(Es[0], expect, R("1e-40")*abs(expect));

	// E_{n_x}(x) at x = 40 is finite and O(1)
	auto E40 = remainder_seq(f, seq, g, BigComplex(40l), 40, 40);
	CHECK(abs(E40[0]) < BigReal(1l));
	CHECK(abs(E40[0]) > R("0.01"));

	// sqrt(n) E_n(n) ~ -(1/3) sqrt(2 pi)
	auto E100 = remainder_seq(f,1 ? ei_series(110) : seq, g, BigComplex(100l), 100, 100);
	check_close(BigComplex(BigReal(10l))*E100[0],
	            BigComplex(-sqrt(BigReal(2l)*const_pi())/BigReal(3l)), R("0.01"));
}

TEST_CASE("stokes_constant on the three Ei rays")
{
	GrowthModel g = ei_model();
	Sampler f = [](const BigComplex& x) { return ref_ei(x); };
	std::vector<BigReal> sched;
	for (long n = 20; n <= 44; n += 4)
		sched.push_back(BigReal(n));
	CoeffSeq seq = ei_series(60);

	const BigReal pi = const_pi();
	const BigComplex pii(BigReal(0l), pi);

	auto plus = stokes_constant(f, seq, g, Ray(pi/BigReal(3l), BigReal(2l)), sched);
	check_close(plus.C, pii, R("1e-6"));

	auto minus = stokes_constant(f, seq, g, Ray(-pi/BigReal(3l), BigReal(2l)), sched);
	check_close(minus.C, -pii, R("1e-6"));

	auto axis = stokes_constant(f, seq, g, Ray(BigReal(0l), BigReal(2l)), sched);
	check_close(axis.C, BigComplex(0l), R("1e-4"));

	// off-axis residuals decay at the predicted exponential rate
	CHECK(plus.convergence_rate < R("-0.4")); // cos(pi/3) - 1 = -0.5

	// the Stokes jump across the axis (a slow e^{-0.045 n} decay: longer
	// schedule, looser window tolerance)
	CoeffSeq seq2 = ei_series(100);
	std::vector<BigReal> sched2;
	for (long n = 20; n <= 80; n += 5)
		sched2.push_back(BigReal(n));
	auto up = stokes_constant(f, seq2, g, Ray(R("0.3"), BigReal(2l)), sched2, R("2e-3"));
	auto dn = stokes_constant(f, seq2, g, Ray(R("-0.3"), BigReal(2l)), sched2, R("2e-3"));
	check_close(up.C - dn.C, BigComplex(2l)*pii, R("5e-3"));
}

TEST_CASE("stokes_constant guards")
{
	GrowthModel g = ei_model();
	Sampler f = [](const BigComplex& x) { return ref_ei(x); };
	CoeffSeq seq = ei_series(30);
	std::vector<BigReal> sched{BigReal(10l), BigReal(14l), BigReal(18l), BigReal(22l), BigReal(26l), BigReal(28l)};
	// series too short for the largest n_x + 1
	CHECK_THROWS_AS(stokes_constant(f, seq, g, Ray(BigReal(0l), BigReal(2l)),
	                                std::vector<BigReal>{BigReal(10l), BigReal(14l), BigReal(18l),
	                                                     BigReal(22l), BigReal(26l), BigReal(35l)}),
	                RangeError);
	// a schedule that is not increasing
	CHECK_THROWS_AS(stokes_constant(f, seq, g, Ray(BigReal(0l), BigReal(2l)),
	                                std::vector<BigReal>{BigReal(10l), BigReal(9l), BigReal(18l),
	                                                     BigReal(22l), BigReal(26l), BigReal(28l)}),
	                DomainError);
	// a wrong sampler cannot converge to a constant: the two windows disagree
	Sampler wrong = [&](const BigComplex& x) {
		return ref_ei(x) + BigComplex(1l)/x; // O(1/x) error, huge after e^x rescale
	};
	CHECK_THROWS_AS(stokes_constant(wrong, seq, g, Ray(BigReal(0l), BigReal(2l)), sched),
	                NonConvergenceError);
}

TEST_CASE("phi_profile approaches a_star like n^{-1/2}")
{
	const BigReal a = a_star();
	const BigReal v4 = phi_profile(R("1e4"));
	const BigReal v6 = phi_profile(R("1e6"));
	CHECK(abs(v6 - a) < abs(v4 - a)); // deviation decreasing
	CHECK(abs(v6 - a) < R("1e-3"));
	CHECK(abs(v4 - a) < R("1e-2"));
	// limit profile: max location s* = sqrt(2) x*
	// (checked through the value at the rescaled Dawson peak)
	const BigReal s_star = sqrt(BigReal(2l))*dawson_max_location();
	check_close(s_star, R("1.30693"), R("1e-4"));
	CHECK_THROWS_AS(phi_profile(BigReal(5l)), DomainError);
}
