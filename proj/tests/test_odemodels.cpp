#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "asx/problems.hpp"

#include "test_util.hpp"

using namespace asx;
using asxtest::R;
using asxtest::check_close;

namespace
{
	SecondOrderProblem aiges()
	{
		return SecondOrderProblem::from_rational(
			{mpq_class(4, 3), mpq_class(1, 3)},
			{mpq_class(0), mpq_class(2, 9)},
			BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(1l)));
	}
}

TEST_CASE("characteristic_roots ordering and degenerate detection")
{
	auto [r1, r2] = characteristic_roots(BigComplex(1l), BigComplex(0l));
	check_close(r1, BigComplex(-1l), pow2(-250));
	check_close(r2, BigComplex(0l), pow2(-250));

	auto [s1, s2] = characteristic_roots(BigComplex(0l), BigComplex(-1l));
	check_close(s1, BigComplex(-1l), pow2(-250));
	check_close(s2, BigComplex(1l), pow2(-250));

	auto [t1, t2] = characteristic_roots(BigComplex(R("4/3")), BigComplex(0l));
	check_close(t1, BigComplex(R("-4/3")), pow2(-250));
	check_close(t2, BigComplex(0l), pow2(-250));

	// sum and product identities
	BigComplex a0(R("0.7"), R("-1.3")), b0(R("2.5"), R("0.4"));
	auto [u1, u2] = characteristic_roots(a0, b0);
	check_close(u1 + u2, -a0, pow2(-246));
	check_close(u1*u2, b0, pow2(-246));

	CHECK_THROWS_AS(characteristic_roots(BigComplex(2l), BigComplex(1l)), DegenerateRootsError);
}

TEST_CASE("formal exponents on the Aiges coefficients")
{
	const BigComplex a0(R("4/3")), a1(R("1/3")), b1(R("2/9"));
	check_close(formal_exponents(a0, a1, b1, BigComplex(0l)), BigComplex(R("-1/6")), pow2(-248));
	check_close(formal_exponents(a0, a1, b1, BigComplex(R("-4/3"))), BigComplex(R("-1/6")), pow2(-248));
	check_close(formal_exponents(BigComplex(1l), BigComplex(0l), BigComplex(0l), BigComplex(5l)),
	            BigComplex(0l), pow2(-250));
}

TEST_CASE("canonicalize: Aiges becomes the h-equation")
{
	auto [q, t] = canonicalize(aiges());

	check_close(t.lambda1, BigComplex(0l), pow2(-248));
	check_close(t.lambda2, BigComplex(R("-4/3")), pow2(-248));
	check_close(t.r1, BigComplex(R("-1/6")), pow2(-248));
	check_close(t.scale, BigComplex(R("3/4")), pow2(-248)); // s = 3t/4

	check_close(q.a[0], BigComplex(1l), pow2(-244));
	check_close(q.a[1], BigComplex(0l), pow2(-244));
	check_close(q.b[0], BigComplex(0l), pow2(-244));
	check_close(q.b[1], BigComplex(0l), pow2(-244));
	check_close(q.b[2], BigComplex(R("5/36")), pow2(-244));
	for (std::size_t k = 3; k < q.b.size(); ++k)
		check_close(q.b[k], BigComplex(0l), pow2(-244));

	// canonical r1 = 0
	check_close(formal_exponents(q.a[0], q.a[1], q.b[1], BigComplex(0l)), BigComplex(0l), pow2(-244));
}

TEST_CASE("canonicalize: fixed point and idempotence")
{
	SecondOrderProblem h = SecondOrderProblem::from_rational(
		{mpq_class(1)}, {mpq_class(0), mpq_class(0), mpq_class(5, 36)},
		BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(1l)));
	auto [q, t] = canonicalize(h);
	CHECK(t.identity);
	CHECK(q.exact_rational());

	auto [q2, t2] = canonicalize(canonicalize(aiges()).first);
	CHECK(t2.identity);
	check_close(q2.b[2], BigComplex(R("5/36")), pow2(-240));
}

TEST_CASE("canonicalize: constant-coefficient rescale")
{
	// a = 2, b = 0: |Delta| = 2, canonical a0 = 1
	SecondOrderProblem p = SecondOrderProblem::from_rational(
		{mpq_class(2)}, {mpq_class(0)}, BigReal(mpq_class(1, 4)), Ray(BigReal(0l), BigReal(1l)));
	auto [q, t] = canonicalize(p);
	check_close(q.a[0], BigComplex(1l), pow2(-246));
	check_close(t.scale, BigComplex(R("0.5")), pow2(-246));
	check_close(abs(t.Delta), R(2), pow2(-246));
	for (std::size_t k = 0; k < q.b.size(); ++k)
		check_close(q.b[k], BigComplex(0l), pow2(-244));
}

TEST_CASE("canonicalize transforms closed forms consistently")
{
	SecondOrderProblem p = aiges();
	p.a_closed = [](const BigComplex& x) {
		return BigComplex(R("4/3")) + BigComplex(R("1/3"))/x;
	};
	p.b_closed = [](const BigComplex& x) {
		return BigComplex(R("2/9"))/x;
	};
	auto [q, t] = canonicalize(p);
	REQUIRE(static_cast<bool>(q.a_closed));
	// transformed closed forms must match the transformed series
	const BigComplex x(R(7));
	check_close(q.a_closed(x), eval_truncated(q.a, x, q.a.size()), R("1e-60"));
	check_close(q.b_closed(x), eval_truncated(q.b, x, q.b.size()), R("1e-60"));
}

TEST_CASE("validate_gevrey verdicts")
{
	// finite coefficient lists pass for any kappa
	SecondOrderProblem h = SecondOrderProblem::from_rational(
		{mpq_class(1)}, {mpq_class(0), mpq_class(0), mpq_class(5, 36)},
		BigReal(mpq_class(1, 100)), Ray(BigReal(0l), BigReal(1l)));
	auto rep = validate_gevrey(h, 40);
	CHECK(rep.pass);

	// a_n = 3^n n! with kappa = 2: ratios (3/2)^n diverge
	std::vector<mpq_class> bad;
	mpq_class v(1);
	for (int n = 0; n <= 40; ++n)
	{
		bad.push_back(v);
		v *= 3*(n + 1);
	}
	SecondOrderProblem pb = SecondOrderProblem::from_rational(
		bad, {mpq_class(0)}, BigReal(2l), Ray(BigReal(0l), BigReal(1l)));
	// bypass the constructor invariant check (kappa bound) on purpose:
	// validate_gevrey is report-style and must still run
	auto rep2 = validate_gevrey(pb, 40);
	CHECK(!rep2.pass);

	// a_n = n! with kappa = 1: ratios identically 1, bound constant 1
	std::vector<mpq_class> edge;
	mpq_class w(1);
	for (int n = 0; n <= 40; ++n)
	{
		edge.push_back(w);
		w *= (n + 1);
	}
	SecondOrderProblem pe = SecondOrderProblem::from_rational(
		edge, {mpq_class(0)}, BigReal(1l), Ray(BigReal(0l), BigReal(1l)));
	auto rep3 = validate_gevrey(pe, 40);
	CHECK(rep3.pass);
	check_close(rep3.bound_constant, R(1), pow2(-240));
}

TEST_CASE("airy_chain wiring")
{
	AiryChain c = airy_chain();
	CHECK(c.h_equation.exact_rational());
	CHECK(c.h_equation.a_rat[0] == mpq_class(1));
	CHECK(c.h_equation.b_rat[2] == mpq_class(5, 36));

	check_close(c.aiges_to_h.lambda1, BigComplex(0l), pow2(-246));
	check_close(c.aiges_to_h.lambda2, BigComplex(R("-4/3")), pow2(-246));
	check_close(c.aiges_to_h.r1, BigComplex(R("-1/6")), pow2(-246));
	check_close(c.aiges_to_h.r2, BigComplex(R("-1/6")), pow2(-246));

	// h-equation roots and exponents: lambda = {0, -1}, r1 = r2 = 0
	auto [l1, l2] = characteristic_roots(c.h_equation.a[0], c.h_equation.b[0]);
	check_close(l1, BigComplex(-1l), pow2(-248));
	check_close(l2, BigComplex(0l), pow2(-248));

	// x(t) and t(x) are inverse
	const BigComplex t0(R(17));
	check_close(c.t_of_airy_x(c.airy_x_of_t(t0)), t0, R("1e-60"));
	// f_k = (3/4)^k h_k factor
	CHECK(c.series_coeff_factor(3) == mpq_class(27, 64));

	// Gevrey passes for arbitrarily small kappa (finite coefficients)
	SecondOrderProblem tight = c.h_equation;
	tight.kappa = BigReal(mpq_class(1, 1000));
	CHECK(validate_gevrey(tight, 60).pass);
}

TEST_CASE("problem invariant validation")
{
	// kappa too large for the discriminant
	SecondOrderProblem p = SecondOrderProblem::from_rational(
		{mpq_class(1)}, {mpq_class(0)}, BigReal(2l), Ray(BigReal(0l), BigReal(1l)));
	CHECK_THROWS_AS(p.validate(), SchemaError);

	FirstOrderProblem f = FirstOrderProblem::from_rational(
		{{mpq_class(0), mpq_class(1)}, {mpq_class(-1)}},
		BigReal(1l), BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(2l)));
	CHECK_NOTHROW(f.validate());
	check_close(f.alpha(), BigComplex(1l), pow2(-250));

	// f_{0,0} != 0 violates the schema
	FirstOrderProblem g = FirstOrderProblem::from_rational(
		{{mpq_class(1)}, {mpq_class(-1)}},
		BigReal(1l), BigReal(mpq_class(1, 2)), Ray(BigReal(0l), BigReal(2l)));
	CHECK_THROWS_AS(g.validate(), SchemaError);
}
