#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "asx/bigcomplex.hpp"
#include "asx/dawson.hpp"

#include "test_util.hpp"

using namespace asx;
using asxtest::R;
using asxtest::check_close;

TEST_CASE("precision propagation and arithmetic basics")
{
	CHECK(default_precision() == 256);
	BigReal a(1l);
	CHECK(a.precision() == 256);
	BigReal b(1l, 512);
	CHECK((a + b).precision() == 512);

	BigReal third = BigReal(1l)/BigReal(3l);
	BigReal third_hi = BigReal(1l, 512)/BigReal(3l, 512);
	// re-evaluating at doubled precision moves the value by < 2^-248
	check_close(third, third_hi.round_to(256), pow2(-248));

	CHECK_THROWS_AS(set_default_precision(32), DomainError);
}

TEST_CASE("parse handles decimals and exact rationals")
{
	check_close(R("0.5"), BigReal(1l)/BigReal(2l), pow2(-250));
	check_close(R("5/36"), BigReal(5l)/BigReal(36l), pow2(-250));
	check_close(R("-1.25e-3"), BigReal(mpq_class(-1, 800)), pow2(-250));
	CHECK_THROWS_AS(BigReal::parse("zebra"), SchemaError);
	CHECK(R("5/36") == BigReal(mpq_class(5, 36)));
}

TEST_CASE("roundtrip rendering reloads to the identical value")
{
	BigReal v = sqrt(BigReal(2l));
	std::string s = v.str_roundtrip();
	check_close(BigReal::parse(s), v, pow2(-254));
}

TEST_CASE("complex field and principal branch functions")
{
	BigComplex i(BigReal(0l), BigReal(1l));
	BigComplex z = BigComplex(3l) + BigComplex(4l)*i;
	check_close(abs(z), R(5), pow2(-250));

	check_close(exp(log(z)), z, pow2(-246)*abs(z));
	check_close(sqrt(z)*sqrt(z), z, pow2(-246)*abs(z));
	check_close(pow(z, -3l)*pow(z, 3l), BigComplex(1l), pow2(-246));

	// principal log of a negative real has arg = pi
	BigComplex m1(-1l);
	check_close(log(m1).im(), const_pi(), pow2(-250));

	CHECK_THROWS_AS(BigComplex(1l)/BigComplex(0l), DomainError);
}

TEST_CASE("digamma: psi(1) = -euler, recurrence, asymptote")
{
	check_close(digamma_real(BigReal(1l)), -const_euler(), pow2(-248));
	// psi(2) = psi(1) + 1
	check_close(digamma_real(BigReal(2l)), BigReal(1l) - const_euler(), pow2(-248));
	// psi(s) - ln s -> 0; at s = 1e6 the gap is ~ -5e-7
	BigReal s = R("1e6");
	check_close(digamma_real(s) - log(s), R("-5.0000008333333333332e-7"), R("1e-20"));
	CHECK_THROWS_AS(digamma_real(BigReal(0l)), DomainError);
}

TEST_CASE("dawson function and a_star")
{
	// frozen oracle digits (mpmath, 40+ digits)
	check_close(dawson(R("0.9241388730045917670128232715043459756963")),
	            R("0.5410442246351816984727593302414771863906"), R("1e-35"));

	BigReal xs = dawson_max_location();
	check_close(xs, R("0.9241388730045917670128232715"), R("1e-11"));

	BigReal as = a_star();
	// x* localized to 1e-12 and D is stationary there, so the value
	// is good to ~|D''| * (1e-12)^2 / 2 ~ 5e-25
	check_close(as, R("0.7651520803227093817085058848280658113"), R("1e-24"));
	// paper's printed digits
	check_close(as, R("0.765151"), R("2e-5"));
	// factored identity a_* = sqrt(2) D(x*) with D(x*) ~ 0.54104
	check_close(dawson(xs), R("0.54104"), R("1e-4"));
	check_close(as, sqrt(BigReal(2l))*dawson(xs), pow2(-240));
	// stationarity: D'(x*) = 1 - 2 x* D(x*) = 0
	check_close(BigReal(1l) - BigReal(2l)*xs*dawson(xs), BigReal(0l), R("1e-11"));

	// stability under precision doubling
	BigReal as2 = a_star(512);
	check_close(as, as2.round_to(256), R("1e-10"));

	// escalated-series branch beyond the max search interval
	// D(3) = 0.17827103061087773 (alternating series with ~e^9 cancellation)
	check_close(dawson(R(3)), R("0.178271030610558287342599492241"), R("1e-28"));
}
