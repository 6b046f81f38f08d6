#include "asx/dawson.hpp"

namespace asx
{
	BigReal dawson(const BigReal& x)
	{
		const Precision prec = x.precision();
		if (x.is_zero())
			return BigReal(0l, prec);
		if (x.sign() < 0)
			return -dawson(-x);

		// cancellation allowance ~ e^{x^2}
		const double xd = x.to_double();
		const Precision work = prec + 32 + static_cast<Precision>(2.0*xd*xd/0.6931 + 1.0);
		const BigReal xw = x.round_to(work);
		const BigReal x2 = xw*xw;

		BigReal term = xw;          // k = 0 term: x / 1
		BigReal sum = term;
		const BigReal tol = pow2(-static_cast<long>(work) - 2, work);
		const BigReal two(2l, work);
		for (long k = 1; ; ++k)
		{
			term = term * (-two) * x2 / BigReal(2*k + 1, work);
			sum += term;
			if (abs(term) < tol)
				break;
			if (k > 64 && static_cast<double>(k) > 8.0*xd*xd + 64.0)
				break;
		}
		return sum.round_to(prec);
	}

	BigReal dawson_max_location(Precision prec)
	{
		if (!prec)
			prec = default_precision();
		const Precision work = prec + 16;
		BigReal a(0l, work);
		BigReal b(1.5, work);
		BigReal lo = BigReal::parse("1e-12", work);
		// golden ratio conjugate
		const BigReal gr = (sqrt(BigReal(5l, work)) - BigReal(1l, work)) / BigReal(2l, work);
		BigReal c = b - gr*(b - a);
		BigReal d = a + gr*(b - a);
		BigReal fc = dawson(c);
		BigReal fd = dawson(d);
		while (b - a > lo)
		{
			if (fc > fd)
			{
				b = d;
				d = c; fd = fc;
				c = b - gr*(b - a);
				fc = dawson(c);
			}
			else
			{
				a = c;
				c = d; fc = fd;
				d = a + gr*(b - a);
				fd = dawson(d);
			}
		}
		return ((a + b)/BigReal(2l, work)).round_to(prec);
	}

	BigReal a_star(Precision prec)
	{
		if (!prec)
			prec = default_precision();
		const Precision work = prec + 16;
		const BigReal xs = dawson_max_location(work);
		return (sqrt(BigReal(2l, work)) * dawson(xs)).round_to(prec);
	}
}
