// Complex scalar built from two BigReal components. MPFR has no complex
// layer in this toolchain, so the usual field operations, the principal
// log/sqrt/power and the argument live here. Conventions: arg in (-pi, pi],
// log is the principal branch.

#ifndef ASX_BIGCOMPLEX_HPP_
#define ASX_BIGCOMPLEX_HPP_

#include "asx/bigreal.hpp"

namespace asx
{
	class BigComplex
	{
	public:
		BigComplex() : _re(), _im() { }
		BigComplex(BigReal re) : _re(std::move(re)), _im(0l, _re.precision()) { }
		BigComplex(BigReal re, BigReal im) : _re(std::move(re)), _im(std::move(im)) { }
		BigComplex(long re, Precision prec = 0) : _re(re, prec), _im(0l, prec) { }
		BigComplex(int re, Precision prec = 0) : BigComplex(static_cast<long>(re), prec) { }
		BigComplex(double re, Precision prec = 0) : _re(re, prec), _im(0l, prec) { }
		BigComplex(const mpq_class& q, Precision prec = 0) : _re(q, prec), _im(0l, prec) { }

		static BigComplex zero(Precision prec)
		{
			return BigComplex(BigReal::zero(prec), BigReal::zero(prec));
		}

		const BigReal& re() const { return _re; }
		const BigReal& im() const { return _im; }
		BigReal& re() { return _re; }
		BigReal& im() { return _im; }

		Precision precision() const { return std::max(_re.precision(), _im.precision()); }

		BigComplex round_to(Precision prec) const
		{
			return BigComplex(_re.round_to(prec), _im.round_to(prec));
		}

		bool is_zero() const { return _re.is_zero() && _im.is_zero(); }
		bool is_real() const { return _im.is_zero(); }
		bool is_finite() const { return _re.is_finite() && _im.is_finite(); }

		std::string str(int digits = 20) const
		{
			return "(" + _re.str(digits) + ", " + _im.str(digits) + ")";
		}

	private:
		BigReal _re;
		BigReal _im;
	};

	inline BigComplex operator+(const BigComplex& a, const BigComplex& b)
	{
		return BigComplex(a.re() + b.re(), a.im() + b.im());
	}

	inline BigComplex operator-(const BigComplex& a, const BigComplex& b)
	{
		return BigComplex(a.re() - b.re(), a.im() - b.im());
	}

	inline BigComplex operator-(const BigComplex& a)
	{
		return BigComplex(-a.re(), -a.im());
	}

	inline BigComplex operator*(const BigComplex& a, const BigComplex& b)
	{
		return BigComplex(a.re()*b.re() - a.im()*b.im(), a.re()*b.im() + a.im()*b.re());
	}

	inline BigComplex operator*(const BigReal& a, const BigComplex& b)
	{
		return BigComplex(a*b.re(), a*b.im());
	}

	inline BigComplex operator*(const BigComplex& a, const BigReal& b) { return b*a; }

	inline BigComplex operator/(const BigComplex& a, const BigComplex& b)
	{
		// Smith's algorithm is unnecessary here: exponent range is huge.
		const BigReal d = b.re()*b.re() + b.im()*b.im();
		if (d.is_zero())
			throw DomainError("complex division by zero");
		return BigComplex((a.re()*b.re() + a.im()*b.im())/d, (a.im()*b.re() - a.re()*b.im())/d);
	}

	inline BigComplex operator/(const BigComplex& a, const BigReal& b)
	{
		return BigComplex(a.re()/b, a.im()/b);
	}

	inline BigComplex& operator+=(BigComplex& a, const BigComplex& b) { a = a + b; return a; }
	inline BigComplex& operator-=(BigComplex& a, const BigComplex& b) { a = a - b; return a; }
	inline BigComplex& operator*=(BigComplex& a, const BigComplex& b) { a = a * b; return a; }
	inline BigComplex& operator/=(BigComplex& a, const BigComplex& b) { a = a / b; return a; }

	inline bool operator==(const BigComplex& a, const BigComplex& b)
	{
		return a.re() == b.re() && a.im() == b.im();
	}
	inline bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

	inline BigReal abs(const BigComplex& a) { return hypot(a.re(), a.im()); }
	inline BigReal arg(const BigComplex& a) { return atan2(a.im(), a.re()); }
	inline BigComplex conj(const BigComplex& a) { return BigComplex(a.re(), -a.im()); }

	inline BigComplex exp(const BigComplex& a)
	{
		const BigReal m = exp(a.re());
		return BigComplex(m*cos(a.im()), m*sin(a.im()));
	}

	// Principal logarithm; branch cut on the negative real axis.
	inline BigComplex log(const BigComplex& a)
	{
		if (a.is_zero())
			throw DomainError("log of zero");
		return BigComplex(log(abs(a)), arg(a));
	}

	inline BigComplex sqrt(const BigComplex& a)
	{
		if (a.is_zero())
			return BigComplex::zero(a.precision());
		if (a.is_real() && a.re().sign() > 0)
			return BigComplex(sqrt(a.re()), BigReal(0l, a.precision()));
		const BigReal m = sqrt(abs(a));
		const BigReal half = BigReal(1l, a.precision()) / BigReal(2l, a.precision());
		const BigReal ph = arg(a) * half;
		return BigComplex(m*cos(ph), m*sin(ph));
	}

	inline BigComplex pow(const BigComplex& a, long e)
	{
		Precision p = a.precision();
		if (e == 0)
			return BigComplex(1l, p);
		BigComplex base = e < 0 ? BigComplex(1l, p)/a : a;
		unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
		BigComplex acc(1l, p);
		while (n)
		{
			if (n & 1)
				acc *= base;
			base *= base;
			n >>= 1;
		}
		return acc;
	}

	// Principal power a^e = exp(e log a).
	inline BigComplex pow(const BigComplex& a, const BigComplex& e)
	{
		if (a.is_zero())
		{
			if (e.is_zero())
				return BigComplex(1l, a.precision());
			return BigComplex::zero(a.precision());
		}
		return exp(e * log(a));
	}

	inline BigComplex polar(const BigReal& r, const BigReal& theta)
	{
		return BigComplex(r*cos(theta), r*sin(theta));
	}
}

#endif
