// Arbitrary-precision real scalar on top of MPFR.
//
// Every value carries its own precision in bits; arithmetic results are
// produced at the maximum precision of the operands so that precision
// escalation in one argument propagates through an expression. The process
// default (256 bits unless overridden) seeds constructors that do not name
// a precision explicitly.

#ifndef ASX_BIGREAL_HPP_
#define ASX_BIGREAL_HPP_

#include <mpfr.h>
#include <gmpxx.h>

#include <atomic>
#include <string>
#include <utility>

#include "asx/error.hpp"

namespace asx
{
	using Precision = mpfr_prec_t;

	namespace detail
	{
		inline std::atomic<Precision>& default_prec_slot()
		{
			static std::atomic<Precision> p{256};
			return p;
		}
	}

	inline Precision default_precision() { return detail::default_prec_slot().load(); }

	inline void set_default_precision(Precision p)
	{
		if (p < 64)
			throw DomainError("precision must be at least 64 bits");
		detail::default_prec_slot().store(p);
	}

	// RAII scope guard for the process default precision (used by the CLI
	// and by routines that escalate internally).
	class PrecisionGuard
	{
	public:
		explicit PrecisionGuard(Precision p) : _saved(default_precision()) { set_default_precision(p); }
		~PrecisionGuard() { detail::default_prec_slot().store(_saved); }
		PrecisionGuard(const PrecisionGuard&) = delete;
		PrecisionGuard& operator=(const PrecisionGuard&) = delete;

	private:
		Precision _saved;
	};

	class BigReal
	{
	public:
		BigReal()
		{
			mpfr_init2(_x, default_precision());
			mpfr_set_zero(_x, 1);
		}

		// Zero at an explicit precision (the result-shape maker used all
		// over this library; a constructor would collide with BigReal(long)).
		static BigReal zero(Precision prec)
		{
			BigReal r(0l, prec < 2 ? 2 : prec);
			return r;
		}

		BigReal(long v, Precision prec = 0)
		{
			mpfr_init2(_x, prec ? prec : default_precision());
			mpfr_set_si(_x, v, MPFR_RNDN);
		}

		BigReal(int v, Precision prec = 0) : BigReal(static_cast<long>(v), prec) { }

		BigReal(unsigned long v, Precision prec = 0)
		{
			mpfr_init2(_x, prec ? prec : default_precision());
			mpfr_set_ui(_x, v, MPFR_RNDN);
		}

		BigReal(double v, Precision prec = 0)
		{
			mpfr_init2(_x, prec ? prec : default_precision());
			mpfr_set_d(_x, v, MPFR_RNDN);
		}

		BigReal(const mpq_class& q, Precision prec = 0)
		{
			mpfr_init2(_x, prec ? prec : default_precision());
			mpfr_set_q(_x, q.get_mpq_t(), MPFR_RNDN);
		}

		// Parses a decimal string ("-1.25e-3") or an exact rational ("5/36").
		static BigReal parse(const std::string& s, Precision prec = 0)
		{
			if (s.find('/') != std::string::npos)
			{
				mpq_class q;
				if (q.set_str(s, 10) != 0)
					throw SchemaError("invalid rational literal: " + s);
				q.canonicalize();
				return BigReal(q, prec);
			}
			BigReal r = BigReal::zero(prec ? prec : default_precision());
			if (mpfr_set_str(r._x, s.c_str(), 10, MPFR_RNDN) != 0)
				throw SchemaError("invalid decimal literal: " + s);
			return r;
		}

		BigReal(const BigReal& o)
		{
			mpfr_init2(_x, mpfr_get_prec(o._x));
			mpfr_set(_x, o._x, MPFR_RNDN);
		}

		BigReal(BigReal&& o) noexcept
		{
			mpfr_init2(_x, mpfr_get_prec(o._x));
			mpfr_swap(_x, o._x);
		}

		BigReal& operator=(const BigReal& o)
		{
			if (this != &o)
			{
				mpfr_set_prec(_x, mpfr_get_prec(o._x));
				mpfr_set(_x, o._x, MPFR_RNDN);
			}
			return *this;
		}

		BigReal& operator=(BigReal&& o) noexcept
		{
			mpfr_swap(_x, o._x);
			return *this;
		}

		~BigReal() { mpfr_clear(_x); }

		Precision precision() const { return mpfr_get_prec(_x); }

		// Value rounded to a (usually higher) target precision.
		BigReal round_to(Precision prec) const
		{
			BigReal r = BigReal::zero(prec);
			mpfr_set(r._x, _x, MPFR_RNDN);
			return r;
		}

		mpfr_ptr raw() { return _x; }
		mpfr_srcptr raw() const { return _x; }

		double to_double() const { return mpfr_get_d(_x, MPFR_RNDN); }
		long to_long() const { return mpfr_get_si(_x, MPFR_RNDZ); }

		bool is_zero() const { return mpfr_zero_p(_x) != 0; }
		bool is_finite() const { return mpfr_number_p(_x) != 0; }
		int sign() const { return mpfr_sgn(_x); }

		// Decimal rendering with `digits` significant digits ("%.{d-1}Re").
		std::string str(int digits = 20) const
		{
			char buf[64];
			std::snprintf(buf, sizeof(buf), "%%.%dRe", digits - 1);
			char* out = nullptr;
			if (mpfr_asprintf(&out, buf, _x) < 0)
				throw IoError("mpfr_asprintf failed");
			std::string s(out);
			mpfr_free_str(out);
			return s;
		}

		// Shortest decimal string that reloads to the identical value at the
		// same precision (mpfr_get_str with n=0).
		std::string str_roundtrip() const;

		friend void swap(BigReal& a, BigReal& b) noexcept { mpfr_swap(a._x, b._x); }

	private:
		mpfr_t _x;
	};

	namespace detail
	{
		inline Precision join(const BigReal& a, const BigReal& b)
		{
			return std::max(a.precision(), b.precision());
		}
	}

	#define ASX_BR_BINOP(OP, FN) \
		inline BigReal operator OP(const BigReal& a, const BigReal& b) \
		{ \
			BigReal r = BigReal::zero(detail::join(a, b)); \
			FN(r.raw(), a.raw(), b.raw(), MPFR_RNDN); \
			return r; \
		} \
		inline BigReal& operator OP##=(BigReal& a, const BigReal& b) \
		{ \
			a = a OP b; \
			return a; \
		}

	ASX_BR_BINOP(+, mpfr_add)
	ASX_BR_BINOP(-, mpfr_sub)
	ASX_BR_BINOP(*, mpfr_mul)
	ASX_BR_BINOP(/, mpfr_div)
	#undef ASX_BR_BINOP

	inline BigReal operator-(const BigReal& a)
	{
		BigReal r = BigReal::zero(a.precision());
		mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
		return r;
	}

	inline bool operator<(const BigReal& a, const BigReal& b)  { return mpfr_less_p(a.raw(), b.raw()) != 0; }
	inline bool operator>(const BigReal& a, const BigReal& b)  { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
	inline bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
	inline bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
	inline bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
	inline bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }

	#define ASX_BR_FN1(NAME, FN) \
		inline BigReal NAME(const BigReal& a) \
		{ \
			BigReal r = BigReal::zero(a.precision()); \
			FN(r.raw(), a.raw(), MPFR_RNDN); \
			return r; \
		}

	ASX_BR_FN1(abs,   mpfr_abs)
	ASX_BR_FN1(sqrt,  mpfr_sqrt)
	ASX_BR_FN1(exp,   mpfr_exp)
	ASX_BR_FN1(log,   mpfr_log)
	ASX_BR_FN1(sin,   mpfr_sin)
	ASX_BR_FN1(cos,   mpfr_cos)
	ASX_BR_FN1(tan,   mpfr_tan)
	ASX_BR_FN1(tanh,  mpfr_tanh)
	ASX_BR_FN1(sinh,  mpfr_sinh)
	ASX_BR_FN1(cosh,  mpfr_cosh)
	ASX_BR_FN1(floor, mpfr_rint_floor)
	ASX_BR_FN1(ceil,  mpfr_rint_ceil)
	#undef ASX_BR_FN1

	inline BigReal atan2(const BigReal& y, const BigReal& x)
	{
		BigReal r = BigReal::zero(detail::join(y, x));
		mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
		return r;
	}

	inline BigReal hypot(const BigReal& a, const BigReal& b)
	{
		BigReal r = BigReal::zero(detail::join(a, b));
		mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
		return r;
	}

	inline BigReal pow(const BigReal& a, long e)
	{
		BigReal r = BigReal::zero(a.precision());
		mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
		return r;
	}

	inline BigReal pow(const BigReal& a, const BigReal& e)
	{
		BigReal r = BigReal::zero(detail::join(a, e));
		mpfr_pow(r.raw(), a.raw(), e.raw(), MPFR_RNDN);
		return r;
	}

	inline BigReal const_pi(Precision prec = 0)
	{
		BigReal r = BigReal::zero(prec ? prec : default_precision());
		mpfr_const_pi(r.raw(), MPFR_RNDN);
		return r;
	}

	inline BigReal const_euler(Precision prec = 0)
	{
		BigReal r = BigReal::zero(prec ? prec : default_precision());
		mpfr_const_euler(r.raw(), MPFR_RNDN);
		return r;
	}

	// 2^e at the given precision; the standard tolerance unit in this library.
	inline BigReal pow2(long e, Precision prec = 0)
	{
		BigReal r = BigReal::zero(prec ? prec : default_precision());
		mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
		return r;
	}

	// Real gamma / digamma straight from MPFR (used for real arguments and
	// as an independent cross-check of the complex implementation).
	inline BigReal gamma_real(const BigReal& x)
	{
		BigReal r = BigReal::zero(x.precision());
		mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
		return r;
	}

	// digamma(s) = Gamma'(s)/Gamma(s) for s > 0.
	inline BigReal digamma_real(const BigReal& s)
	{
		if (!(s > BigReal(0l, s.precision())))
			throw DomainError("digamma_real requires s > 0");
		BigReal r = BigReal::zero(s.precision());
		mpfr_digamma(r.raw(), s.raw(), MPFR_RNDN);
		return r;
	}

	inline std::string BigReal::str_roundtrip() const
	{
		if (mpfr_zero_p(_x))
			return "0";
		mpfr_exp_t e;
		char* digits = mpfr_get_str(nullptr, &e, 10, 0, _x, MPFR_RNDN);
		if (!digits)
			throw IoError("mpfr_get_str failed");
		std::string d(digits);
		mpfr_free_str(digits);
		std::string sign;
		if (d[0] == '-')
		{
			sign = "-";
			d.erase(0, 1);
		}
		// d is a digit string with implied decimal point before position e
		std::string out = sign + d.substr(0, 1);
		if (d.size() > 1)
			out += "." + d.substr(1);
		out += "e" + std::to_string(static_cast<long>(e) - 1);
		return out;
	}
}

#endif
