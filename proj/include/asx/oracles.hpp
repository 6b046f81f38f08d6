// Independent verification oracles: direct power-matching of formal series
// in the ODEs, in exact rational arithmetic. Used by the unit and acceptance
// suites to check the recurrence solvers; never used by the solvers
// themselves.

#ifndef ASX_ORACLES_HPP_
#define ASX_ORACLES_HPP_

#include <gmpxx.h>

#include <vector>

namespace asx::oracles
{
	inline mpq_class qat(const std::vector<mpq_class>& v, std::size_t k)
	{
		return k < v.size() ? v[k] : mpq_class(0);
	}

	// Residual coefficients of y'' + a y' + b y for y = sum s_k x^{-k}:
	// coefficient of x^{-m} is
	//   (m-2)(m-1) s_{m-2} - sum_{j+k=m-1} k a_j s_k + sum_{j+k=m} b_j s_k.
	// All zero through order M iff the series formally solves the equation.
	inline std::vector<mpq_class> linear_residual(const std::vector<mpq_class>& a,
	                                              const std::vector<mpq_class>& b,
	                                              const std::vector<mpq_class>& s,
	                                              std::size_t M)
	{
		std::vector<mpq_class> res(M + 1, mpq_class(0));
		for (std::size_t m = 0; m <= M; ++m)
		{
			mpq_class acc(0);
			if (m >= 2)
				acc += mpq_class(static_cast<long>((m - 2)*(m - 1)))*qat(s, m - 2);
			if (m >= 1)
				for (std::size_t k = 0; k <= m - 1; ++k)
					acc -= mpq_class(static_cast<long>(k))*qat(a, m - 1 - k)*qat(s, k);
			for (std::size_t k = 0; k <= m; ++k)
				acc += qat(b, m - k)*qat(s, k);
			acc.canonicalize();
			res[m] = acc;
		}
		return res;
	}

	// Residual coefficients of y' - sum_p F_p y^p for y = sum_{k>=1} s_k x^{-k}:
	// y' contributes -(m-1) s_{m-1} at x^{-m}; the rhs is assembled by
	// repeated exact series multiplication. Valid through x^{-M}.
	inline std::vector<mpq_class> series_mul(const std::vector<mpq_class>& u,
	                                         const std::vector<mpq_class>& v,
	                                         std::size_t M)
	{
		std::vector<mpq_class> w(M + 1, mpq_class(0));
		for (std::size_t i = 0; i <= M && i < u.size(); ++i)
		{
			if (u[i] == 0)
				continue;
			for (std::size_t j = 0; i + j <= M && j < v.size(); ++j)
				w[i + j] += u[i]*v[j];
		}
		return w;
	}

	inline std::vector<mpq_class> nonlinear_residual(const std::vector<std::vector<mpq_class>>& f,
	                                                 const std::vector<mpq_class>& s,
	                                                 std::size_t M)
	{
		// y as a coefficient vector (s_0 = 0)
		std::vector<mpq_class> y(M + 1, mpq_class(0));
		for (std::size_t k = 0; k <= M && k < s.size(); ++k)
			y[k] = s[k];

		std::vector<mpq_class> rhs(M + 1, mpq_class(0));
		std::vector<mpq_class> ypow(M + 1, mpq_class(0));
		ypow[0] = 1;
		for (std::size_t p = 0; p < f.size(); ++p)
		{
			if (p > 0)
				ypow = series_mul(ypow, y, M);
			std::vector<mpq_class> fp(f[p]);
			auto term = series_mul(fp, ypow, M);
			for (std::size_t m = 0; m <= M; ++m)
				rhs[m] += term[m];
		}

		std::vector<mpq_class> res(M + 1, mpq_class(0));
		for (std::size_t m = 0; m <= M; ++m)
		{
			mpq_class lhs(0);
			if (m >= 2)
				lhs = mpq_class(-static_cast<long>(m - 1))*qat(s, m - 1);
			res[m] = lhs - rhs[m];
			res[m].canonicalize();
		}
		return res;
	}
}

#endif
