#include "asx/gammafn.hpp"

#include <mutex>

namespace asx
{
	namespace
	{
		std::mutex g_bern_mutex;
		std::vector<mpq_class> g_bern; // g_bern[k] = B_{2k}
	}

	const std::vector<mpq_class>& bernoulli_even(std::size_t count)
	{
		std::lock_guard<std::mutex> lock(g_bern_mutex);
		if (g_bern.size() >= count)
			return g_bern;

		// B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j, with odd B (except B_1)
		// zero. Work on the full table, store even entries.
		std::size_t mmax = 2*count;
		std::vector<mpq_class> b(mmax + 1);
		b[0] = 1;
		if (mmax >= 1)
			b[1] = mpq_class(-1, 2);
		for (std::size_t m = 2; m <= mmax; ++m)
		{
			if (m % 2 == 1)
			{
				b[m] = 0;
				continue;
			}
			mpq_class acc(0);
			mpz_class binom(1); // C(m+1, 0)
			for (std::size_t j = 0; j < m; ++j)
			{
				acc += mpq_class(binom) * b[j];
				binom = binom * static_cast<long>(m + 1 - j) / static_cast<long>(j + 1);
			}
			b[m] = -acc / static_cast<long>(m + 1);
			b[m].canonicalize();
		}
		g_bern.clear();
		g_bern.reserve(count);
		for (std::size_t k = 0; k < count; ++k)
			g_bern.push_back(b[2*k]);
		return g_bern;
	}

	namespace
	{
		// log Gamma(z) by Stirling for Re(z) >= shift target; valid up to an
		// additive multiple of 2 pi i after recurrence shifts.
		BigComplex log_gamma_shifted(const BigComplex& z0, Precision work)
		{
			const BigReal target(0.12*static_cast<double>(work) + 16.0, work);
			BigComplex z = z0.round_to(work);

			// Gamma(z) = Gamma(z + m) / (z (z+1) ... (z+m-1))
			BigComplex logshift = BigComplex::zero(work);
			while (z.re() < target)
			{
				if (z.is_zero())
					throw PoleError("gamma pole at 0");
				logshift += log(z);
				z += BigComplex(1l, work);
			}

			const std::size_t nterms = static_cast<std::size_t>(0.40*static_cast<double>(work) + 56.0);
			const auto& bern = bernoulli_even(nterms + 1);

			const BigComplex half(mpq_class(1, 2), work);
			BigComplex lg = (z - half)*log(z) - z;
			BigReal twopi = BigReal(2l, work)*const_pi(work);
			lg += BigComplex(log(twopi)/BigReal(2l, work), BigReal(0l, work));

			const BigComplex z2inv = pow(z, -2l);
			BigComplex zpow = BigComplex(1l, work)/z; // z^{-(2k-1)}
			const BigReal tol = pow2(-static_cast<long>(work) - 4, work);
			BigReal prev_mag(0l, work);
			for (std::size_t k = 1; k <= nterms; ++k)
			{
				const long two_k = static_cast<long>(2*k);
				BigComplex term = BigComplex(BigReal(bern[k], work)/BigReal(two_k*(two_k - 1), work)) * zpow;
				lg += term;
				const BigReal mag = abs(term);
				if (mag < tol*(abs(lg) + BigReal(1l, work)))
					break;
				if (k > 4 && !(prev_mag.is_zero()) && mag > prev_mag)
					break; // asymptotic tail started growing; stop at the least term
				prev_mag = mag;
				zpow *= z2inv;
			}
			return lg - logshift;
		}
	}

	BigComplex gamma_complex(const BigComplex& z)
	{
		const Precision prec = z.precision();

		if (z.is_real())
		{
			// Pole check: nonpositive integers
			BigReal f = floor(z.re());
			if (f == z.re() && z.re().sign() <= 0)
				throw PoleError("gamma pole at nonpositive integer");
			BigReal r = BigReal::zero(prec + 16);
			mpfr_gamma(r.raw(), z.re().raw(), MPFR_RNDN);
			return BigComplex(r.round_to(prec), BigReal(0l, prec));
		}

		const Precision work = prec + 32 + static_cast<Precision>(prec/8);
		return exp(log_gamma_shifted(z, work)).round_to(prec);
	}

	BigComplex gamma_guarded(const BigComplex& z)
	{
		const BigReal minus_one(-1l, z.precision());
		if (z.is_zero())
			throw PoleError("gamma_guarded: z = 0 is the one pole inside the guard");
		if (!(z.re() > minus_one))
			return BigComplex(1l, z.precision());
		return gamma_complex(z);
	}

	BigComplex gamma_guarded_shifted(long n, const BigComplex& r)
	{
		return gamma_guarded(BigComplex(BigReal(n, r.precision()), BigReal(0l, r.precision())) + r);
	}

	BigComplex gamma_product_oracle(const BigComplex& z, unsigned long n0, unsigned levels)
	{
		const Precision prec = z.precision();
		const Precision work = 2*prec + 64;
		const BigComplex zw = z.round_to(work);

		// P_n = n^z n! / prod_{k=0}^{n} (z+k); log-free evaluation
		std::vector<BigComplex> vals;
		std::vector<BigReal> nodes;
		BigComplex prod_ratio(1l, work); // prod (z+k)/k over k=1..n, running
		unsigned long n_done = 0;
		for (unsigned lev = 1; lev <= levels; ++lev)
		{
			const unsigned long n = n0*lev;
			for (unsigned long k = n_done + 1; k <= n; ++k)
				prod_ratio *= (zw + BigComplex(static_cast<long>(k), work)) / BigReal(static_cast<long>(k), work);
			n_done = n;
			// P_n = n^z / (z * prod_ratio)
			const BigComplex nz = pow(BigComplex(BigReal(static_cast<long>(n), work)), zw);
			vals.push_back(nz / (zw * prod_ratio));
			nodes.push_back(BigReal(1l, work)/BigReal(static_cast<long>(n), work));
		}

		// Neville table to 1/n -> 0
		std::vector<BigComplex> t = vals;
		const std::size_t m = t.size();
		for (std::size_t j = 1; j < m; ++j)
			for (std::size_t i = 0; i + j < m; ++i)
			{
				// p_i(0) through nodes i..i+j
				t[i] = (t[i]*BigComplex(nodes[i + j]) - t[i + 1]*BigComplex(nodes[i])) / BigComplex(nodes[i + j] - nodes[i]);
			}
		return t[0].round_to(prec);
	}
}
