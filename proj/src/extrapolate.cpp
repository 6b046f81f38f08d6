#include "asx/extrapolate.hpp"

namespace asx
{
	std::vector<BigComplex> solve_dense(CMatrix A, std::vector<BigComplex> rhs)
	{
		const std::size_t n = A.size();
		if (n == 0 || rhs.size() != n)
			throw DomainError("solve_dense: bad dimensions");
		for (std::size_t col = 0; col < n; ++col)
		{
			std::size_t piv = col;
			BigReal best = abs(A[col][col]);
			for (std::size_t r = col + 1; r < n; ++r)
			{
				const BigReal m = abs(A[r][col]);
				if (m > best)
				{
					best = m;
					piv = r;
				}
			}
			if (best.is_zero())
				throw IllConditionedError("solve_dense: singular system");
			if (piv != col)
			{
				std::swap(A[piv], A[col]);
				std::swap(rhs[piv], rhs[col]);
			}
			for (std::size_t r = col + 1; r < n; ++r)
			{
				if (A[r][col].is_zero())
					continue;
				const BigComplex f = A[r][col]/A[col][col];
				for (std::size_t c = col; c < n; ++c)
					A[r][c] -= f*A[col][c];
				rhs[r] -= f*rhs[col];
			}
		}
		std::vector<BigComplex> x(n, BigComplex(0l));
		for (std::size_t r = n; r-- > 0; )
		{
			BigComplex acc = rhs[r];
			for (std::size_t c = r + 1; c < n; ++c)
				acc -= A[r][c]*x[c];
			x[r] = acc/A[r][r];
		}
		return x;
	}

	std::vector<BigComplex> lsq_fit(const std::vector<BigReal>& nodes,
	                                const std::vector<BigComplex>& vals,
	                                const std::vector<std::function<BigComplex(const BigReal&)>>& basis)
	{
		const std::size_t m = basis.size();
		const std::size_t k = nodes.size();
		if (k < m || vals.size() != k)
			throw DomainError("lsq_fit: need at least as many nodes as basis functions");

		// normal equations: (B^H B) x = B^H v
		CMatrix B(k, std::vector<BigComplex>(m, BigComplex(0l)));
		for (std::size_t i = 0; i < k; ++i)
			for (std::size_t j = 0; j < m; ++j)
				B[i][j] = basis[j](nodes[i]);

		CMatrix A(m, std::vector<BigComplex>(m, BigComplex(0l)));
		std::vector<BigComplex> rhs(m, BigComplex(0l));
		for (std::size_t p = 0; p < m; ++p)
		{
			for (std::size_t q = 0; q < m; ++q)
			{
				BigComplex acc(0l);
				for (std::size_t i = 0; i < k; ++i)
					acc += conj(B[i][p])*B[i][q];
				A[p][q] = acc;
			}
			BigComplex acc(0l);
			for (std::size_t i = 0; i < k; ++i)
				acc += conj(B[i][p])*vals[i];
			rhs[p] = acc;
		}
		return solve_dense(std::move(A), std::move(rhs));
	}

	std::vector<BigComplex> inverse_power_fit(const std::vector<BigReal>& nodes,
	                                          const std::vector<BigComplex>& vals,
	                                          unsigned order)
	{
		std::vector<std::function<BigComplex(const BigReal&)>> basis;
		for (unsigned j = 0; j <= order; ++j)
			basis.push_back([j](const BigReal& n) {
				return BigComplex(pow(BigReal(1l)/n, static_cast<long>(j)));
			});
		return lsq_fit(nodes, vals, basis);
	}

	std::vector<BigComplex> lsq_columns(const std::vector<std::vector<BigComplex>>& columns,
	                                    const std::vector<BigComplex>& rhs)
	{
		const std::size_t m = columns.size();
		const std::size_t k = rhs.size();
		if (m == 0 || k < m)
			throw DomainError("lsq_columns: need at least as many rows as columns");
		std::vector<BigReal> scale(m, BigReal(0l));
		for (std::size_t j = 0; j < m; ++j)
		{
			if (columns[j].size() != k)
				throw DomainError("lsq_columns: ragged columns");
			for (const auto& v : columns[j])
				if (abs(v) > scale[j])
					scale[j] = abs(v);
			if (scale[j].is_zero())
				scale[j] = BigReal(1l);
		}

		CMatrix A(m, std::vector<BigComplex>(m, BigComplex(0l)));
		std::vector<BigComplex> b(m, BigComplex(0l));
		for (std::size_t p = 0; p < m; ++p)
		{
			for (std::size_t q = 0; q < m; ++q)
			{
				BigComplex acc(0l);
				for (std::size_t i = 0; i < k; ++i)
					acc += conj(columns[p][i])*columns[q][i];
				A[p][q] = acc/(scale[p]*scale[q]);
			}
			BigComplex acc(0l);
			for (std::size_t i = 0; i < k; ++i)
				acc += conj(columns[p][i])*rhs[i];
			b[p] = acc/scale[p];
		}
		auto x = solve_dense(std::move(A), std::move(b));
		for (std::size_t j = 0; j < m; ++j)
			x[j] = x[j]/scale[j];
		return x;
	}

	BigComplex neville_to_zero(const std::vector<BigReal>& nodes,
	                           const std::vector<BigComplex>& vals)
	{
		std::vector<BigComplex> t = vals;
		const std::size_t m = t.size();
		if (m == 0 || nodes.size() != m)
			throw DomainError("neville_to_zero: bad input");
		for (std::size_t j = 1; j < m; ++j)
			for (std::size_t i = 0; i + j < m; ++i)
				t[i] = (t[i]*BigComplex(nodes[i + j]) - t[i + 1]*BigComplex(nodes[i]))
				       / BigComplex(nodes[i + j] - nodes[i]);
		return t[0];
	}
}
