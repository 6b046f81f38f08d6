#include "asx/problem_io.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using nlohmann::ordered_json;

namespace asx
{
	namespace
	{
		[[noreturn]] void schema_fail(const std::string& pointer, const std::string& msg)
		{
			throw SchemaError(msg + " (at " + pointer + ")");
		}

		const ordered_json& need(const ordered_json& j, const char* key, const std::string& ptr)
		{
			auto it = j.find(key);
			if (it == j.end())
				schema_fail(ptr + "/" + key, "missing required field");
			return *it;
		}

		BigReal parse_real(const ordered_json& j, const std::string& ptr, Precision prec)
		{
			if (!j.is_string())
				schema_fail(ptr, "numbers must be decimal or rational strings");
			try
			{
				return BigReal::parse(j.get<std::string>(), prec);
			}
			catch (const SchemaError& e)
			{
				schema_fail(ptr, e.what());
			}
		}

		// a complex entry: "re" or ["re", "im"]
		BigComplex parse_complex(const ordered_json& j, const std::string& ptr, Precision prec)
		{
			if (j.is_string())
				return BigComplex(parse_real(j, ptr, prec));
			if (j.is_array() && j.size() == 2)
				return BigComplex(parse_real(j[0], ptr + "/0", prec),
				                  parse_real(j[1], ptr + "/1", prec));
			schema_fail(ptr, "expected a decimal string or an [re, im] pair");
		}

		std::vector<BigComplex> parse_complex_list(const ordered_json& j, const std::string& ptr, Precision prec)
		{
			if (!j.is_array())
				schema_fail(ptr, "expected an array");
			std::vector<BigComplex> out;
			for (std::size_t i = 0; i < j.size(); ++i)
				out.push_back(parse_complex(j[i], ptr + "/" + std::to_string(i), prec));
			return out;
		}

		bool all_rational_strings(const ordered_json& j)
		{
			if (!j.is_array())
				return false;
			for (const auto& e : j)
				if (!e.is_string())
					return false;
			return true;
		}

		std::vector<mpq_class> parse_rational_list(const ordered_json& j, const std::string& ptr)
		{
			std::vector<mpq_class> out;
			for (std::size_t i = 0; i < j.size(); ++i)
			{
				const std::string s = j[i].get<std::string>();
				mpq_class q;
				// decimal strings "1.25e-2" become exact rationals too
				const auto epos = s.find_first_of("eE");
				std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
				long expo = epos == std::string::npos ? 0 : std::stol(s.substr(epos + 1));
				if (mant.find('/') != std::string::npos)
				{
					if (q.set_str(mant, 10) != 0)
						schema_fail(ptr + "/" + std::to_string(i), "invalid rational literal");
				}
				else
				{
					const auto dot = mant.find('.');
					std::string digits = mant;
					if (dot != std::string::npos)
					{
						digits.erase(dot, 1);
						expo -= static_cast<long>(mant.size() - dot - 1);
					}
					if (digits.empty() || digits == "-" || digits == "+")
						schema_fail(ptr + "/" + std::to_string(i), "invalid decimal literal");
					mpz_class z;
					if (z.set_str(digits, 10) != 0)
						schema_fail(ptr + "/" + std::to_string(i), "invalid decimal literal");
					q = z;
				}
				mpz_class p10;
				mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(expo < 0 ? -expo : expo));
				if (expo >= 0)
					q *= p10;
				else
					q /= p10;
				q.canonicalize();
				out.push_back(q);
			}
			return out;
		}

		// closed-form descriptor: rational function of 1/x given by
		// numerator/denominator coefficient lists (constant term first)
		Sampler parse_closed_form(const ordered_json& j, const std::string& ptr, Precision prec)
		{
			auto num = parse_complex_list(need(j, "num", ptr), ptr + "/num", prec);
			auto den = parse_complex_list(need(j, "den", ptr), ptr + "/den", prec);
			if (den.empty())
				schema_fail(ptr + "/den", "denominator must be nonempty");
			return [num, den](const BigComplex& x) {
				const BigComplex z = BigComplex(1l)/x;
				auto horner = [&z](const std::vector<BigComplex>& c) {
					BigComplex acc = c.back();
					for (std::size_t k = c.size() - 1; k-- > 0; )
						acc = acc*z + c[k];
					return acc;
				};
				return horner(num)/horner(den);
			};
		}

		void cross_check_closed(const SecondOrderProblem& p)
		{
			if (!p.a_closed || !p.coeffs_entire)
				return;
			// for entire coefficient lists the closed form must agree with
			// the full series on a small grid
			const Precision prec = default_precision();
			const BigReal tol = pow2(-static_cast<long>(prec)/2, prec);
			for (long i = 1; i <= 3; ++i)
			{
				const BigComplex x = p.ray.point(p.ray.x0*BigReal(1 + 2*i));
				if (abs(p.a_closed(x) - eval_truncated(p.a, x, p.a.size())) > tol
				    || abs(p.b_closed(x) - eval_truncated(p.b, x, p.b.size())) > tol)
					throw SchemaError("closed form disagrees with the coefficient series (at /closed_form)");
			}
		}
	}

	LoadedProblem load_problem_json(const std::string& text, const std::string& origin)
	{
		ordered_json j;
		try
		{
			j = ordered_json::parse(text);
		}
		catch (const std::exception& e)
		{
			throw SchemaError(std::string("invalid JSON in ") + origin + ": " + e.what());
		}

		LoadedProblem out;
		out.precision_bits = 0;
		if (j.contains("precision_bits"))
		{
			if (!j["precision_bits"].is_number_integer())
				schema_fail("/precision_bits", "must be an integer");
			out.precision_bits = j["precision_bits"].get<long>();
			if (out.precision_bits < 64)
				schema_fail("/precision_bits", "must be at least 64");
		}
		const Precision prec = out.precision_bits ? out.precision_bits : default_precision();

		const std::string kind = need(j, "kind", "").get<std::string>();
		const BigReal theta = j.contains("theta") ? parse_real(j["theta"], "/theta", prec) : BigReal(0l, prec);
		const BigReal x0 = j.contains("x0") ? parse_real(j["x0"], "/x0", prec) : BigReal(1l, prec);

		if (kind == "second_order_linear")
		{
			out.kind = ProblemKind::SecondOrderLinear;
			SecondOrderProblem p;
			const auto& ja = need(j, "a", "");
			const auto& jb = need(j, "b", "");
			p.a = CoeffSeq(parse_complex_list(ja, "/a", prec));
			p.b = CoeffSeq(parse_complex_list(jb, "/b", prec));
			if (all_rational_strings(ja) && all_rational_strings(jb))
			{
				p.a_rat = parse_rational_list(ja, "/a");
				p.b_rat = parse_rational_list(jb, "/b");
			}
			p.kappa = parse_real(need(j, "kappa", ""), "/kappa", prec);
			p.ray = Ray(theta, x0);
			if (j.contains("coeffs_entire"))
				p.coeffs_entire = j["coeffs_entire"].get<bool>();
			if (j.contains("closed_form"))
			{
				const auto& cf = j["closed_form"];
				p.a_closed = parse_closed_form(need(cf, "a", "/closed_form"), "/closed_form/a", prec);
				p.b_closed = parse_closed_form(need(cf, "b", "/closed_form"), "/closed_form/b", prec);
			}
			try
			{
				p.validate();
			}
			catch (const SchemaError& e)
			{
				throw SchemaError(std::string(e.what()) + " [" + origin + "]");
			}
			cross_check_closed(p);
			out.payload = std::move(p);
			return out;
		}

		if (kind == "first_order_polynomial")
		{
			out.kind = ProblemKind::FirstOrderPolynomial;
			FirstOrderProblem p;
			const auto& jf = need(j, "f", "");
			if (!jf.is_array() || jf.empty())
				schema_fail("/f", "expected a nonempty array of coefficient rows");
			bool rational = true;
			for (std::size_t r = 0; r < jf.size(); ++r)
			{
				p.f.emplace_back(parse_complex_list(jf[r], "/f/" + std::to_string(r), prec));
				rational = rational && all_rational_strings(jf[r]);
			}
			if (rational)
				for (std::size_t r = 0; r < jf.size(); ++r)
					p.f_rat.push_back(parse_rational_list(jf[r], "/f/" + std::to_string(r)));
			p.P = static_cast<unsigned>(jf.size() - 1);
			p.C_F = j.contains("C_F") ? parse_real(j["C_F"], "/C_F", prec) : BigReal(1l, prec);
			p.kappa = parse_real(need(j, "kappa", ""), "/kappa", prec);
			p.ray = Ray(theta, x0);
			if (j.contains("coeffs_entire"))
				p.coeffs_entire = j["coeffs_entire"].get<bool>();
			try
			{
				p.validate();
			}
			catch (const SchemaError& e)
			{
				throw SchemaError(std::string(e.what()) + " [" + origin + "]");
			}
			out.payload = std::move(p);
			return out;
		}

		if (kind == "model_series")
		{
			out.kind = ProblemKind::ModelSeries;
			GrowthModel g;
			const std::string rule = j.contains("rule") ? j["rule"].get<std::string>() : "factorial";
			if (rule == "factorial")
				g.rule = LeastTermRule::DigammaRoot;
			else if (rule == "floor_abs_xdelta")
				g.rule = LeastTermRule::FloorAbsXDelta;
			else
				schema_fail("/rule", "unknown least-term rule");
			g.alpha_or_Delta = parse_complex(need(j, "alpha", ""), "/alpha", prec);
			g.r = j.contains("r") ? parse_complex(j["r"], "/r", prec) : BigComplex(0l, prec);
			g.rho = g.r.re();
			g.R = j.contains("R") ? parse_complex(j["R"], "/R", prec) : BigComplex(1l, prec);
			g.gamma = j.contains("gamma") ? parse_real(j["gamma"], "/gamma", prec) : BigReal(1l, prec);
			out.payload = std::move(g);
			return out;
		}

		if (kind == "rational_inhom")
		{
			out.kind = ProblemKind::RationalInhom;
			RationalFunction r;
			const auto& jp = need(j, "poles", "");
			if (!jp.is_array() || jp.empty())
				schema_fail("/poles", "expected a nonempty array");
			for (std::size_t i = 0; i < jp.size(); ++i)
			{
				const std::string ptr = "/poles/" + std::to_string(i);
				RationalFunction::Pole pb;
				pb.location = parse_complex(need(jp[i], "location", ptr), ptr + "/location", prec);
				pb.residues = parse_complex_list(need(jp[i], "residues", ptr), ptr + "/residues", prec);
				r.poles.push_back(std::move(pb));
			}
			r.validate(x0);
			out.payload = std::move(r);
			return out;
		}

		schema_fail("/kind", "unknown problem kind '" + kind + "'");
	}

	LoadedProblem load_problem(const std::string& path)
	{
		std::ifstream in(path);
		if (!in)
			throw IoError("cannot open problem file: " + path);
		std::ostringstream ss;
		ss << in.rdbuf();
		return load_problem_json(ss.str(), path);
	}

	std::string data_dir()
	{
		if (const char* env = std::getenv("ASX_DATA_DIR"))
			return env;
		return ASX_DATA_DIR;
	}

	LoadedProblem load_builtin(const std::string& name)
	{
		if (name != "ei" && name != "airy" && name != "h-equation")
			throw SchemaError("unknown builtin '" + name + "' (expected ei, airy or h-equation)");
		const std::string file = name == "h-equation" ? "h_equation.json" : name + ".json";
		return load_problem(data_dir() + "/" + file);
	}

	std::string decimal40(const BigReal& v)
	{
		return v.str(40);
	}

	std::string complex_roundtrip_re(const BigComplex& v) { return v.re().str_roundtrip(); }
	std::string complex_roundtrip_im(const BigComplex& v) { return v.im().str_roundtrip(); }

	std::string emit_table(const Table& t, TableFormat format)
	{
		std::ostringstream out;
		if (format == TableFormat::Csv)
		{
			for (std::size_t c = 0; c < t.header.size(); ++c)
				out << (c ? "," : "") << t.header[c];
			out << "\n";
			for (const auto& row : t.rows)
			{
				for (std::size_t c = 0; c < row.size(); ++c)
				{
					out << (c ? "," : "");
					if (row[c].is_real())
						out << decimal40(row[c].re());
					else
						out << decimal40(row[c].re()) << "+" << decimal40(row[c].im()) << "i";
				}
				out << "\n";
			}
			return out.str();
		}

		ordered_json j;
		j["columns"] = t.header;
		ordered_json rows = ordered_json::array();
		for (const auto& row : t.rows)
		{
			ordered_json r = ordered_json::array();
			for (const auto& cell : row)
				r.push_back(ordered_json::array({complex_roundtrip_re(cell), complex_roundtrip_im(cell)}));
			rows.push_back(std::move(r));
		}
		j["rows"] = std::move(rows);
		return j.dump(2) + "\n";
	}

	void emit_table_file(const Table& t, TableFormat format, const std::string& path)
	{
		std::ofstream out(path, std::ios::binary);
		if (!out)
			throw IoError("cannot open output file: " + path);
		out << emit_table(t, format);
		if (!out)
			throw IoError("write failed: " + path);
	}
}
