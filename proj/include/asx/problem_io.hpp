// JSON problem files, bundled builtin problems, and table emission. Numbers
// cross the file boundary as decimal strings (or exact rationals "p/q"),
// never as binary floats, so precision survives the round trip.

#ifndef ASX_PROBLEM_IO_HPP_
#define ASX_PROBLEM_IO_HPP_

#include <string>
#include <variant>

#include "asx/decompose.hpp"
#include "asx/formal.hpp"

namespace asx
{
	enum class ProblemKind
	{
		SecondOrderLinear,
		FirstOrderPolynomial,
		ModelSeries,
		RationalInhom,
	};

	struct LoadedProblem
	{
		ProblemKind kind;
		Precision precision_bits = 0; // file-level precision, 0 = unspecified
		std::variant<SecondOrderProblem, FirstOrderProblem, GrowthModel, RationalFunction> payload;

		SecondOrderProblem& second() { return std::get<SecondOrderProblem>(payload); }
		FirstOrderProblem& first() { return std::get<FirstOrderProblem>(payload); }
		GrowthModel& model() { return std::get<GrowthModel>(payload); }
		RationalFunction& rational() { return std::get<RationalFunction>(payload); }
	};

	// Parses and validates a problem file; SchemaError messages carry a JSON
	// pointer to the offending field. Closed-form descriptors, when present,
	// are cross-checked against the series on a small grid.
	LoadedProblem load_problem(const std::string& path);
	LoadedProblem load_problem_json(const std::string& text, const std::string& origin);

	// Directory holding the bundled problems (ei.json, airy.json,
	// h_equation.json): $ASX_DATA_DIR if set, else the build-time default.
	std::string data_dir();
	LoadedProblem load_builtin(const std::string& name);

	// Table emission. Cells are rendered as 40-significant-digit decimals in
	// CSV and as round-trip-exact [re, im] string pairs in JSON; output is
	// byte-stable for fixed inputs and precision.
	struct Table
	{
		std::vector<std::string> header;
		std::vector<std::vector<BigComplex>> rows;
	};

	enum class TableFormat { Csv, Json };

	std::string emit_table(const Table& t, TableFormat format);
	void emit_table_file(const Table& t, TableFormat format, const std::string& path);

	// Rendering helpers shared by the CLI: a complex number as a JSON value
	// ([re, im] round-trip strings, or a single string when purely real).
	std::string complex_roundtrip_re(const BigComplex& v);
	std::string complex_roundtrip_im(const BigComplex& v);
	std::string decimal40(const BigReal& v);
}

#endif
