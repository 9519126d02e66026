#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lapspec/eigen.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/matrix.hpp"
#include "lapspec/theory.hpp"

namespace lapspec {

/// Digraph TSV: a header line "n b" followed by one "i j w" line per arc.
/// Blank lines and lines starting with '#' are ignored; numbers may be
/// decimals or fractions like "1/3" and are stored exactly as read.
WeightedDigraph read_digraph_tsv(const std::string& path);
WeightedDigraph parse_digraph_tsv(std::istream& in, const std::string& origin = "<stream>");
void write_digraph_tsv(const WeightedDigraph& g, const std::string& path);

/// Matrix CSV: n lines of n comma-separated decimal entries.
DenseMatrix read_matrix_csv(const std::string& path);
/// Same file, entries kept as exact rationals of the decimal text.
RationalMatrix read_matrix_csv_exact(const std::string& path);
void write_matrix_csv(const DenseMatrix& m, const std::string& path);
std::string matrix_to_csv(const DenseMatrix& m);

/// Shortest round-trip decimal form of a double (plain "0.1", not "1e-01",
/// for the common range); used everywhere a float becomes text.
std::string format_double(double v);

std::string spectrum_to_json(const Spectrum& s);
std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace lapspec
