#include "lapspec/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

#include <json.hpp>

namespace lapspec {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split_fields(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

/// Whitespace-separated tokens of a line, with '#' starting a comment.
std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == '#') break;
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

/// Exact number: decimal ("0.25", "1e-3") or fraction ("1/3").
Rat parse_exact_number(const std::string& text, int line_no) {
    try {
        std::size_t slash = text.find('/');
        if (slash != std::string::npos) {
            if (slash == 0 || slash + 1 >= text.size() || text.find('/', slash + 1) != std::string::npos)
                throw ParseError("bad fraction '" + text + "'", line_no);
            const Rat den = rational_from_decimal(text.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator in '" + text + "'", line_no);
            return rational_from_decimal(text.substr(0, slash)) / den;
        }
        return rational_from_decimal(text);
    } catch (const ParseError& e) {
        if (e.line() == line_no) throw;  // already carries the right position
        throw ParseError("bad number '" + text + "'", line_no);
    }
}

long long parse_integer(const std::string& text, int line_no, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError(std::string("bad ") + what + " '" + text + "'", line_no);
    return value;
}

std::vector<std::vector<std::string>> read_csv_cells(const std::string& path) {
    const std::string content = read_text_file(path);
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(content);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string trimmed = strip(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::vector<std::string> cells = split_fields(line, ',');
        for (std::string& c : cells) {
            c = strip(c);
            if (c.empty()) throw ParseError("empty matrix entry", line_no);
        }
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw ParseError("no matrix rows in " + path, 0);
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw ParseError("matrix is not square: row has " + std::to_string(rows[i].size()) +
                                 " entries, expected " + std::to_string(n),
                             static_cast<int>(i + 1));
    }
    return rows;
}

ordered_json check_to_json(const CheckResult& c) {
    ordered_json j;
    j["name"] = c.name;
    j["value"] = c.value;
    j["bound"] = c.bound;
    j["pass"] = c.pass;
    return j;
}

ordered_json report_to_json_value(const VerificationReport& r) {
    ordered_json j;
    j["theorem"] = r.theorem;
    j["pass"] = r.pass;
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : r.checks) checks.push_back(check_to_json(c));
    j["checks"] = std::move(checks);
    ordered_json witnesses = ordered_json::object();
    for (const auto& [name, text] : r.witnesses) witnesses[name] = text;
    j["witnesses"] = std::move(witnesses);
    return j;
}

} // namespace

WeightedDigraph parse_digraph_tsv(std::istream& in, const std::string& origin) {
    std::string line;
    int line_no = 0;
    int n = -1;
    Rat b;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        if (n < 0) {
            if (tok.size() != 2)
                throw ParseError("expected header 'n b', got " + std::to_string(tok.size()) +
                                     " fields in " + origin,
                                 line_no);
            n = static_cast<int>(parse_integer(tok[0], line_no, "vertex count"));
            b = parse_exact_number(tok[1], line_no);
            continue;
        }
        if (tok.size() != 3)
            throw ParseError("expected arc line 'i j w', got " + std::to_string(tok.size()) +
                                 " fields",
                             line_no);
        Arc a;
        a.source = static_cast<int>(parse_integer(tok[0], line_no, "source vertex"));
        a.target = static_cast<int>(parse_integer(tok[1], line_no, "target vertex"));
        a.weight = parse_exact_number(tok[2], line_no);
        arcs.push_back(std::move(a));
    }
    if (n < 0) throw ParseError("missing header line 'n b' in " + origin, line_no);
    return new_digraph(n, std::move(arcs), b);
}

WeightedDigraph read_digraph_tsv(const std::string& path) {
    const std::string content = read_text_file(path);
    std::istringstream in(content);
    return parse_digraph_tsv(in, path);
}

void write_digraph_tsv(const WeightedDigraph& g, const std::string& path) {
    std::string out;
    out += std::to_string(g.order());
    out += '\t';
    out += rational_to_string(g.bound());
    out += '\n';
    for (const Arc& a : g.arcs()) {
        out += std::to_string(a.source);
        out += '\t';
        out += std::to_string(a.target);
        out += '\t';
        out += rational_to_string(a.weight);
        out += '\n';
    }
    write_text_file(path, out);
}

DenseMatrix read_matrix_csv(const std::string& path) {
    const auto rows = read_csv_cells(path);
    const int n = static_cast<int>(rows.size());
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::string& cell = rows[i][j];
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
            if (ec != std::errc() || ptr != cell.data() + cell.size())
                throw ParseError("bad matrix entry '" + cell + "'", i + 1, j + 1);
            m(i, j) = value;
        }
    }
    return m;
}

RationalMatrix read_matrix_csv_exact(const std::string& path) {
    const auto rows = read_csv_cells(path);
    const int n = static_cast<int>(rows.size());
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = parse_exact_number(rows[i][j], i + 1);
    return m;
}

std::string format_double(double v) {
    if (v == 0.0) return "0";  // normalizes -0.0 as well
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw IoError("failed to format double");
    return std::string(buf, ptr);
}

std::string matrix_to_csv(const DenseMatrix& m) {
    std::string out;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j) out += ',';
            out += format_double(m(i, j));
        }
        out += '\n';
    }
    return out;
}

void write_matrix_csv(const DenseMatrix& m, const std::string& path) {
    write_text_file(path, matrix_to_csv(m));
}

std::string spectrum_to_json(const Spectrum& s) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < s.order(); ++i) {
        ordered_json item;
        item["re"] = s.eigenvalues[i].real();
        item["im"] = s.eigenvalues[i].imag();
        item["residual"] = s.residuals.empty() ? 0.0 : s.residuals[i];
        item["cluster_id"] = s.cluster_ids[i];
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& r) {
    return report_to_json_value(r).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& rs) {
    ordered_json j;
    bool all = true;
    for (const VerificationReport& r : rs) all = all && r.pass;
    j["pass"] = all;
    ordered_json arr = ordered_json::array();
    for (const VerificationReport& r : rs) arr.push_back(report_to_json_value(r));
    j["reports"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading " + path);
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("failed writing " + path);
}

} // namespace lapspec
