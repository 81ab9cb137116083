#include "phaseret/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace phaseret {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

static std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

static double parse_num(const std::string& s, std::size_t lineno, const char* what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw input_error("malformed row at line " + std::to_string(lineno) + ": bad " + what +
                          " '" + s + "'");
    }
}

ModulusField load_modulus_field(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw input_error("malformed row at line 1: empty input");
    ++lineno;
    {
        auto cols = split_csv(line);
        if (cols.size() != 3 || cols[0] != "rho" || cols[1] != "j" || cols[2] != "modulus")
            throw input_error("malformed row at line 1: expected header rho,j,modulus");
    }
    // Preserve file order of circles; radii may arrive in any order but each
    // circle's rows must be contiguous with j ascending from 0.
    std::vector<double> radii;
    std::vector<std::vector<double>> values;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto cols = split_csv(line);
        if (cols.size() != 3)
            throw input_error("malformed row at line " + std::to_string(lineno) +
                              ": expected 3 columns");
        const double rho = parse_num(cols[0], lineno, "radius");
        const double jv = parse_num(cols[1], lineno, "index");
        const double mod = parse_num(cols[2], lineno, "modulus");
        if (!(rho > 0.0) || rho > 1.0)
            throw input_error("malformed row at line " + std::to_string(lineno) +
                              ": radius must lie in (0, 1]");
        if (!std::isfinite(mod))
            throw input_error("malformed row at line " + std::to_string(lineno) +
                              ": non-finite modulus");
        if (mod < 0.0)
            throw input_error("negative modulus at line " + std::to_string(lineno));
        const std::size_t j = static_cast<std::size_t>(jv);
        if (double(j) != jv)
            throw input_error("malformed row at line " + std::to_string(lineno) +
                              ": non-integer node index");
        if (radii.empty() || radii.back() != rho) {
            if (std::find(radii.begin(), radii.end(), rho) != radii.end())
                throw input_error("malformed row at line " + std::to_string(lineno) +
                                  ": circle rho=" + cols[0] + " split into multiple blocks");
            radii.push_back(rho);
            values.emplace_back();
        }
        if (j != values.back().size())
            throw input_error("malformed row at line " + std::to_string(lineno) +
                              ": node index out of order (expected " +
                              std::to_string(values.back().size()) + ")");
        values.back().push_back(mod);
    }
    if (radii.empty()) throw input_error("malformed row at line 1: no data rows");
    const std::size_t n = values.front().size();
    for (std::size_t i = 0; i < radii.size(); ++i)
        if (values[i].size() != n)
            throw input_error("inconsistent node counts across circles (circle rho=" +
                              format_double(radii[i]) + " has " + std::to_string(values[i].size()) +
                              " nodes, expected " + std::to_string(n) + ")");
    if (n < 4) throw input_error("node count must be at least 4");

    ModulusField f;
    f.n = n;
    std::vector<std::size_t> order(radii.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return radii[a] < radii[b]; });
    for (std::size_t i : order) {
        f.radii.push_back(radii[i]);
        f.values.push_back(std::move(values[i]));
    }
    if (f.radii.back() != 1.0) throw input_error("missing boundary circle");
    return f;
}

ModulusField load_modulus_field_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file '" + path + "'");
    return load_modulus_field(in);
}

static void write_or_throw(std::ostream& out) {
    if (!out) throw input_error("write failure on output stream");
}

void store_modulus_field(const ModulusField& field, std::ostream& out) {
    out << "rho,j,modulus\n";
    for (std::size_t i = 0; i < field.radii.size(); ++i) {
        const std::string rho = format_double(field.radii[i]);
        for (std::size_t j = 0; j < field.values[i].size(); ++j)
            out << rho << ',' << j << ',' << format_double(field.values[i][j]) << '\n';
    }
    write_or_throw(out);
}

void store_modulus_field_file(const ModulusField& field, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
    if (!out) throw input_error("cannot open output file '" + path + "'");
    store_modulus_field(field, out);
}

void store_real_samples(const RealSamples& s, std::ostream& out) {
    out << "rho,j,modulus\n";
    const std::string rho = format_double(s.grid.rho);
    for (std::size_t j = 0; j < s.values.size(); ++j)
        out << rho << ',' << j << ',' << format_double(s.values[j]) << '\n';
    write_or_throw(out);
}

void store_complex_samples(const ComplexSamples& s, std::ostream& out) {
    out << "rho,j,re,im\n";
    const std::string rho = format_double(s.grid.rho);
    for (std::size_t j = 0; j < s.values.size(); ++j)
        out << rho << ',' << j << ',' << format_double(s.values[j].real()) << ','
            << format_double(s.values[j].imag()) << '\n';
    write_or_throw(out);
}

void store_complex_circles(const std::vector<double>& radii,
                           const std::vector<std::vector<cplx>>& values,
                           std::size_t n, std::ostream& out) {
    out << "rho,j,re,im\n";
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const std::string rho = format_double(radii[i]);
        for (std::size_t j = 0; j < n; ++j)
            out << rho << ',' << j << ',' << format_double(values[i][j].real()) << ','
                << format_double(values[i][j].imag()) << '\n';
    }
    write_or_throw(out);
}

std::vector<std::pair<double, std::vector<cplx>>> load_complex_circles(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw input_error("malformed row at line 1: empty input");
    ++lineno;
    {
        auto cols = split_csv(line);
        if (cols.size() != 4 || cols[0] != "rho" || cols[1] != "j" || cols[2] != "re" ||
            cols[3] != "im")
            throw input_error("malformed row at line 1: expected header rho,j,re,im");
    }
    std::vector<std::pair<double, std::vector<cplx>>> circles;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto cols = split_csv(line);
        if (cols.size() != 4)
            throw input_error("malformed row at line " + std::to_string(lineno) +
                              ": expected 4 columns");
        const double rho = parse_num(cols[0], lineno, "radius");
        const double jv = parse_num(cols[1], lineno, "index");
        const double re = parse_num(cols[2], lineno, "re");
        const double im = parse_num(cols[3], lineno, "im");
        if (circles.empty() || circles.back().first != rho) circles.push_back({rho, {}});
        if (std::size_t(jv) != circles.back().second.size())
            throw input_error("malformed row at line " + std::to_string(lineno) +
                              ": node index out of order");
        circles.back().second.emplace_back(re, im);
    }
    return circles;
}

}  // namespace phaseret
