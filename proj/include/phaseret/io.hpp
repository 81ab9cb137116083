#pragma once

#include <iosfwd>
#include <string>

#include "phaseret/types.hpp"

namespace phaseret {

// CSV formats. Modulus files: header "rho,j,modulus", one row per (circle, node),
// rows grouped by circle with node index ascending. Complex files: header
// "rho,j,re,im". Numbers are written with 17 significant digits so doubles
// round-trip exactly; angles are implied by the index j and never serialized.

ModulusField load_modulus_field(std::istream& in);
ModulusField load_modulus_field_file(const std::string& path);

void store_modulus_field(const ModulusField& field, std::ostream& out);
void store_modulus_field_file(const ModulusField& field, const std::string& path);

// Single-circle dumps share the same row layout.
void store_real_samples(const RealSamples& s, std::ostream& out);
void store_complex_samples(const ComplexSamples& s, std::ostream& out);

// Multi-circle complex dump (rho,j,re,im rows, circles in the given order).
void store_complex_circles(const std::vector<double>& radii,
                           const std::vector<std::vector<cplx>>& values,
                           std::size_t n, std::ostream& out);
std::vector<std::pair<double, std::vector<cplx>>> load_complex_circles(std::istream& in);

std::string format_double(double v);  // 17 significant digits

}  // namespace phaseret
