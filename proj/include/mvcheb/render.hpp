#pragma once

#include <string>
#include <string_view>

#include "mvcheb/integrate.hpp"
#include "mvcheb/matpoly.hpp"
#include "mvcheb/ratmat.hpp"

namespace mvcheb::render {

/// Exact human-readable polynomial, highest degree first: "x^2 - 1/4", "2x", "0".
std::string poly_to_string(const Poly& p, char var = 'x');

/// Inverse of poly_to_string; accepts any coefficient in p or p/q form.
Poly poly_parse(std::string_view s, char var = 'x');

std::string ratmat_to_string(const RatMat& m);

/// Float rendering with fixed significant digits (deterministic).
std::string double_to_string(double v, int precision);

}  // namespace mvcheb::render
