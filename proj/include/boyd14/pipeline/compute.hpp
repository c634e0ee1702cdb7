#pragma once

#include <string_view>

#include "boyd14/divisors/divisor.hpp"
#include "boyd14/edilog/rfunction.hpp"
#include "boyd14/mahler/measure.hpp"
#include "boyd14/modforms/lvalue.hpp"
#include "boyd14/pipeline/cache.hpp"

namespace boyd14::pipeline {

using curves::CurvePtr;
using curves::Point;
using divisors::Divisor;
using numerics::Real;

// Working bits for a decimal target, with guard bits for cancellation.
unsigned bits_for_digits(unsigned digits);

// L(f14, s) by the approximate functional equation.
modforms::LValue l_f14(int s, unsigned bits, const Cache* cache = nullptr);

// L(f, s) for coefficients a[1..] of a weight-2 newform of the given level.
modforms::LValue l_from_coefficients(const std::vector<mpq_class>& a, long level, int s, unsigned bits);

mahler::MahlerResult family_m(curves::Family family, const mpq_class& k, unsigned digits, const Cache* cache = nullptr);
mahler::MahlerResult poly_m(const mahler::BivariatePoly& p, unsigned digits, const Cache* cache = nullptr);

// R on a divisor (real part; the imaginary residual is checked).
Real r_value(const Divisor& d, unsigned bits, const Cache* cache = nullptr, const edilog::DivisorOptions& opts = {});

// "Q", "Q(k)", "Q(zeta3)", "Q(zeta7)". Throws std::invalid_argument otherwise.
exact::FieldPtr parse_field(std::string_view text);

// "P", "-P", "4A+Q'", "2P-Q", or "(x,y)" with coordinates in the curve's field.
Point parse_point(const CurvePtr& curve, std::string_view text);

// "2[P+Q] - 5[P]", "[P+Q]-[P]", "-[A]-[4A]+[A+Q]".
Divisor parse_divisor(const CurvePtr& curve, std::string_view text);

}  // namespace boyd14::pipeline
