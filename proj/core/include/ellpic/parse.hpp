#pragma once

#include <string>
#include <vector>

#include "ellpic/curve_ring.hpp"
#include "ellpic/forge.hpp"

namespace ellpic {

/// Syntax error with the offending position in the input.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, size_t offset)
        : std::invalid_argument(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// Grammar: `Z^r` | `Z` | `Z/d` joined with `+`; `0` for the trivial group.
/// Torsion orders must be >= 2.
GroupSpec parse_group_spec(const std::string& s);

/// Field element: an integer literal (reduced into the prime field) or a
/// polynomial in the extension generator g, e.g. `2g+1`.
Fq parse_element(const std::string& s, const FqField* F);

/// Polynomial in `var` over F_q; coefficients are integer literals or
/// parenthesized g-expressions, multiplication by juxtaposition or `*`.
FqPoly parse_poly(const std::string& s, const FqField* F, char var = 'x');

/// Curve syntax: `a1=..,a2=..,a3=..,a4=..,a6=..` (missing coefficients are
/// zero) or the short form `y^2=x^3+Ax+B`.
FqCurve parse_curve(const std::string& s, const FqField* F);

/// Closed points: degree 1 as `(x0,y0)`; higher degree as
/// `[minpoly_x; y=expr]` where expr gives y as a polynomial in x evaluated at
/// the root, or `[minpoly_x; inert]` for the points with no such expression.
ClosedPoint parse_closed_point(const std::string& s, const FqCurve& E);

/// Semicolon-separated list of closed points (`;` inside brackets belongs to
/// the point literal).
std::vector<ClosedPoint> parse_point_set(const std::string& s, const FqCurve& E);

/// q = p^k with p prime; throws parse_error otherwise.
const FqField* field_for_order(long q);

}  // namespace ellpic
