#pragma once

#include "defq/hseries.hpp"
#include "defq/polydiff.hpp"
#include "defq/polynomial.hpp"
#include "defq/polyvec.hpp"

#include <string>

namespace defq {

/// Canonical text renderings, round-trippable through the parser where the
/// grammar covers them. Polynomials print grlex-descending: "2*x1^2*x2 + 1/3".
std::string render(const Poly& p);
std::string render(const PolyVec& v);
std::string render(const PolyDiffOp& o);

/// Canonical series rendering: "f0 + h^1*(f1) + h^2*(f2)".
std::string render(const HSeries<Poly>& s);
std::string render(const HSeries<PolyVec>& s);
std::string render(const HSeries<PolyDiffOp>& s);

/// Compact series rendering used by the CLI: "x1*x2 + 1/2*h".
std::string render_pretty(const HSeries<Poly>& s);

} // namespace defq
