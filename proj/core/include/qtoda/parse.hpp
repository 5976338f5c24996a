#pragma once

#include <string>

#include "qtoda/qrational.hpp"

namespace qtoda {

// Reads back anything the canonical printers emit: sums of products of
// rationals, Λi^e, q^k and parenthesized subexpressions, with '/' as field
// division.  Λ0 is accepted on input and expanded through Λ0·Λ1···Λr = 1.
QRational parse_qrational(int rank, const std::string& s);

// Same grammar, restricted results.
ScalarField parse_scalar_field(int rank, const std::string& s);
LambdaPoly parse_lambda_poly(int rank, const std::string& s);

}  // namespace qtoda
