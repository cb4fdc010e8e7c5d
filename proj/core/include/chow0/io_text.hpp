#ifndef CHOW0_IO_TEXT_HPP
#define CHOW0_IO_TEXT_HPP

#include <string>

#include "chow0/polynomial.hpp"

namespace chow0 {

// Chern-polynomial wire format: JSON array of [coeff_string, e1, e2], sorted
// by (e1 + 2 e2 ascending, then e1 descending). Coefficients ride as decimal
// strings; rationals as "num/den".
std::string chern_poly_json(const ZPoly& p);
std::string chern_poly_json(const QPoly& p);

// "9c_1^2 - 27c_2"
std::string chern_poly_latex(const ZPoly& p);
std::string chern_poly_latex(const QPoly& p);

// Membership report wire format:
//   {"query": [...], "ring": "Z", "member": true, "certificate": [[...], ...]}
// with the query and each per-generator cofactor in the term-array format.
// The certificate array is empty for non-members.
std::string membership_report_json(const ZPoly& query, bool member,
                                   const std::vector<ZPoly>& certificate);
std::string membership_report_json(const QPoly& query, bool member,
                                   const std::vector<QPoly>& certificate);

} // namespace chow0

#endif
