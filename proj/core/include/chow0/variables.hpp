#ifndef CHOW0_VARIABLES_HPP
#define CHOW0_VARIABLES_HPP

#include <array>
#include <cstddef>
#include <string_view>

namespace chow0 {

// The full variable set this library ever needs. c1, c2 generate the Chern
// ring; H is the ambient equivariant hyperplane class; l1, l2 the torus
// weights (c1 = -(l1+l2), c2 = l1*l2); h the left-factor hyperplane class of
// an envelope component; dsym a formal degree symbol for interpolation output.
enum class Var : unsigned char { c1 = 0, c2, H, l1, l2, h, dsym };

inline constexpr std::size_t kVarCount = 7;

// Grading weights: deg c1 = 1, deg c2 = 2, all geometric classes degree 1,
// the formal degree symbol is inert.
inline constexpr std::array<int, kVarCount> kVarWeight{1, 2, 1, 1, 1, 1, 0};

inline constexpr std::array<std::string_view, kVarCount> kVarName{
    "c1", "c2", "H", "l1", "l2", "h", "d"};

constexpr int var_weight(Var v) { return kVarWeight[static_cast<std::size_t>(v)]; }
constexpr std::string_view var_name(Var v) { return kVarName[static_cast<std::size_t>(v)]; }

} // namespace chow0

#endif
