#ifndef CHOW0_MONOMIAL_HPP
#define CHOW0_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>

#include "chow0/variables.hpp"

namespace chow0 {

// Exponent vector over the fixed variable set. Plain value type; the zero
// vector is the monomial 1.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial{}; }
    static Monomial of(Var v, unsigned e = 1) {
        Monomial m;
        m.e_[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
        return m;
    }

    unsigned exp(Var v) const { return e_[static_cast<std::size_t>(v)]; }
    Monomial with_exp(Var v, unsigned e) const {
        Monomial m = *this;
        m.e_[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
        return m;
    }

    int weighted_degree() const {
        int d = 0;
        for (std::size_t i = 0; i < kVarCount; ++i) d += kVarWeight[i] * e_[i];
        return d;
    }

    bool is_one() const {
        for (auto e : e_)
            if (e != 0) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < kVarCount; ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r;
        for (std::size_t i = 0; i < kVarCount; ++i)
            r.e_[i] = static_cast<std::uint16_t>(e_[i] + m.e_[i]);
        return r;
    }

    // Requires divides(*this) from m's side; exponentwise difference.
    Monomial quotient_by(const Monomial& m) const {
        Monomial r;
        for (std::size_t i = 0; i < kVarCount; ++i)
            r.e_[i] = static_cast<std::uint16_t>(e_[i] - m.e_[i]);
        return r;
    }

    Monomial swapped(Var a, Var b) const {
        Monomial r = *this;
        std::swap(r.e_[static_cast<std::size_t>(a)], r.e_[static_cast<std::size_t>(b)]);
        return r;
    }

    bool operator==(const Monomial& m) const { return e_ == m.e_; }

    std::string to_string() const;

private:
    std::array<std::uint16_t, kVarCount> e_{};
};

// Canonical term order: weighted degree ascending, ties broken so that within
// one degree the exponent vector that is lexicographically larger (variable
// priority c1 > c2 > H > l1 > l2 > h > d) comes first. Iterating a map in
// this order yields exactly the serialization order (degree ascending, then
// c1-exponent descending), and the map's last element is the leading term of
// a multiplication-compatible monomial order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.weighted_degree();
        const int db = b.weighted_degree();
        if (da != db) return da < db;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            const auto v = static_cast<Var>(i);
            if (a.exp(v) != b.exp(v)) return a.exp(v) > b.exp(v);
        }
        return false;
    }
};

inline std::string Monomial::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += kVarName[i];
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
}

} // namespace chow0

#endif
