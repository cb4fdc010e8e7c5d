#ifndef CHOW0_POLYNOMIAL_HPP
#define CHOW0_POLYNOMIAL_HPP

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chow0/bigint.hpp"
#include "chow0/bigrat.hpp"
#include "chow0/errors.hpp"
#include "chow0/monomial.hpp"

namespace chow0 {

// Sparse multivariate polynomial over an exact coefficient ring (BigInt or
// BigRat). Terms live in a map under the canonical order, zero coefficients
// are never stored, so operator== is structural equality.
//
// Values are immutable in spirit: every operation returns a fresh value and
// nothing mutates through shared state, so concurrent reads are safe.
template <class C>
class Polynomial {
public:
    using Coeff = C;
    using TermMap = std::map<Monomial, C, MonomialOrder>;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial constant(C c) {
        Polynomial p;
        p.add_term(Monomial::one(), std::move(c));
        return p;
    }
    static Polynomial variable(Var v, unsigned e = 1) {
        Polynomial p;
        p.add_term(Monomial::of(v, e), C(1));
        return p;
    }
    static Polynomial term(Monomial m, C c) {
        Polynomial p;
        p.add_term(std::move(m), std::move(c));
        return p;
    }
    Polynomial(std::initializer_list<std::pair<Monomial, C>> terms) {
        for (auto& [m, c] : terms) add_term(m, c);
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Weighted total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weighted_degree(); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = terms_.begin()->first.weighted_degree();
        return terms_.rbegin()->first.weighted_degree() == d;
    }

    C coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }
    C constant_term() const { return coeff(Monomial::one()); }

    bool uses_var(Var v) const {
        for (auto& [m, c] : terms_)
            if (m.exp(v) > 0) return true;
        return false;
    }

    int max_exp(Var v) const {
        int e = 0;
        for (auto& [m, c] : terms_) e = std::max(e, static_cast<int>(m.exp(v)));
        return e;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        for (auto& [m, c] : rhs.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        for (auto& [m, c] : rhs.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (auto& [ma, ca] : a.terms_) {
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        }
        return r;
    }
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    friend Polynomial operator*(const C& s, const Polynomial& p) {
        Polynomial r;
        if (s == C(0)) return r;
        for (auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& p, const C& s) { return s * p; }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(C(1));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1u) r = r * base;
            e >>= 1u;
            if (e > 0) base = base * base;
        }
        return r;
    }

    // Sum of the terms of weighted degree exactly deg.
    Polynomial grade_component(int deg) const {
        Polynomial r;
        for (auto& [m, c] : terms_) {
            if (m.weighted_degree() == deg) r.terms_.emplace(m, c);
        }
        return r;
    }

    // Discard terms of weighted degree > bound.
    Polynomial truncated(int bound) const {
        Polynomial r;
        for (auto& [m, c] : terms_) {
            if (m.weighted_degree() <= bound) r.terms_.emplace(m, c);
        }
        return r;
    }

    // Exact composition p[v := value].
    Polynomial substitute(Var v, const Polynomial& value) const {
        std::vector<Polynomial> powers{constant(C(1))};
        const int top = max_exp(v);
        for (int e = 1; e <= top; ++e) powers.push_back(powers.back() * value);
        Polynomial r;
        for (auto& [m, c] : terms_) {
            const unsigned e = m.exp(v);
            Polynomial t = term(m.with_exp(v, 0), c);
            r += e == 0 ? t : t * powers[e];
        }
        return r;
    }

    Polynomial swapped_vars(Var a, Var b) const {
        Polynomial r;
        for (auto& [m, c] : terms_) r.add_term(m.swapped(a, b), c);
        return r;
    }

    // Leading term under the multiplication-compatible order (map maximum).
    const std::pair<const Monomial, C>& leading() const {
        if (terms_.empty()) throw DomainError("Polynomial: leading term of zero");
        return *terms_.rbegin();
    }

    // Quotient of an exact division; throws NotDivisibleError if any remainder
    // is left (over Z also when a cofactor would need fractional coefficients).
    friend Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw NotDivisibleError("Polynomial: division by zero");
        Polynomial q;
        Polynomial rem = a;
        const auto& [bm, bc] = b.leading();
        while (!rem.is_zero()) {
            const auto& [rm, rc] = rem.leading();
            if (!bm.divides(rm)) {
                throw NotDivisibleError("Polynomial: exact division left remainder");
            }
            const Polynomial t = term(rm.quotient_by(bm), coeff_div(rc, bc));
            q += t;
            rem -= t * b;
        }
        return q;
    }

    bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

    std::string to_string() const;

private:
    static BigInt coeff_div(const BigInt& a, const BigInt& b) { return a.divexact(b); }
    static BigRat coeff_div(const BigRat& a, const BigRat& b) { return a / b; }

    void add_term(const Monomial& m, C c) {
        if (c == C(0)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
        } else {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    TermMap terms_;
};

using ZPoly = Polynomial<BigInt>;
using QPoly = Polynomial<BigRat>;

// Lossless Z -> Q coefficient promotion.
inline QPoly promote(const ZPoly& p) {
    QPoly r;
    for (auto& [m, c] : p.terms()) r += QPoly::term(m, BigRat(c));
    return r;
}

// Checked Q -> Z demotion; throws DemotionError on any denominator != 1.
inline ZPoly demote(const QPoly& p) {
    ZPoly r;
    for (auto& [m, c] : p.terms()) {
        if (!c.is_integer()) {
            throw DemotionError("demote: coefficient " + c.to_string() + " of " +
                                m.to_string() + " is not an integer");
        }
        r += ZPoly::term(m, c.numerator());
    }
    return r;
}

// True when a == lambda * b for a scalar lambda (reported if requested);
// b must be nonzero.
inline bool proportional(const QPoly& a, const QPoly& b, BigRat* lambda = nullptr) {
    if (b.is_zero()) throw DomainError("proportional: zero reference polynomial");
    if (a.is_zero()) {
        if (lambda) *lambda = BigRat(0);
        return true;
    }
    const BigRat ref = b.coeff(a.leading().first);
    if (ref.is_zero()) return false;
    const BigRat ratio = a.leading().second / ref;
    if (a == ratio * b) {
        if (lambda) *lambda = ratio;
        return true;
    }
    return false;
}

template <class C>
std::string Polynomial<C>::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        std::string cs = c.to_string();
        bool negative = false;
        if (!cs.empty() && cs[0] == '-') {
            negative = true;
            cs = cs.substr(1);
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (m.is_one()) {
            out += cs;
        } else if (cs == "1") {
            out += m.to_string();
        } else {
            out += cs + "*" + m.to_string();
        }
    }
    return out;
}

} // namespace chow0

#endif
