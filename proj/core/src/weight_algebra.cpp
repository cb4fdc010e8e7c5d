#include "chow0/weight_algebra.hpp"

namespace chow0::weight {

QPoly linear_factor(Var v, long a, long b) {
    QPoly p = QPoly::variable(v);
    p += QPoly::term(Monomial::of(Var::l1), BigRat(a));
    p += QPoly::term(Monomial::of(Var::l2), BigRat(b));
    return p;
}

QPoly product_of_weights(int m, Var v) {
    if (m < -1) throw DomainError("product_of_weights: m < -1");
    QPoly p = QPoly::constant(BigRat(1));
    for (int k = 0; k <= m; ++k) p *= linear_factor(v, m - k, k);
    return p;
}

QPoly build_P(int r, int d) {
    if (r < 0 || d < 1) throw DomainError("build_P: need r >= 0, d >= 1");
    return product_of_weights(d, Var::H).pow(static_cast<unsigned>(r + 1));
}

QPoly specialize_H(const QPoly& p, int d) {
    if (d < 1 || d % 2 == 0) {
        throw EvenDegreeError("specialize_H: degree d = " + std::to_string(d) +
                              " must be odd and positive");
    }
    const BigRat s(-(d + 1) / 2);
    QPoly value = QPoly::term(Monomial::of(Var::l1), s) + QPoly::term(Monomial::of(Var::l2), s);
    return p.substitute(Var::H, value);
}

namespace {

// Largest term of p by (weighted degree, then l1-exponent). For a nonzero
// symmetric polynomial this term has e(l1) >= e(l2).
const std::pair<const Monomial, BigRat>& dominant_term(const QPoly& p) {
    const std::pair<const Monomial, BigRat>* best = nullptr;
    for (auto& t : p.terms()) {
        if (best == nullptr) {
            best = &t;
            continue;
        }
        const int dt = t.first.weighted_degree();
        const int db = best->first.weighted_degree();
        if (dt > db || (dt == db && t.first.exp(Var::l1) > best->first.exp(Var::l1))) {
            best = &t;
        }
    }
    return *best;
}

} // namespace

QPoly symmetrize_to_chern(const QPoly& p) {
    for (Var v : {Var::c1, Var::c2, Var::H, Var::h, Var::dsym}) {
        if (p.uses_var(v)) {
            throw DomainError(std::string("symmetrize_to_chern: unexpected variable ") +
                              std::string(var_name(v)));
        }
    }
    if (!(p == p.swapped_vars(Var::l1, Var::l2))) {
        throw NotSymmetricError("symmetrize_to_chern: polynomial is not symmetric in l1, l2");
    }

    static const QPoly e1 =
        QPoly::variable(Var::l1) + QPoly::variable(Var::l2); // = -c1
    static const QPoly e2 = QPoly::variable(Var::l1) * QPoly::variable(Var::l2); // = c2

    QPoly rest = p;
    QPoly out;
    while (!rest.is_zero()) {
        const auto& dom = dominant_term(rest);
        const Monomial m = dom.first;
        const BigRat c = dom.second;
        const unsigned a = m.exp(Var::l1);
        const unsigned b = m.exp(Var::l2);
        if (a < b) {
            throw NotSymmetricError("symmetrize_to_chern: reduction lost symmetry");
        }
        // l1^a l2^b + ... = e1^(a-b) e2^b + lower l1-exponent; e1 = -c1, e2 = c2.
        Monomial cm = Monomial::of(Var::c1, a - b) * Monomial::of(Var::c2, b);
        const BigRat coeff = ((a - b) % 2 == 0) ? c : -c;
        out += QPoly::term(cm, coeff);
        rest -= c * (e1.pow(a - b) * e2.pow(b));
    }
    return out;
}

QPoly divide_by_weight_diff(const QPoly& p, int i) {
    if (i < 0) throw DomainError("divide_by_weight_diff: negative power");
    if (i == 0) return p;
    const QPoly diff = QPoly::variable(Var::l2) - QPoly::variable(Var::l1);
    return exact_div(p, diff.pow(static_cast<unsigned>(i)));
}

QPoly P_chern(int d) {
    if (d == -1) return QPoly::constant(BigRat(1));
    return symmetrize_to_chern(specialize_H(product_of_weights(d, Var::H), d));
}

} // namespace chow0::weight
