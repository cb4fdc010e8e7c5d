#include "chow0/localization.hpp"

#include <cassert>

#include "chow0/weight_algebra.hpp"

namespace chow0::zi {

namespace {

void require_odd(int d, const char* who) {
    if (d < 1 || d % 2 == 0) {
        throw EvenDegreeError(std::string(who) + ": degree d = " + std::to_string(d) +
                              " must be odd and positive");
    }
}

#ifndef NDEBUG
// e(N_{q_j / P(W_i)}) = prod_{k != j} (k - j)(l2 - l1) = (-1)^j j!(i-j)! (l2-l1)^i.
bool euler_class_identity_holds(int i, int j) {
    const QPoly diff = QPoly::variable(Var::l2) - QPoly::variable(Var::l1);
    QPoly prod = QPoly::constant(BigRat(1));
    for (int k = 0; k <= i; ++k) {
        if (k != j) prod *= BigRat(k - j) * diff;
    }
    BigRat scale = BigRat(factorial(static_cast<unsigned>(j)) *
                          factorial(static_cast<unsigned>(i - j)));
    if (j % 2 != 0) scale = -scale;
    return prod == scale * diff.pow(static_cast<unsigned>(i));
}
#endif

} // namespace

QPoly fixed_point_restriction(int i, int j, RhoSign sign) {
    if (j < 0 || j > i) throw IndexError("fixed_point_restriction: j out of range");
    QPoly w = QPoly::term(Monomial::of(Var::l1), BigRat(i - j)) +
              QPoly::term(Monomial::of(Var::l2), BigRat(j));
    return sign == RhoSign::negative ? -w : w;
}

QPoly divisibility_class(int m, int k, Var v) {
    if (k < 0 || k > m) throw IndexError("divisibility_class: k out of range");
    QPoly p = QPoly::constant(BigRat(1));
    for (int s = 0; s <= k - 1; ++s) p *= weight::linear_factor(v, m - s, s);
    return p;
}

QPoly localize_pushforward(const QPoly& q_in_h, int i, int d, int r, RhoSign sign) {
    if (i < 1) throw IndexError("localize_pushforward: envelope index i must be >= 1");
    if (i > d) throw IndexError("localize_pushforward: envelope index i exceeds degree d");
    if (r < 0) throw DomainError("localize_pushforward: negative r");
    for (Var v : {Var::c1, Var::c2, Var::H, Var::dsym}) {
        if (q_in_h.uses_var(v)) {
            throw DomainError("localize_pushforward: class must be a polynomial in h, l1, l2");
        }
    }

    QPoly numerator;
    for (int j = 0; j <= i; ++j) {
        assert(euler_class_identity_holds(i, j));
        // Complement factors of P_{r,d} at the fixed point q_j: the kept
        // coordinates are exactly k in [j, d-i+j].
        QPoly complement = QPoly::constant(BigRat(1));
        for (int k = 0; k < j; ++k) complement *= weight::linear_factor(Var::H, d - k, k);
        for (int k = d - i + j + 1; k <= d; ++k) {
            complement *= weight::linear_factor(Var::H, d - k, k);
        }
        complement = complement.pow(static_cast<unsigned>(r + 1));

        const QPoly restricted = q_in_h.substitute(Var::h, fixed_point_restriction(i, j, sign));
        BigRat scale = BigRat(binomial(i, j));
        if (j % 2 != 0) scale = -scale;
        numerator += scale * (restricted * complement);
    }

    const QPoly quotient = weight::divide_by_weight_diff(numerator, i);
    return BigRat(BigInt(1), factorial(static_cast<unsigned>(i))) * quotient;
}

ZPoly alpha_i0(int i, int r, int d) {
    require_odd(d, "alpha_i0");
    const QPoly pushed = localize_pushforward(QPoly::constant(BigRat(1)), i, d, r);
    return demote(weight::symmetrize_to_chern(weight::specialize_H(pushed, d)));
}

ZPoly alpha_ik(int i, int k, int r, int d) {
    require_odd(d, "alpha_ik");
    if (k < 0 || k > i) throw IndexError("alpha_ik: need 0 <= k <= i");
    const QPoly q = k == 0 ? QPoly::constant(BigRat(1)) : QPoly::variable(Var::h, static_cast<unsigned>(k));
    const QPoly pushed = localize_pushforward(q, i, d, r);
    return demote(weight::symmetrize_to_chern(weight::specialize_H(pushed, d)));
}

std::vector<ZPoly> hadamard_genfun_alpha0(int r, int d) {
    require_odd(d, "hadamard_genfun_alpha0");
    if (r < 0) throw DomainError("hadamard_genfun_alpha0: negative r");

    // g_k = c1/2 + (k - d/2)(l2 - l1) with c1 = -(l1 + l2):
    // the factor of P_d kept by coordinate k once H is specialized.
    std::vector<QPoly> g;
    g.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        QPoly f = QPoly::term(Monomial::of(Var::l1), BigRat(d - 1 - 2 * k, 2)) +
                  QPoly::term(Monomial::of(Var::l2), BigRat(2 * k - d - 1, 2));
        g.push_back(std::move(f));
    }

    std::vector<ZPoly> entries;
    entries.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        QPoly sum;
        for (int mu = 0; mu <= i; ++mu) {
            const int nu = i - mu;
            QPoly a = QPoly::constant(BigRat(1));
            for (int k = 0; k < mu; ++k) a *= g[static_cast<std::size_t>(k)];
            for (int k = d - nu + 1; k <= d; ++k) a *= g[static_cast<std::size_t>(k)];
            BigRat scale = BigRat(binomial(i, mu));
            if (mu % 2 != 0) scale = -scale;
            sum += scale * a.pow(static_cast<unsigned>(r + 1));
        }
        QPoly quotient = weight::divide_by_weight_diff(sum, i);
        if (i > 0) quotient = BigRat(BigInt(1), factorial(static_cast<unsigned>(i))) * quotient;
        entries.push_back(demote(weight::symmetrize_to_chern(quotient)));
    }
    return entries;
}

namespace {

// Exact Lagrange interpolation through (x_t, y_t) as a polynomial in the
// formal degree symbol.
QPoly lagrange_in_dsym(const std::vector<long>& xs, const std::vector<BigRat>& ys) {
    const QPoly t = QPoly::variable(Var::dsym);
    QPoly acc;
    for (std::size_t a = 0; a < xs.size(); ++a) {
        QPoly basis = QPoly::constant(BigRat(1));
        BigRat denom(1);
        for (std::size_t b = 0; b < xs.size(); ++b) {
            if (b == a) continue;
            basis *= t - QPoly::constant(BigRat(xs[b]));
            denom *= BigRat(xs[a] - xs[b]);
        }
        acc += (ys[a] / denom) * basis;
    }
    return acc;
}

BigRat eval_at(const QPoly& p, long x) {
    const QPoly v = p.substitute(Var::dsym, QPoly::constant(BigRat(x)));
    return v.constant_term();
}

} // namespace

PolyInDReport poly_in_d_check(int i, int r) {
    if (i < 1) throw DomainError("poly_in_d_check: i must be >= 1");
    if (r < 0) throw DomainError("poly_in_d_check: negative r");

    PolyInDReport rep;
    rep.i = i;
    rep.r = r;
    rep.interpolation_degree = i * (r + 1);

    long d = i % 2 == 0 ? i + 1 : i; // first odd degree >= i
    for (int n = 0; n < rep.interpolation_degree + 1; ++n, d += 2) rep.sample_points.push_back(d);
    rep.extra_points = {d, d + 2};

    std::vector<ZPoly> samples;
    samples.reserve(rep.sample_points.size());
    for (long dd : rep.sample_points) samples.push_back(alpha_i0(i, r, static_cast<int>(dd)));

    // alpha_{i,0} is homogeneous of degree i*r for every d, so the monomial
    // basis of the slice covers all samples.
    std::vector<Monomial> monomials;
    for (int b = 0; 2 * b <= i * r; ++b) {
        monomials.push_back(Monomial::of(Var::c1, static_cast<unsigned>(i * r - 2 * b)) *
                            Monomial::of(Var::c2, static_cast<unsigned>(b)));
    }

    for (const Monomial& m : monomials) {
        std::vector<BigRat> ys;
        ys.reserve(samples.size());
        for (auto& s : samples) ys.emplace_back(s.coeff(m));
        rep.coefficient_polys.emplace_back(m, lagrange_in_dsym(rep.sample_points, ys));
    }

    rep.extra_points_match = true;
    for (long dd : rep.extra_points) {
        const ZPoly direct = alpha_i0(i, r, static_cast<int>(dd));
        for (auto& [m, cp] : rep.coefficient_polys) {
            if (eval_at(cp, dd) != BigRat(direct.coeff(m))) {
                rep.extra_points_match = false;
            }
        }
    }
    return rep;
}

} // namespace chow0::zi
