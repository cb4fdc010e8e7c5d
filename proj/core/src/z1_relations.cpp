#include "chow0/z1_relations.hpp"

#include "chow0/weight_algebra.hpp"

namespace chow0::z1 {

namespace {

void require_odd(int d, const char* who) {
    if (d < 1 || d % 2 == 0) {
        throw EvenDegreeError(std::string(who) + ": degree d = " + std::to_string(d) +
                              " must be odd and positive");
    }
}

// B = 1 - c1 - (d^2-1)/4 c1^2 + d^2 c2; constant term 1, so the expansion
// stays over Z.
ZPoly genfun_denominator(int d) {
    const long dd = d;
    ZPoly b = ZPoly::constant(1);
    b -= ZPoly::variable(Var::c1);
    b += ZPoly::term(Monomial::of(Var::c1, 2), BigInt(-(dd * dd - 1) / 4));
    b += ZPoly::term(Monomial::of(Var::c2), BigInt(dd * dd));
    return b;
}

} // namespace

ZSeries a1_series(int k, int d, int bound) {
    require_odd(d, "a1_series");
    if (k != 0 && k != 1) throw DomainError("a1_series: k must be 0 or 1");
    const ZSeries inv = ZSeries(genfun_denominator(d), bound).invert();
    if (k == 0) return ZPoly::constant(d) * inv;
    ZPoly num = ZPoly::constant(1);
    num += ZPoly::term(Monomial::of(Var::c1), BigInt((d - 1) / 2));
    return num * inv - ZSeries(ZPoly::constant(1), bound);
}

ZPoly genfun_alpha1(int k, int r, int d) {
    if (r < 0) throw DomainError("genfun_alpha1: negative r");
    return a1_series(k, d, r + 1).grade_component(r + k);
}

ZPoly recursion_alpha1(int k, int r, int d) {
    require_odd(d, "recursion_alpha1");
    if (k != 0 && k != 1) throw DomainError("recursion_alpha1: k must be 0 or 1");
    if (r < 0) throw DomainError("recursion_alpha1: negative r");
    const ZPoly c1 = ZPoly::variable(Var::c1);
    const ZPoly c2 = ZPoly::variable(Var::c2);
    ZPoly a10 = ZPoly::constant(d);
    ZPoly a11 = BigInt((d + 1) / 2) * c1;
    for (int step = 0; step < r; ++step) {
        ZPoly next10 = BigInt((1 - d) / 2) * (c1 * a10) + BigInt(d) * a11;
        ZPoly next11 = BigInt(-d) * (c2 * a10) + BigInt((d + 1) / 2) * (c1 * a11);
        a10 = std::move(next10);
        a11 = std::move(next11);
    }
    return k == 0 ? a10 : a11;
}

Z1Pair z1_pair(int r, int d, Path path) {
    Z1Pair out;
    out.r = r;
    out.d = d;
    out.path = path;
    if (path == Path::genfun) {
        out.a10 = genfun_alpha1(0, r, d);
        out.a11 = genfun_alpha1(1, r, d);
    } else {
        out.a10 = recursion_alpha1(0, r, d);
        out.a11 = recursion_alpha1(1, r, d);
    }
    return out;
}

namespace {

// Remainder mod h^2 - c1 h + c2 in the weight variables, where the modulus
// reads (h + l1)(h + l2): rewrite h^2 -> -(l1+l2) h - l1 l2 until deg_h <= 1.
QPoly reduce_mod_p1(QPoly f) {
    const QPoly hrep =
        -(QPoly::variable(Var::l1) + QPoly::variable(Var::l2)) * QPoly::variable(Var::h) -
        QPoly::variable(Var::l1) * QPoly::variable(Var::l2);
    while (f.max_exp(Var::h) >= 2) {
        QPoly low, carry;
        for (auto& [m, c] : f.terms()) {
            if (m.exp(Var::h) >= 2) {
                carry += QPoly::term(m.with_exp(Var::h, m.exp(Var::h) - 2), c);
            } else {
                low += QPoly::term(m, c);
            }
        }
        f = low + carry * hrep;
    }
    return f;
}

// Split a deg_h <= 1 polynomial into (h^0 part, h^1 cofactor), symmetrized
// into Q[c1, c2].
std::pair<QPoly, QPoly> split_and_symmetrize(const QPoly& f) {
    QPoly part0, part1;
    for (auto& [m, c] : f.terms()) {
        if (m.exp(Var::h) == 0) {
            part0 += QPoly::term(m, c);
        } else {
            part1 += QPoly::term(m.with_exp(Var::h, 0), c);
        }
    }
    return {weight::symmetrize_to_chern(part0), weight::symmetrize_to_chern(part1)};
}

} // namespace

ClaimQuotients claim_R_coefficients(int d) {
    require_odd(d, "claim_R_coefficients");

    // P_{0,d-1}(eta) at eta = (d+1)/2 c1 - h, all in the weight variables.
    const BigRat shift(-(d + 1) / 2); // (d+1)/2 c1 = -(d+1)/2 (l1 + l2)
    QPoly f = QPoly::constant(BigRat(1));
    for (int k = 0; k <= d - 1; ++k) {
        QPoly factor = -QPoly::variable(Var::h);
        factor += QPoly::term(Monomial::of(Var::l1), shift + BigRat(d - 1 - k));
        factor += QPoly::term(Monomial::of(Var::l2), shift + BigRat(k));
        f *= factor;
    }

    const QPoly f0 = reduce_mod_p1(f);
    const QPoly f1 = reduce_mod_p1(QPoly::variable(Var::h) * f0);
    const auto [r00, r01] = split_and_symmetrize(f0);
    const auto [r10, r11] = split_and_symmetrize(f1);

    const QPoly pd2 = weight::P_chern(d - 2);
    ClaimQuotients q{exact_div(r00, pd2), exact_div(r01, pd2), exact_div(r10, pd2),
                     exact_div(r11, pd2)};

    const QPoly c1 = QPoly::variable(Var::c1);
    const QPoly c2 = QPoly::variable(Var::c2);
    const bool ok = q.r_k0_h0 == BigRat((d + 1) / 2) * c1 && q.r_k0_h1 == QPoly::constant(BigRat(-d)) &&
                    q.r_k1_h0 == BigRat(d) * c2 && q.r_k1_h1 == BigRat((1 - d) / 2) * c1;
    if (!ok) {
        throw IdentityViolatedError("claim_R_coefficients: quotients disagree with closed forms at d=" +
                                    std::to_string(d));
    }
    return q;
}

} // namespace chow0::z1
