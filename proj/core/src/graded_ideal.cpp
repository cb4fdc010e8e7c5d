#include "chow0/graded_ideal.hpp"

#include <gmp.h>

namespace chow0::ideal {

namespace {

// lcm of coefficient denominators: the scale that makes a Q-polynomial integral.
BigInt denominator_lcm(const QPoly& p) {
    BigInt l(1);
    for (auto& [m, c] : p.terms()) {
        const BigInt den = c.denominator();
        l = (l * den).divexact(BigInt::gcd(l, den));
    }
    return l;
}

std::vector<BigInt> coords(const ZPoly& p, const std::vector<Monomial>& basis) {
    std::vector<BigInt> v;
    v.reserve(basis.size());
    for (const Monomial& m : basis) v.push_back(p.coeff(m));
    return v;
}

void validate_generators(const auto& gens) {
    for (const auto& g : gens) {
        if (g.is_zero()) throw DomainError("GradedIdeal: zero generator");
        if (!g.is_homogeneous()) {
            throw NotHomogeneousError("GradedIdeal: generator " + g.to_string() +
                                      " is not homogeneous");
        }
        for (Var v : {Var::H, Var::l1, Var::l2, Var::h, Var::dsym}) {
            if (g.uses_var(v)) {
                throw DomainError("GradedIdeal: generator outside Z[c1,c2]/Q[c1,c2]");
            }
        }
    }
}

std::vector<Monomial> slice_monomials(int degree) {
    std::vector<Monomial> out;
    for (int b = 0; 2 * b <= degree; ++b) {
        out.push_back(Monomial::of(Var::c1, static_cast<unsigned>(degree - 2 * b)) *
                      Monomial::of(Var::c2, static_cast<unsigned>(b)));
    }
    return out;
}

// Integral row content of one slice row: over Z the product itself, over Q
// the product scaled by the lcm of its denominators.
ZPoly integral_row(const ZPoly& product, BigInt& scale) {
    scale = BigInt(1);
    return product;
}

ZPoly integral_row(const QPoly& product, BigInt& scale) {
    scale = denominator_lcm(product);
    return demote(BigRat(scale) * product);
}

} // namespace

template <class C>
GradedIdeal<C>::GradedIdeal(std::vector<Polynomial<C>> generators) : gens_(std::move(generators)) {
    validate_generators(gens_);
    degs_.reserve(gens_.size());
    for (const auto& g : gens_) degs_.push_back(g.degree());
}

template <class C>
std::shared_ptr<const DegreeSlice> GradedIdeal<C>::slice(int degree) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(degree);
        if (it != cache_.end()) return it->second;
    }

    auto s = std::make_shared<DegreeSlice>();
    s->degree = degree;
    s->basis = slice_monomials(degree);

    std::vector<std::vector<BigInt>> rows;
    for (std::size_t t = 0; t < gens_.size(); ++t) {
        const int rem = degree - degs_[t];
        if (rem < 0) continue;
        for (const Monomial& mult : slice_monomials(rem)) {
            BigInt scale;
            const ZPoly row_poly = integral_row(Polynomial<C>::term(mult, C(1)) * gens_[t], scale);
            rows.push_back(coords(row_poly, s->basis));
            s->origin.emplace_back(t, mult);
            s->row_scale.push_back(std::move(scale));
        }
    }

    s->matrix = IntMat(rows.size(), s->basis.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < s->basis.size(); ++c) s->matrix.at(r, c) = rows[r][c];
    }
    s->hnf = hermite_normal_form(s->matrix);

    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(degree, std::move(s));
    return it->second;
}

template <class C>
MembershipResult<C> GradedIdeal<C>::membership(const Polynomial<C>& g) const {
    if (!g.is_homogeneous()) {
        throw NotHomogeneousError("membership: query polynomial is not homogeneous");
    }
    for (Var v : {Var::H, Var::l1, Var::l2, Var::h, Var::dsym}) {
        if (g.uses_var(v)) throw DomainError("membership: query outside the Chern ring");
    }

    MembershipResult<C> res;
    if (g.is_zero()) {
        res.member = true;
        res.certificate.assign(gens_.size(), Polynomial<C>::zero());
        return res;
    }

    const auto s = slice(g.degree());
    BigInt g_scale;
    const ZPoly g_int = integral_row(g, g_scale);
    const std::vector<BigInt> target = coords(g_int, s->basis);

    std::vector<C> row_weights;
    if constexpr (std::is_same_v<C, BigInt>) {
        auto x = solve_left_integer(s->hnf, target);
        if (!x) return res;
        row_weights.assign(x->begin(), x->end());
    } else {
        auto x = solve_left_rational(s->hnf, target);
        if (!x) return res;
        // Undo the row and query scaling: g = sum (x_r * scale_r / g_scale) * row_r.
        row_weights.reserve(x->size());
        for (std::size_t r = 0; r < x->size(); ++r) {
            row_weights.push_back((*x)[r] * BigRat(s->row_scale[r], g_scale));
        }
    }

    res.certificate.assign(gens_.size(), Polynomial<C>::zero());
    for (std::size_t r = 0; r < row_weights.size(); ++r) {
        if (row_weights[r] == C(0)) continue;
        const auto& [gen_idx, mult] = s->origin[r];
        res.certificate[gen_idx] += Polynomial<C>::term(mult, row_weights[r]);
    }

    Polynomial<C> recombined;
    for (std::size_t t = 0; t < gens_.size(); ++t) recombined += res.certificate[t] * gens_[t];
    if (!(recombined == g)) {
        throw IdentityViolatedError("membership: certificate failed re-verification");
    }
    res.member = true;
    return res;
}

template <class C>
bool ideal_equal(const GradedIdeal<C>& a, const GradedIdeal<C>& b) {
    for (const auto& g : a.generators()) {
        if (!b.membership(g).member) return false;
    }
    for (const auto& g : b.generators()) {
        if (!a.membership(g).member) return false;
    }
    return true;
}

template <class C>
std::vector<std::size_t> minimality_check(const GradedIdeal<C>& ideal) {
    std::vector<std::size_t> redundant;
    const auto& gens = ideal.generators();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        std::vector<Polynomial<C>> rest;
        rest.reserve(gens.size() - 1);
        for (std::size_t t = 0; t < gens.size(); ++t) {
            if (t != j) rest.push_back(gens[t]);
        }
        if (rest.empty()) continue;
        if (GradedIdeal<C>(std::move(rest)).membership(gens[j]).member) {
            redundant.push_back(j);
        }
    }
    return redundant;
}

template class GradedIdeal<BigInt>;
template class GradedIdeal<BigRat>;
template bool ideal_equal<BigInt>(const GradedIdeal<BigInt>&, const GradedIdeal<BigInt>&);
template bool ideal_equal<BigRat>(const GradedIdeal<BigRat>&, const GradedIdeal<BigRat>&);
template std::vector<std::size_t> minimality_check<BigInt>(const GradedIdeal<BigInt>&);
template std::vector<std::size_t> minimality_check<BigRat>(const GradedIdeal<BigRat>&);

} // namespace chow0::ideal
