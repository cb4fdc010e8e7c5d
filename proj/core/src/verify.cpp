#include "chow0/verify.hpp"

#include <chrono>

#include "chow0/intmath.hpp"
#include "chow0/localization.hpp"
#include "chow0/parallel.hpp"
#include "chow0/weight_algebra.hpp"
#include "chow0/z1_relations.hpp"

namespace chow0 {

std::vector<long> IntRange::odd_values() const {
    std::vector<long> out;
    for (long v = lo % 2 == 0 ? lo + 1 : lo; v <= hi; v += 2) out.push_back(v);
    return out;
}

std::vector<long> IntRange::values() const {
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

namespace verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void finish(SuiteReport& rep, std::vector<CellResult> cells, Clock::time_point start) {
    rep.checked = cells.size();
    for (auto& c : cells) {
        if (!c.pass) rep.pass = false;
    }
    // Keep failures, drop passing cells without notes; order is by index,
    // never by completion time.
    for (auto& c : cells) {
        if (!c.pass || !c.note.empty()) rep.cells.push_back(std::move(c));
    }
    rep.elapsed_seconds = seconds_since(start);
}

} // namespace

ZPoly production_alpha(int i, int k, int r, int d) {
    if (i == 1) return z1::genfun_alpha1(k, r, d);
    return zi::alpha_ik(i, k, r, d);
}

std::vector<RelationClass> relation_family(int r, int d) {
    std::vector<RelationClass> out;
    for (int i = 1; i <= d; ++i) {
        for (int k = 0; k <= i; ++k) {
            out.push_back({i, k, production_alpha(i, k, r, d),
                           i == 1 ? Source::genfun : Source::localization});
        }
    }
    return out;
}

std::optional<ZPoly> oracle_alpha(int i, int k, int r, int d) {
    if (i == 1) return z1::recursion_alpha1(k, r, d);
    if (k == 0) return zi::hadamard_genfun_alpha0(r, d)[static_cast<std::size_t>(i)];
    return std::nullopt;
}

SuiteReport verify_cross(IntRange rr, IntRange dd, unsigned threads) {
    const auto start = Clock::now();
    SuiteReport rep;
    rep.kind = "cross";

    struct Task {
        int r, d;
    };
    std::vector<Task> tasks;
    for (long d : dd.odd_values()) {
        for (long r : rr.values()) tasks.push_back({static_cast<int>(r), static_cast<int>(d)});
    }

    std::vector<std::vector<CellResult>> grouped(tasks.size());
    parallel_for(tasks.size(), threads, [&](std::size_t n) {
        const auto [r, d] = tasks[n];
        auto& out = grouped[n];
        for (int k : {0, 1}) {
            CellResult c{1, k, r, d, false, ""};
            c.pass = z1::genfun_alpha1(k, r, d) == z1::recursion_alpha1(k, r, d);
            if (!c.pass) c.note = "genfun=recursion";
            out.push_back(std::move(c));
        }
        const auto hadamard = zi::hadamard_genfun_alpha0(r, d);
        for (int i = 1; i <= d; ++i) {
            CellResult c{i, 0, r, d, false, ""};
            c.pass = zi::alpha_i0(i, r, d) == hadamard[static_cast<std::size_t>(i)];
            if (!c.pass) c.note = "localization=hadamard";
            out.push_back(std::move(c));
        }
        for (int k : {0, 1}) {
            CellResult c{1, k, r, d, false, ""};
            c.pass = zi::alpha_ik(1, k, r, d) == z1::genfun_alpha1(k, r, d);
            if (!c.pass) c.note = "localization=genfun";
            out.push_back(std::move(c));
        }
    });

    std::vector<CellResult> cells;
    for (auto& g : grouped) {
        for (auto& c : g) cells.push_back(std::move(c));
    }
    finish(rep, std::move(cells), start);
    return rep;
}

SuiteReport verify_identities(IntRange dd, unsigned threads) {
    const auto start = Clock::now();
    SuiteReport rep;
    rep.kind = "identities";

    const auto ds = dd.odd_values();
    auto cells = parallel_map<CellResult>(ds.size(), threads, [&](std::size_t n) {
        const int d = static_cast<int>(ds[n]);
        CellResult c{-1, -1, -1, d, false, ""};
        try {
            z1::claim_R_coefficients(d); // throws IdentityViolated on mismatch
            if (d >= 3) {
                const QPoly lhs = weight::P_chern(d);
                QPoly quad = BigRat(static_cast<long>(d) * d) * QPoly::variable(Var::c2);
                quad -= BigRat((static_cast<long>(d) * d - 1) / 4) *
                        QPoly::term(Monomial::of(Var::c1, 2), BigRat(1));
                if (!(lhs == quad * weight::P_chern(d - 2))) {
                    c.note = "P_d factorization failed";
                    return c;
                }
            }
            c.pass = true;
        } catch (const IdentityViolatedError& e) {
            c.note = e.what();
        }
        return c;
    });
    finish(rep, std::move(cells), start);
    return rep;
}

SuiteReport verify_reduction(IntRange rr, IntRange dd, unsigned threads) {
    const auto start = Clock::now();
    SuiteReport rep;
    rep.kind = "reduction";

    struct Task {
        int r, d;
    };
    std::vector<Task> tasks;
    for (long d : dd.odd_values()) {
        for (long r : rr.values()) tasks.push_back({static_cast<int>(r), static_cast<int>(d)});
    }

    std::vector<std::vector<CellResult>> grouped(tasks.size());
    parallel_for(tasks.size(), threads, [&](std::size_t n) {
        const auto report = ideal::reduction_verify(tasks[n].r, tasks[n].d);
        for (const auto& cls : report.classes) {
            CellResult c{cls.i, cls.k, tasks[n].r, tasks[n].d, cls.member, ""};
            if (!cls.member) c.note = "not in reduced-set ideal";
            grouped[n].push_back(std::move(c));
        }
    });

    std::vector<CellResult> cells;
    for (auto& g : grouped) {
        for (auto& c : g) cells.push_back(std::move(c));
    }
    finish(rep, std::move(cells), start);
    return rep;
}

SuiteReport verify_conjecture(IntRange rr, IntRange dd, bool weak, unsigned threads) {
    const auto start = Clock::now();
    SuiteReport rep;
    rep.kind = "conjecture";

    struct Task {
        int r, d;
    };
    std::vector<Task> tasks;
    for (long d : dd.odd_values()) {
        for (long r : rr.values()) tasks.push_back({static_cast<int>(r), static_cast<int>(d)});
    }

    auto cells = parallel_map<CellResult>(tasks.size(), threads, [&](std::size_t n) {
        const auto report = ideal::conjecture_verify(tasks[n].r, tasks[n].d, weak);
        CellResult c{-1, -1, tasks[n].r, tasks[n].d, false, ""};
        c.pass = report.generated && (weak || report.minimal.value_or(false));
        if (!report.generated) c.note = "candidate set does not generate";
        if (!weak && report.minimal.has_value() && !*report.minimal) {
            c.note += c.note.empty() ? "" : "; ";
            c.note += "candidate set not minimal";
        }
        return c;
    });
    finish(rep, std::move(cells), start);
    return rep;
}

SuiteReport verify_rational(IntRange rr, IntRange dd, unsigned threads) {
    const auto start = Clock::now();
    SuiteReport rep;
    rep.kind = "rational";

    struct Task {
        int r, d;
    };
    std::vector<Task> tasks;
    for (long d : dd.odd_values()) {
        for (long r : rr.values()) tasks.push_back({static_cast<int>(r), static_cast<int>(d)});
    }

    std::vector<std::vector<CellResult>> grouped(tasks.size());
    parallel_for(tasks.size(), threads, [&](std::size_t n) {
        const auto report = ideal::rational_collapse_check(tasks[n].r, tasks[n].d);
        for (const auto& cell : report.cells) {
            CellResult c{cell.i, 0, tasks[n].r, tasks[n].d, cell.q_member, ""};
            c.note = cell.i_torsion_witness ? "i*alpha_{i,0} in Z-ideal" : "i*alpha_{i,0} not in Z-ideal";
            if (!cell.q_member) c.note += "; NOT a Q-member";
            grouped[n].push_back(std::move(c));
        }
        // Degree-one comparison: the transformed degree-d relation ideal
        // equals the Grassmannian relation ideal over Q.
        const auto phi = z1::phi_pullback_check(tasks[n].r, tasks[n].d);
        CellResult c{-1, -1, tasks[n].r, tasks[n].d, phi.equal_over_Q, ""};
        c.note = "phi pullback ideal equality, degrees <= " + std::to_string(phi.degree_checked);
        for (const auto& ratio : phi.ratios) {
            if (ratio.ratio) {
                c.note += "; alpha_{1," + std::to_string(ratio.k) + "} ratio " + *ratio.ratio;
            }
        }
        grouped[n].push_back(std::move(c));
    });

    std::vector<CellResult> cells;
    for (auto& g : grouped) {
        for (auto& c : g) cells.push_back(std::move(c));
    }
    finish(rep, std::move(cells), start);
    return rep;
}

} // namespace verify

namespace ideal {

namespace {

std::vector<ZPoly> reduced_set(int r, int d) {
    std::vector<ZPoly> gens;
    gens.push_back(z1::genfun_alpha1(0, r, d));
    gens.push_back(z1::genfun_alpha1(1, r, d));
    for (long q : prime_powers_up_to(d)) {
        gens.push_back(zi::alpha_i0(static_cast<int>(q), r, d));
    }
    return gens;
}

} // namespace

ReductionReport reduction_verify(int r, int d) {
    ReductionReport rep;
    rep.r = r;
    rep.d = d;
    const ZIdeal reduced(reduced_set(r, d));
    for (const auto& cls : verify::relation_family(r, d)) {
        const bool member = reduced.membership(cls.value).member;
        rep.classes.push_back({cls.i, cls.k, member});
        if (!member) rep.all_member = false;
    }
    if (r == 0) {
        rep.note = "r = 0: alpha_{1,0} = d is a nonunit over Z; degree-0 memberships are "
                   "integer lattice checks";
    }
    return rep;
}

ConjectureReport conjecture_verify(int r, int d, bool weak) {
    ConjectureReport rep;
    rep.r = r;
    rep.d = d;

    std::vector<ZPoly> gens;
    gens.push_back(z1::genfun_alpha1(0, r, d));
    gens.push_back(z1::genfun_alpha1(1, r, d));
    for (long p : prime_divisors(d)) {
        gens.push_back(zi::alpha_i0(static_cast<int>(p), r, d));
    }
    const ZIdeal candidate(gens);

    rep.generated = true;
    for (const auto& cls : verify::relation_family(r, d)) {
        if (!candidate.membership(cls.value).member) {
            rep.generated = false;
            rep.failures.push_back({cls.i, cls.k, false});
        }
    }
    if (!weak) {
        rep.redundant_indices = minimality_check(candidate);
        rep.minimal = rep.redundant_indices.empty();
    }
    return rep;
}

RationalCollapseReport rational_collapse_check(int r, int d) {
    RationalCollapseReport rep;
    rep.r = r;
    rep.d = d;

    const ZPoly a10 = z1::genfun_alpha1(0, r, d);
    const ZPoly a11 = z1::genfun_alpha1(1, r, d);
    const QIdeal q_ideal({promote(a10), promote(a11)});
    const ZIdeal z_ideal({a10, a11});

    for (int i = 2; i <= d; ++i) {
        const ZPoly cls = zi::alpha_i0(i, r, d);
        RationalCollapseCell cell;
        cell.i = i;
        cell.q_member = q_ideal.membership(promote(cls)).member;
        cell.i_torsion_witness = z_ideal.membership(BigInt(i) * cls).member;
        if (!cell.q_member) rep.all_q_member = false;
        rep.cells.push_back(cell);
    }
    return rep;
}

} // namespace ideal

namespace z1 {

PhiReport phi_pullback_check(int r, int d) {
    if (d < 1 || d % 2 == 0) {
        throw EvenDegreeError("phi_pullback_check: d must be odd and positive");
    }
    PhiReport rep;
    rep.r = r;
    rep.d = d;
    rep.degree_checked = d * r + d;

    // Degree-preserving substitution T(c1) = d c1, T(c2) = c2 + (d^2-1)/4 c1^2,
    // inverse to the coordinate change of the Grassmannian comparison map; it
    // carries degree-d relations onto degree-1 relations up to d-power factors.
    const long dd = d;
    const QPoly t_c1 = BigRat(dd) * QPoly::variable(Var::c1);
    const QPoly t_c2 = QPoly::variable(Var::c2) +
                       QPoly::term(Monomial::of(Var::c1, 2), BigRat((dd * dd - 1) / 4));
    auto transform = [&](const ZPoly& p) {
        return promote(p).substitute(Var::c1, t_c1).substitute(Var::c2, t_c2);
    };

    std::vector<QPoly> image;
    for (const auto& cls : verify::relation_family(r, d)) {
        image.push_back(transform(cls.value));
    }
    const QPoly g10 = promote(genfun_alpha1(0, r, 1));
    const QPoly g11 = promote(genfun_alpha1(1, r, 1));

    const ideal::QIdeal image_ideal(image);
    const ideal::QIdeal grassmannian({g10, g11});
    rep.equal_over_Q = ideal_equal(image_ideal, grassmannian);

    for (int k = 0; k <= 1; ++k) {
        PhiGeneratorRatio ratio;
        ratio.i = 1;
        ratio.k = k;
        BigRat lambda;
        const QPoly transformed = transform(genfun_alpha1(k, r, d));
        const QPoly reference = k == 0 ? g10 : g11;
        if (!reference.is_zero() && proportional(transformed, reference, &lambda)) {
            ratio.ratio = lambda.to_string();
        }
        rep.ratios.push_back(std::move(ratio));
    }
    return rep;
}

} // namespace z1

} // namespace chow0
