#ifndef CHOW0_VERIFY_HPP
#define CHOW0_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "chow0/graded_ideal.hpp"
#include "chow0/polynomial.hpp"

namespace chow0 {

struct IntRange {
    long lo = 0;
    long hi = 0;
    bool contains(long v) const { return lo <= v && v <= hi; }
    std::vector<long> odd_values() const;
    std::vector<long> values() const;
};

namespace verify {

// Production path for a relation class: generating function for the first
// envelope, localization for the higher ones.
ZPoly production_alpha(int i, int k, int r, int d);

// Oracle path where one exists (recursion at i = 1, Hadamard entry at k = 0).
std::optional<ZPoly> oracle_alpha(int i, int k, int r, int d);

// Which computation path produced a class.
enum class Source { genfun, localization };

struct RelationClass {
    int i = 0;
    int k = 0;
    ZPoly value;
    Source source = Source::genfun;
};

// The full indexed family {alpha_{i,k}^{r,d} : 1 <= i <= d, 0 <= k <= i} by
// production paths, each entry tagged with its source.
std::vector<RelationClass> relation_family(int r, int d);

struct CellResult {
    int i = -1;
    int k = -1;
    int r = -1;
    int d = -1;
    bool pass = false;
    std::string note;
};

struct SuiteReport {
    std::string kind;
    bool pass = true;
    std::size_t checked = 0;
    std::vector<CellResult> cells; // failures always present; passes where per-cell detail matters
    double elapsed_seconds = 0.0;
};

// Cross-path equality: genfun vs recursion on {k in {0,1}} x rr x (odd dd);
// localization vs Hadamard for alpha_{i,0} on {i <= d}; localization at i=1
// vs genfun.
SuiteReport verify_cross(IntRange rr, IntRange dd, unsigned threads = 0);

// The remainder identities behind the first-envelope recursion, plus the
// P_d = (d^2 c2 - (d^2-1)/4 c1^2) P_{d-2} factorization, for odd d in dd.
SuiteReport verify_identities(IntRange dd, unsigned threads = 0);

// Reduction instances: every alpha_{i,k} belongs to the ideal of the reduced
// generating set over Z.
SuiteReport verify_reduction(IntRange rr, IntRange dd, unsigned threads = 0);

// Minimal-generation instances: generation by {alpha_{1,0}, alpha_{1,1}} plus
// the prime-divisor fundamental classes, and minimality of that set unless weak.
SuiteReport verify_conjecture(IntRange rr, IntRange dd, bool weak = false, unsigned threads = 0);

// Rational collapse: alpha_{i,0} in ideal_Q(alpha_{1,0}, alpha_{1,1}) for
// 1 < i <= d; records (never asserts) whether i*alpha_{i,0} already lies in
// the corresponding Z-ideal.
SuiteReport verify_rational(IntRange rr, IntRange dd, unsigned threads = 0);

} // namespace verify

namespace ideal {

struct ClassMembership {
    int i = 0;
    int k = 0;
    bool member = false;
};

struct ReductionReport {
    int r = 0;
    int d = 1;
    std::vector<ClassMembership> classes;
    bool all_member = true;
    std::string note;
};

// Reduction instance: membership of every alpha_{i,k}, i = 1..d, k = 0..i, in
// ideal(alpha_{1,0}, alpha_{1,1}, {alpha_{q,0} : q prime power <= d}) over Z.
ReductionReport reduction_verify(int r, int d);

struct ConjectureReport {
    int r = 0;
    int d = 1;
    bool generated = false;
    std::optional<bool> minimal; // absent in weak mode
    std::vector<ClassMembership> failures;
    std::vector<std::size_t> redundant_indices;
};

// Minimal-generation instance with candidate set
// S = {alpha_{1,0}, alpha_{1,1}} u {alpha_{p,0} : p prime, p | d}.
ConjectureReport conjecture_verify(int r, int d, bool weak);

struct RationalCollapseCell {
    int i = 0;
    bool q_member = false;
    bool i_torsion_witness = false; // i * alpha_{i,0} in Z-ideal(alpha_{1,0}, alpha_{1,1})
};

struct RationalCollapseReport {
    int r = 0;
    int d = 1;
    std::vector<RationalCollapseCell> cells;
    bool all_q_member = true;
};

RationalCollapseReport rational_collapse_check(int r, int d);

} // namespace ideal

} // namespace chow0

#endif
