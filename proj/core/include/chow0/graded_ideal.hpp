#ifndef CHOW0_GRADED_IDEAL_HPP
#define CHOW0_GRADED_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "chow0/hnf.hpp"
#include "chow0/polynomial.hpp"

namespace chow0::ideal {

// Homogeneous degree-D slice of an ideal in the graded ring: the lattice (or
// Q-span) spanned by every monomial multiple of every generator landing in
// degree D, expressed in the monomial basis c1^(D-2b) c2^b, b = 0..floor(D/2).
struct DegreeSlice {
    int degree = 0;
    std::vector<Monomial> basis;
    // Row r is row_scale[r]^-1 * (multiplier * generators[origin[r].first]);
    // scales are 1 over Z and clear denominators over Q.
    std::vector<std::pair<std::size_t, Monomial>> origin;
    std::vector<BigInt> row_scale;
    IntMat matrix;
    HnfResult hnf;
};

template <class C>
struct MembershipResult {
    bool member = false;
    // Per-generator cofactors q_t with g = sum q_t * gen_t; empty on failure.
    // Always re-verified by multiplication before being returned.
    std::vector<Polynomial<C>> certificate;
};

// Finitely generated homogeneous ideal of Z[c1,c2] or Q[c1,c2] with lazily
// computed, cached degree slices. Generator order is preserved; certificates
// index into it. The cache is synchronized, values are immutable.
template <class C>
class GradedIdeal {
public:
    explicit GradedIdeal(std::vector<Polynomial<C>> generators);
    GradedIdeal(const GradedIdeal& o) : gens_(o.gens_), degs_(o.degs_) {}
    GradedIdeal& operator=(const GradedIdeal&) = delete;

    const std::vector<Polynomial<C>>& generators() const { return gens_; }
    const std::vector<int>& generator_degrees() const { return degs_; }

    std::shared_ptr<const DegreeSlice> slice(int degree) const;

    // Exact decision; single-slice lattice solve over Z, row-span solve over Q.
    MembershipResult<C> membership(const Polynomial<C>& g) const;

private:
    std::vector<Polynomial<C>> gens_;
    std::vector<int> degs_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::shared_ptr<const DegreeSlice>> cache_;
};

using ZIdeal = GradedIdeal<BigInt>;
using QIdeal = GradedIdeal<BigRat>;

// True iff every generator of each ideal belongs to the other; sound and
// complete for homogeneous ideals.
template <class C>
bool ideal_equal(const GradedIdeal<C>& a, const GradedIdeal<C>& b);

// Indices j with gen_j in the ideal of all the other generators, each tested
// independently against the full complement.
template <class C>
std::vector<std::size_t> minimality_check(const GradedIdeal<C>& ideal);

} // namespace chow0::ideal

#endif
