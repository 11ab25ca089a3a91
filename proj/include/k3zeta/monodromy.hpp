// Integral monodromy arithmetic for type III degenerations: the rank-one
// nilpotent operator N x = (x.gamma) delta - (x.delta) gamma, the invariant
// pair (t, k), the square-divisor candidate filter, the divisibility
// arguments that pin k, the Lefschetz pair, and the mirror-duality check.
#ifndef K3ZETA_MONODROMY_HPP
#define K3ZETA_MONODROMY_HPP

#include <array>
#include <set>
#include <string>
#include <vector>

#include "k3zeta/checked.hpp"

namespace k3zeta {

using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>; // row-major square matrix

// A lattice with pairing and the vectors realizing the monodromy logarithm:
// gamma isotropic, (gamma . gamma_prime) = 1, delta orthogonal to gamma.
struct MonodromyData {
    IntMat gram;
    IntVec gamma;
    IntVec gamma_prime;
    IntVec delta;

    MonodromyData(IntMat gram, IntVec gamma, IntVec gamma_prime, IntVec delta);

    int rank() const { return static_cast<int>(gram.size()); }
    Int pair(const IntVec& x, const IntVec& y) const;
};

// matrix of x -> (x.gamma) delta - (x.delta) gamma in the given basis
IntMat fs_operator(const MonodromyData& d);

struct InvariantPair {
    Int t = 0;
    Int k = 1;
};

// t = (delta.delta), cross-checked against the cokernel order of N^2 from
// the span of gamma_prime to the span of gamma; k = content(delta).
// Requires (delta.delta) > 0.
InvariantPair weight_invariants(const MonodromyData& d);

struct KCandidates {
    std::set<Int> candidates; // k with k^2 | t and t/k^2 >= 4
    // k excluded because t/k^2 < 4; strengthened = true when t/k^2 is 2 or 3
    // (a sphere triangulation needs at least 4 faces; the single-triangle
    // case t/k^2 = 1 is already impossible)
    struct Excluded {
        Int k = 0;
        Int ratio = 0;
        bool strengthened = false;
    };
    std::vector<Excluded> excluded;
};

// all k with k^2 | t compatible with t triangles on a sphere; t must be even
// and >= 4
KCandidates k_candidates(Int t);

// gcd of the absolute values; rejects an all-zero list
Int cycle_gcd(const std::vector<Int>& weights);

// |det [v w]| for 2-vectors: the local intersection pairing of a cycle and
// cocycle section
Int transverse_pairing(const std::array<Int, 2>& v, const std::array<Int, 2>& w);

struct KDetermination {
    std::set<Int> candidates;
    bool determined() const { return candidates.size() == 1; }
    Int value() const { return *candidates.begin(); }
};

// intersect k_candidates(t) with multiples of the gcd lower bound and with
// divisors of every pairing value; throws if the intersection is empty
KDetermination determine_k(Int t, Int lower, const std::vector<Int>& pairings);

struct LefschetzPair {
    Int t_check = 0; // |coker L^2| = d^2 * e for degree-e surfaces polarized by d*H
    Int k_check = 0; // divisibility d of the polarization
};

// polarization d*H on a degree-e surface in P^3
LefschetzPair lefschetz_invariants(Int d, Int e);

struct MirrorReport {
    Int lefschetz_t = 0, weight_t = 0;
    Int lefschetz_k = 0, weight_k = 0;
    bool t_matches = false, k_matches = false;
    bool ok() const { return t_matches && k_matches; }
};

// checks t_check(a) = t(b) and k_check(a) = k(b)
MirrorReport mirror_check(const LefschetzPair& a, const InvariantPair& b);

} // namespace k3zeta

#endif
