#include "k3zeta/monodromy.hpp"

#include <array>
#include <stdexcept>

namespace k3zeta {

namespace {

void require_square_symmetric(const IntMat& g)
{
    size_t n = g.size();
    if (n == 0)
        throw std::invalid_argument("empty pairing matrix");
    for (const auto& row : g)
        if (row.size() != n)
            throw std::invalid_argument("pairing matrix is not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (g[i][j] != g[j][i])
                throw std::invalid_argument("pairing matrix is not symmetric");
}

IntMat mat_mul(const IntMat& a, const IntMat& b)
{
    size_t n = a.size();
    IntMat r(n, IntVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (size_t j = 0; j < n; ++j)
                    r[i][j] = checked_add(r[i][j], checked_mul(a[i][k], b[k][j]));
    return r;
}

IntVec mat_apply(const IntMat& a, const IntVec& x)
{
    size_t n = a.size();
    IntVec r(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            r[i] = checked_add(r[i], checked_mul(a[i][j], x[j]));
    return r;
}

bool mat_is_zero(const IntMat& a)
{
    for (const auto& row : a)
        for (Int v : row)
            if (v != 0)
                return false;
    return true;
}

} // namespace

MonodromyData::MonodromyData(IntMat gram_, IntVec gamma_, IntVec gamma_prime_, IntVec delta_)
    : gram(std::move(gram_)), gamma(std::move(gamma_)),
      gamma_prime(std::move(gamma_prime_)), delta(std::move(delta_))
{
    require_square_symmetric(gram);
    size_t n = gram.size();
    if (gamma.size() != n || gamma_prime.size() != n || delta.size() != n)
        throw std::invalid_argument("vector length differs from the lattice rank");
    if (pair(gamma, gamma) != 0)
        throw std::invalid_argument("gamma must be isotropic");
    if (pair(gamma, gamma_prime) != 1)
        throw std::invalid_argument("(gamma . gamma') must equal 1");
    if (pair(gamma, delta) != 0)
        throw std::invalid_argument("delta must pair to 0 with gamma");
}

Int MonodromyData::pair(const IntVec& x, const IntVec& y) const
{
    size_t n = gram.size();
    Int s = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            s = checked_add(s, checked_mul(x[i], checked_mul(gram[i][j], y[j])));
    return s;
}

IntMat fs_operator(const MonodromyData& d)
{
    size_t n = d.gram.size();
    // (e_i . gamma) and (e_i . delta) are the entries of gram*gamma, gram*delta
    IntVec g_gamma(n, 0), g_delta(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            g_gamma[i] = checked_add(g_gamma[i], checked_mul(d.gram[i][j], d.gamma[j]));
            g_delta[i] = checked_add(g_delta[i], checked_mul(d.gram[i][j], d.delta[j]));
        }
    IntMat m(n, IntVec(n, 0));
    for (size_t col = 0; col < n; ++col)
        for (size_t row = 0; row < n; ++row)
            m[row][col] = checked_sub(checked_mul(g_gamma[col], d.delta[row]),
                                      checked_mul(g_delta[col], d.gamma[row]));
    return m;
}

InvariantPair weight_invariants(const MonodromyData& d)
{
    Int t = d.pair(d.delta, d.delta);
    if (t <= 0)
        throw std::invalid_argument("(delta . delta) must be positive for type III");

    IntMat n = fs_operator(d);
    IntMat n2 = mat_mul(n, n);
    if (!mat_is_zero(mat_mul(n2, n)))
        throw std::logic_error("N^3 != 0");

    // cokernel order of N^2: span(gamma') -> span(gamma), by exact integer
    // elimination of N^2 gamma' against gamma
    IntVec image = mat_apply(n2, d.gamma_prime);
    Int factor = 0;
    bool have = false;
    for (size_t i = 0; i < d.gamma.size(); ++i) {
        if (d.gamma[i] == 0) {
            if (image[i] != 0)
                throw std::logic_error("N^2 gamma' does not lie in the span of gamma");
            continue;
        }
        Int q = image[i] / d.gamma[i];
        if (checked_mul(q, d.gamma[i]) != image[i])
            throw std::logic_error("N^2 gamma' does not lie in the span of gamma");
        if (!have) {
            factor = q;
            have = true;
        } else if (q != factor) {
            throw std::logic_error("N^2 gamma' does not lie in the span of gamma");
        }
    }
    if (!have)
        throw std::invalid_argument("gamma is zero");
    if (checked_abs(factor) != t)
        throw std::logic_error("cokernel order of N^2 disagrees with (delta . delta)");

    Int k = 0;
    for (Int c : d.delta)
        k = gcd_nonneg(k, c);
    if (k == 0 || t % checked_mul(k, k) != 0)
        throw std::logic_error("content of delta does not satisfy k^2 | t");
    return {t, k};
}

KCandidates k_candidates(Int t)
{
    if (t < 4)
        throw std::invalid_argument("t must be at least 4 (a sphere triangulation has >= 4 faces)");
    if (t % 2 != 0)
        throw std::invalid_argument("t must be even");
    KCandidates out;
    for (Int k = 1; checked_mul(k, k) <= t; ++k) {
        if (t % (k * k) != 0)
            continue;
        Int ratio = t / (k * k);
        if (ratio >= 4)
            out.candidates.insert(k);
        else
            out.excluded.push_back({k, ratio, ratio != 1});
    }
    return out;
}

Int cycle_gcd(const std::vector<Int>& weights)
{
    if (weights.empty())
        throw std::invalid_argument("empty weight list");
    Int g = 0;
    for (Int w : weights)
        g = gcd_nonneg(g, w);
    if (g == 0)
        throw std::invalid_argument("all cycle weights are zero");
    return g;
}

Int transverse_pairing(const std::array<Int, 2>& v, const std::array<Int, 2>& w)
{
    return checked_abs(checked_sub(checked_mul(v[0], w[1]), checked_mul(v[1], w[0])));
}

KDetermination determine_k(Int t, Int lower, const std::vector<Int>& pairings)
{
    if (lower < 1)
        throw std::invalid_argument("gcd lower bound must be >= 1");
    KDetermination out;
    for (Int k : k_candidates(t).candidates) {
        if (k % lower != 0)
            continue;
        bool divides_all = true;
        for (Int p : pairings)
            if (checked_abs(p) % k != 0) {
                divides_all = false;
                break;
            }
        if (divides_all)
            out.candidates.insert(k);
    }
    if (out.candidates.empty())
        throw std::invalid_argument("no k is consistent with the given evidence");
    return out;
}

LefschetzPair lefschetz_invariants(Int d, Int e)
{
    if (d < 1 || e < 1)
        throw std::invalid_argument("polarization divisibility and degree must be >= 1");
    // (dH)^2 . (surface of degree e) = d^2 e H^3 in the ambient P^3
    return {checked_mul(checked_mul(d, d), e), d};
}

MirrorReport mirror_check(const LefschetzPair& a, const InvariantPair& b)
{
    MirrorReport r;
    r.lefschetz_t = a.t_check;
    r.weight_t = b.t;
    r.lefschetz_k = a.k_check;
    r.weight_k = b.k;
    r.t_matches = a.t_check == b.t;
    r.k_matches = a.k_check == b.k;
    return r;
}

} // namespace k3zeta
