// Exact arithmetic in Z[L] (L the Lefschetz class) and in the u-basis
// u = T/(1-T) used for zeta functions of surface degenerations, with the
// canonical-form extraction t/2*(L-1)^2*T(1+T)/(1-T)^3 + (1+10L+L^2)*2T/(1-T).
#ifndef K3ZETA_MOTIVIC_HPP
#define K3ZETA_MOTIVIC_HPP

#include <string>
#include <vector>

#include "k3zeta/checked.hpp"

namespace k3zeta {

// Integer polynomial in the symbol L, trailing zeros trimmed.
class LPolynomial {
public:
    LPolynomial() = default;
    LPolynomial(Int constant); // implicit: integers embed
    static LPolynomial from_coeffs(std::vector<Int> ascending);
    static LPolynomial lefschetz(); // the class L

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    Int coeff(int power) const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int evaluate(Int l_value) const;
    bool divisible_by(Int k) const;
    LPolynomial divided_by(Int k) const; // exact; throws on remainder

    friend LPolynomial operator+(const LPolynomial&, const LPolynomial&);
    friend LPolynomial operator-(const LPolynomial&, const LPolynomial&);
    friend LPolynomial operator*(const LPolynomial&, const LPolynomial&);
    friend LPolynomial operator*(Int, const LPolynomial&);
    friend bool operator==(const LPolynomial&, const LPolynomial&) = default;

    std::string str() const;            // descending powers: "142*L^2 - 260*L + 142"
    std::string str_ascending() const;  // "2 + 20*L + 2*L^2"

private:
    void trim();
    std::vector<Int> c_; // c_[i] multiplies L^i
};

// A finite sum  sum_{j>=1} c_j u^j  with u = T/(1-T); no constant term,
// so Z(0) = 0. Coefficients live in Z[L].
class UBasisSeries {
public:
    UBasisSeries() = default;
    explicit UBasisSeries(std::vector<LPolynomial> coeffs_from_u1);
    static UBasisSeries u_power(int j); // u^j

    int max_power() const { return static_cast<int>(c_.size()); }
    const LPolynomial& coeff(int j) const; // j >= 1; zero beyond max_power

    friend UBasisSeries operator+(const UBasisSeries&, const UBasisSeries&);
    friend UBasisSeries operator*(const LPolynomial&, const UBasisSeries&);
    friend UBasisSeries operator*(Int, const UBasisSeries&);
    friend bool operator==(const UBasisSeries&, const UBasisSeries&) = default;

private:
    void trim();
    std::vector<LPolynomial> c_; // c_[j-1] multiplies u^j
};

// Result of matching a series against the canonical two-term shape. When
// valid, the series equals (t/2)(L-1)^2 T(1+T)/(1-T)^3 + (1+10L+L^2) 2T/(1-T).
struct SVForm {
    Int t = 0;
    bool valid = false;
    std::string residual_report;
};

// coefficients of T^1..T^N of u^j; the T^n coefficient is C(n-1, j-1), the
// count of interior lattice points of the n-th dilate of the standard
// (j-1)-simplex
std::vector<Int> u_power_expand(int j, int N);

// T^1..T^N coefficients of Z
std::vector<LPolynomial> expand(const UBasisSeries& z, int N);

// substitute u = -1 (the T -> infinity limit of the series)
LPolynomial formal_limit(const UBasisSeries& z);

// -formal_limit
LPolynomial motivic_volume(const UBasisSeries& z);

SVForm to_sv_form(const UBasisSeries& z);

// the unique series with the given t in canonical shape (round-trip inverse
// of to_sv_form on valid input)
UBasisSeries sv_reconstruct(Int t);

// expand, then evaluate every coefficient at L = 1
std::vector<Int> euler_specialize(const UBasisSeries& z, int N);

// closed form in T; canonical two-term shape when SV-valid
std::string render_closed_form(const UBasisSeries& z);

} // namespace k3zeta

#endif
