#include "k3zeta/motivic.hpp"

#include <sstream>
#include <stdexcept>

namespace k3zeta {

LPolynomial::LPolynomial(Int constant)
{
    if (constant != 0)
        c_.push_back(constant);
}

LPolynomial LPolynomial::from_coeffs(std::vector<Int> ascending)
{
    LPolynomial p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

LPolynomial LPolynomial::lefschetz()
{
    return from_coeffs({0, 1});
}

void LPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Int LPolynomial::coeff(int power) const
{
    if (power < 0 || power >= static_cast<int>(c_.size()))
        return 0;
    return c_[static_cast<size_t>(power)];
}

Int LPolynomial::evaluate(Int l_value) const
{
    Int r = 0;
    for (size_t i = c_.size(); i-- > 0;)
        r = checked_add(checked_mul(r, l_value), c_[i]);
    return r;
}

bool LPolynomial::divisible_by(Int k) const
{
    if (k == 0)
        return is_zero();
    for (Int c : c_)
        if (c % k != 0)
            return false;
    return true;
}

LPolynomial LPolynomial::divided_by(Int k) const
{
    if (!divisible_by(k))
        throw std::invalid_argument("inexact division of an L-polynomial");
    LPolynomial r = *this;
    for (auto& c : r.c_)
        c /= k;
    return r;
}

LPolynomial operator+(const LPolynomial& a, const LPolynomial& b)
{
    LPolynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = checked_add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

LPolynomial operator-(const LPolynomial& a, const LPolynomial& b)
{
    return a + (-1) * b;
}

LPolynomial operator*(const LPolynomial& a, const LPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    LPolynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
    r.trim();
    return r;
}

LPolynomial operator*(Int s, const LPolynomial& a)
{
    LPolynomial r = a;
    for (auto& c : r.c_)
        c = checked_mul(s, c);
    r.trim();
    return r;
}

namespace {

void append_term(std::ostringstream& os, bool& first, Int coeff, int power)
{
    if (coeff == 0)
        return;
    Int a = coeff;
    if (first) {
        if (a < 0) {
            os << "-";
            a = checked_neg(a);
        }
        first = false;
    } else {
        os << (a < 0 ? " - " : " + ");
        a = checked_abs(a);
    }
    if (power == 0) {
        os << a;
        return;
    }
    if (a != 1)
        os << a << "*";
    os << "L";
    if (power > 1)
        os << "^" << power;
}

} // namespace

std::string LPolynomial::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int p = degree(); p >= 0; --p)
        append_term(os, first, coeff(p), p);
    return os.str();
}

std::string LPolynomial::str_ascending() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int p = 0; p <= degree(); ++p)
        append_term(os, first, coeff(p), p);
    return os.str();
}

UBasisSeries::UBasisSeries(std::vector<LPolynomial> coeffs_from_u1)
    : c_(std::move(coeffs_from_u1))
{
    trim();
}

UBasisSeries UBasisSeries::u_power(int j)
{
    if (j < 1)
        throw std::invalid_argument("u powers start at 1");
    std::vector<LPolynomial> c(static_cast<size_t>(j));
    c.back() = LPolynomial(1);
    return UBasisSeries(std::move(c));
}

void UBasisSeries::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

const LPolynomial& UBasisSeries::coeff(int j) const
{
    static const LPolynomial zero;
    if (j < 1)
        throw std::invalid_argument("u powers start at 1");
    if (j > static_cast<int>(c_.size()))
        return zero;
    return c_[static_cast<size_t>(j - 1)];
}

UBasisSeries operator+(const UBasisSeries& a, const UBasisSeries& b)
{
    std::vector<LPolynomial> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i) + 1) + b.coeff(static_cast<int>(i) + 1);
    return UBasisSeries(std::move(c));
}

UBasisSeries operator*(const LPolynomial& s, const UBasisSeries& a)
{
    std::vector<LPolynomial> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = s * a.c_[i];
    return UBasisSeries(std::move(c));
}

UBasisSeries operator*(Int s, const UBasisSeries& a)
{
    return LPolynomial(s) * a;
}

std::vector<Int> u_power_expand(int j, int N)
{
    if (j < 1 || N < 1)
        throw std::invalid_argument("u_power_expand needs j >= 1 and N >= 1");
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(N));
    for (Int n = 1; n <= N; ++n)
        out.push_back(binomial(n - 1, j - 1));
    return out;
}

std::vector<LPolynomial> expand(const UBasisSeries& z, int N)
{
    if (N < 1)
        throw std::invalid_argument("expansion order must be >= 1");
    std::vector<LPolynomial> out(static_cast<size_t>(N));
    for (int j = 1; j <= z.max_power(); ++j) {
        auto binoms = u_power_expand(j, N);
        for (int n = 1; n <= N; ++n)
            out[static_cast<size_t>(n - 1)] =
                out[static_cast<size_t>(n - 1)] + binoms[static_cast<size_t>(n - 1)] * z.coeff(j);
    }
    return out;
}

LPolynomial formal_limit(const UBasisSeries& z)
{
    LPolynomial r;
    for (int j = 1; j <= z.max_power(); ++j)
        r = r + (j % 2 == 0 ? 1 : -1) * z.coeff(j);
    return r;
}

LPolynomial motivic_volume(const UBasisSeries& z)
{
    return (-1) * formal_limit(z);
}

namespace {

// the fixed degree-2 cohomology block 2*(1 + 10L + L^2)
LPolynomial k3_h2_block()
{
    return LPolynomial::from_coeffs({2, 20, 2});
}

LPolynomial l_minus_one_sq()
{
    return LPolynomial::from_coeffs({1, -2, 1});
}

} // namespace

SVForm to_sv_form(const UBasisSeries& z)
{
    SVForm out;
    std::ostringstream report;

    if (z.max_power() > 3) {
        out.residual_report = "u-powers beyond u^3 present";
        return out;
    }
    const LPolynomial c1 = z.coeff(1), c2 = z.coeff(2), c3 = z.coeff(3);

    if (2 * c2 != 3 * c3) {
        report << "u^2 coefficient differs from (3/2) * u^3 coefficient";
        out.residual_report = report.str();
        return out;
    }

    // c3 must be t*(L-1)^2 with t a nonnegative even integer
    Int t = 0;
    if (!c3.is_zero()) {
        t = c3.coeff(2);
        if (c3 != t * l_minus_one_sq() || t < 0 || t % 2 != 0) {
            report << "u^3 coefficient is not an even nonnegative multiple of (L-1)^2";
            out.residual_report = report.str();
            return out;
        }
    }

    if (c1 - (t / 2) * l_minus_one_sq() != k3_h2_block()) {
        report << "u coefficient minus half the u^3 coefficient is not 2*(1+10*L+L^2)";
        out.residual_report = report.str();
        return out;
    }

    out.t = t;
    out.valid = true;
    return out;
}

UBasisSeries sv_reconstruct(Int t)
{
    if (t < 0 || t % 2 != 0)
        throw std::invalid_argument("t must be a nonnegative even integer");
    // T(1+T)/(1-T)^3 = 2u^3 + 3u^2 + u
    LPolynomial half_t(t / 2);
    std::vector<LPolynomial> c{
        half_t * l_minus_one_sq() + k3_h2_block(),
        (3 * half_t) * l_minus_one_sq(),
        (2 * half_t) * l_minus_one_sq(),
    };
    return UBasisSeries(std::move(c));
}

std::vector<Int> euler_specialize(const UBasisSeries& z, int N)
{
    std::vector<Int> out;
    for (const auto& p : expand(z, N))
        out.push_back(p.evaluate(1));
    return out;
}

namespace {

// coefficient prefix for one u-basis term; empty for 1, "-" for -1,
// parenthesized for genuine polynomials
std::string coeff_prefix(const LPolynomial& c)
{
    if (c == LPolynomial(1))
        return "";
    if (c == LPolynomial(-1))
        return "-";
    bool monomial = false;
    int nonzero = 0;
    for (int p = 0; p <= c.degree(); ++p)
        if (c.coeff(p) != 0)
            ++nonzero;
    monomial = nonzero == 1;
    if (monomial && c.coeff(c.degree()) > 0)
        return c.str() + "*";
    return "(" + c.str() + ")*";
}

} // namespace

std::string render_closed_form(const UBasisSeries& z)
{
    SVForm sv = to_sv_form(z);
    std::ostringstream os;
    if (sv.valid) {
        if (sv.t > 0) {
            if (sv.t / 2 != 1)
                os << sv.t / 2 << "*";
            os << "(L-1)^2*T*(1+T)/(1-T)^3 + ";
        }
        os << "(1+10*L+L^2)*2*T/(1-T)";
        return os.str();
    }
    bool first = true;
    for (int j = 1; j <= z.max_power(); ++j) {
        const auto& c = z.coeff(j);
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << coeff_prefix(c);
        if (j == 1)
            os << "T/(1-T)";
        else
            os << "(T/(1-T))^" << j;
    }
    if (first)
        return "0";
    return os.str();
}

} // namespace k3zeta
