#pragma once

// Exact rational scalars and univariate polynomials over Q.
//
// Rational is GMP's mpq_class: every arithmetic result is canonical (lowest
// terms, positive denominator). Poly keeps ascending coefficients with no
// trailing zeros, so degree() is O(1) and the zero polynomial is empty.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace conekit {

using Rational = mpq_class;

// Accepts "p", "p/q" and finite decimals such as "-0.125"; the value is exact.
Rational parse_rational(std::string_view text);
// num/den in lowest terms; den must be nonzero.
Rational ratio(long num, long den);
std::string to_string(const Rational& q);
// Round-to-nearest conversion (mpq_get_d truncates).
double to_double(const Rational& q);
int sign(const Rational& q);

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> ascending);
    Poly(std::initializer_list<Rational> ascending)
        : Poly(std::vector<Rational>(ascending)) {}

    static Poly constant(const Rational& c);
    // a + b*x
    static Poly linear(const Rational& a, const Rational& b);
    static Poly identity() { return linear(0, 1); }

    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    Rational coeff(std::size_t k) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    // Horner in double. Throws Overflow if a coefficient does not fit.
    double eval_float(double x) const;

    Poly derivative() const;
    // Antiderivative with zero constant term.
    Poly antiderivative() const;
    // Exact integral over [lo, hi]; InvalidInterval if lo > hi.
    Rational integrate(const Rational& lo, const Rational& hi) const;
    // W with W'' = *this and W(base) = W'(base) = 0.
    Poly double_antiderivative_from(const Rational& base) const;
    // p(c + s) as a polynomial in s.
    Poly taylor_shift(const Rational& c) const;
    // p(-x).
    Poly reflected() const;
    // Quotient by (x - root); requires p(root) = 0.
    Poly deflate(const Rational& root) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
    friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
    friend Poly operator-(Poly p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    // Human-readable form in the variable `var`, e.g. "1 - τ - 2τ²".
    std::string to_string(std::string_view var = "τ") const;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

Poly pow(const Poly& p, unsigned k);

// Euclidean division over Q: a = q*b + r with deg r < deg b.
struct DivMod {
    Poly quotient;
    Poly remainder;
};
DivMod divmod(const Poly& a, const Poly& b);

// Sturm chain p, p', -rem(p, p'), ... (each member rescaled by a positive
// constant, which leaves sign counts unchanged).
std::vector<Poly> sturm_sequence(const Poly& p);
int sign_changes_at(const std::vector<Poly>& chain, const Rational& x);

// Number of distinct real roots in the open interval (lo, hi). Roots sitting
// exactly at lo or hi are divided out first and never counted.
std::size_t count_roots_in_open_interval(const Poly& p, const Rational& lo, const Rational& hi);

}  // namespace conekit
