#include "conekit/exactalg.hpp"

#include "conekit/error.hpp"

#include <algorithm>
#include <cctype>
#include <cfloat>
#include <cmath>
#include <limits>

namespace conekit {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view digits) {
    return mpz_class(std::string(digits), 10);
}

const Rational& dbl_max_q() {
    static const Rational m(DBL_MAX);
    return m;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) fail(ErrorCode::Parse, "empty rational");

    bool negative = false;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = trim(body.substr(0, slash));
        auto den = trim(body.substr(slash + 1));
        if (!all_digits(num) || !all_digits(den))
            fail(ErrorCode::Parse, "malformed rational '" + std::string(s) + "'");
        mpz_class d = parse_integer(den);
        if (d == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(s) + "'");
        value = Rational(parse_integer(num), d);
        value.canonicalize();
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            fail(ErrorCode::Parse, "malformed decimal '" + std::string(s) + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class num = (whole.empty() ? mpz_class(0) : parse_integer(whole)) * scale +
                        (frac.empty() ? mpz_class(0) : parse_integer(frac));
        value = Rational(num, scale);
        value.canonicalize();
    } else {
        if (!all_digits(body)) fail(ErrorCode::Parse, "malformed rational '" + std::string(s) + "'");
        value = Rational(parse_integer(body));
    }
    return negative ? Rational(-value) : value;
}

Rational ratio(long num, long den) {
    if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) {
    if (abs(q) > dbl_max_q()) return q > 0 ? std::numeric_limits<double>::infinity()
                                           : -std::numeric_limits<double>::infinity();
    const double truncated = q.get_d();
    const double away = std::nextafter(truncated, q > 0 ? HUGE_VAL : -HUGE_VAL);
    if (!std::isfinite(away)) return truncated;
    Rational err_t = abs(q - Rational(truncated));
    Rational err_a = abs(q - Rational(away));
    return err_a < err_t ? away : truncated;
}

int sign(const Rational& q) { return sgn(q); }

// ---------------------------------------------------------------------------

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::linear(const Rational& a, const Rational& b) { return Poly(std::vector<Rational>{a, b}); }

Rational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& Poly::leading() const {
    if (coeffs_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of 0");
    return coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval_float(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const double c = to_double(*it);
        if (!std::isfinite(c)) fail(ErrorCode::Overflow, "coefficient " + it->get_str() + " exceeds double range");
        acc = acc * x + c;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
    if (coeffs_.empty()) return {};
    std::vector<Rational> a(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) a[k + 1] = coeffs_[k] / static_cast<unsigned long>(k + 1);
    return Poly(std::move(a));
}

Rational Poly::integrate(const Rational& lo, const Rational& hi) const {
    if (lo > hi) fail(ErrorCode::InvalidInterval, "lo = " + lo.get_str() + " > hi = " + hi.get_str());
    const Poly anti = antiderivative();
    return anti(hi) - anti(lo);
}

Poly Poly::double_antiderivative_from(const Rational& base) const {
    Poly once = antiderivative();
    once -= constant(once(base));
    Poly twice = once.antiderivative();
    twice -= constant(twice(base));
    return twice;
}

Poly Poly::taylor_shift(const Rational& c) const {
    // Repeated synthetic division (Horner's scheme for the shift).
    std::vector<Rational> a = coeffs_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = n - 1; k > i; --k) a[k - 1] += c * a[k];
    return Poly(std::move(a));
}

Poly Poly::reflected() const {
    std::vector<Rational> a = coeffs_;
    for (std::size_t k = 1; k < a.size(); k += 2) a[k] = -a[k];
    return Poly(std::move(a));
}

Poly Poly::deflate(const Rational& root) const {
    if (coeffs_.empty()) return {};
    if ((*this)(root) != 0) fail(ErrorCode::InternalInconsistency, root.get_str() + " is not a root");
    std::vector<Rational> q(coeffs_.size() - 1);
    Rational carry = 0;
    for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
        carry = coeffs_[k] + carry * root;
        q[k - 1] = carry;
    }
    return Poly(std::move(q));
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    normalize();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Poly operator-(Poly p) {
    for (auto& a : p.coeffs_) a = -a;
    return p;
}

std::string Poly::to_string(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    static const char* const superscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    auto exponent = [](std::size_t k) {
        std::string digits = std::to_string(k), out;
        for (char d : digits) out += superscripts[d - '0'];
        return out;
    };

    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = abs(c);
        if (k == 0 || mag != 1) out += mag.get_str();
        if (k >= 1) out += var;
        if (k >= 2) out += exponent(k);
    }
    return out;
}

Poly pow(const Poly& p, unsigned k) {
    Poly result = Poly::constant(1);
    Poly base = p;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    std::vector<Rational> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {Poly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational& lead = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const Rational factor = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - db)] = factor;
        if (factor == 0) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coefficients()[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::vector<Poly> sturm_sequence(const Poly& p) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "Sturm sequence of 0");
    auto monic_abs = [](Poly q) {
        if (!q.is_zero()) q *= Rational(1) / abs(q.leading());
        return q;
    };
    std::vector<Poly> chain{monic_abs(p)};
    Poly next = monic_abs(p.derivative());
    while (!next.is_zero()) {
        chain.push_back(next);
        const std::size_t n = chain.size();
        next = monic_abs(-divmod(chain[n - 2], chain[n - 1]).remainder);
    }
    return chain;
}

int sign_changes_at(const std::vector<Poly>& chain, const Rational& x) {
    int changes = 0;
    int prev = 0;
    for (const auto& q : chain) {
        const int s = sign(q(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

std::size_t count_roots_in_open_interval(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "root count of 0");
    if (!(lo < hi)) fail(ErrorCode::InvalidInterval, "need lo < hi, got (" + lo.get_str() + ", " + hi.get_str() + ")");
    Poly q = p;
    while (q.degree() > 0 && q(lo) == 0) q = q.deflate(lo);
    while (q.degree() > 0 && q(hi) == 0) q = q.deflate(hi);
    if (q.degree() <= 0) return 0;
    const auto chain = sturm_sequence(q);
    return static_cast<std::size_t>(sign_changes_at(chain, lo) - sign_changes_at(chain, hi));
}

}  // namespace conekit
