#include "conekit/numeric.hpp"

#include "conekit/error.hpp"
#include "conekit/quadrature.hpp"

#include <cmath>

namespace conekit::numeric {

double q_value(const std::vector<KEFactor>& factors, double tau) {
    double q = 1.0;
    for (const auto& f : factors)
        q *= std::pow(1.0 - tau * to_double(f.exponent * f.einstein), f.dim);
    return q;
}

double rq_value(const std::vector<KEFactor>& factors, double tau) {
    double r = 0.0;
    for (const auto& f : factors)
        r += f.dim * to_double(f.einstein) / (1.0 - tau * to_double(f.exponent * f.einstein));
    return r * q_value(factors, tau);
}

std::array<Moment, 5> moments(const std::vector<KEFactor>& factors, double b) {
    auto integrate = [&](const char* name, auto&& g) {
        const auto res = quad::adaptive(g, -b, b, 1e-14);
        return Moment{name, res.value, res.l1_norm};
    };
    auto q = [&](double x) { return q_value(factors, x); };
    auto rq = [&](double x) { return rq_value(factors, x); };
    return {
        integrate("A", q),
        integrate("B", [&](double x) { return x * q(x); }),
        integrate("C", [&](double x) { return x * x * q(x); }),
        integrate("IR", rq),
        integrate("IxR", [&](double x) { return x * rq(x); }),
    };
}

CrossCheck cross_validate(const std::vector<KEFactor>& factors, const MomentumData& data) {
    const auto numeric = moments(factors, to_double(data.b));
    const std::array<const Rational*, 5> exact{&data.A, &data.B, &data.C, &data.IR, &data.IxR};
    CrossCheck out;
    for (std::size_t k = 0; k < numeric.size(); ++k) {
        const double e = to_double(*exact[k]);
        const double scale = std::max(std::abs(e), numeric[k].l1_norm);
        const double err = std::abs(numeric[k].value - e) / scale;
        if (out.worst.empty() || err > out.max_relative_error) {
            out.max_relative_error = err;
            out.worst = numeric[k].name;
        }
    }
    return out;
}

double beta_float(const std::vector<KEFactor>& factors, double b) {
    validate_factors(factors);
    if (!(b > 0.0)) fail(ErrorCode::DegenerateInterval, "b must be positive");
    if (auto bound = max_admissible_b(factors); bound && !(b < to_double(*bound)))
        fail(ErrorCode::DegenerateInterval, "b = " + std::to_string(b) + " is not below " + bound->get_str());
    const auto m = moments(factors, b);
    const double A = m[0].value, B = m[1].value, IR = m[3].value, IxR = m[4].value;
    return (q_value(factors, -b) * (b * A + B) - A * IxR + B * IR) / (q_value(factors, b) * (b * A - B));
}

}  // namespace conekit::numeric
