#include "conekit/quadrature.hpp"

#include "conekit/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace conekit::quad {

Rule gauss_legendre(int n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "Gauss-Legendre order must be positive");
    Rule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -z;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

double composite(const Integrand& f, double lo, double hi, int panels, const Rule& rule) {
    if (panels < 1) fail(ErrorCode::InvalidArgument, "composite rule needs at least one panel");
    const double width = (hi - lo) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * width;
        const double mid = a + 0.5 * width;
        double s = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k)
            s += rule.weights[k] * f(mid + 0.5 * width * rule.nodes[k]);
        total += 0.5 * width * s;
    }
    return total;
}

namespace {

// QUADPACK qk15 abscissae and weights.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo, hi, value, error, l1;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod15(const Integrand& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double gauss = fc * wg[3];
    double kronrod = fc * wgk[7];
    double l1 = std::abs(fc) * wgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += wgk[j] * (f1 + f2);
        l1 += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
    }
    return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half), l1 * std::abs(half)};
}

}  // namespace

AdaptiveResult adaptive(const Integrand& f, double lo, double hi, double rel_tol, double abs_tol,
                        int max_intervals) {
    std::priority_queue<Segment> work;
    work.push(kronrod15(f, lo, hi));
    double value = work.top().value, error = work.top().error, l1 = work.top().l1;
    int count = 1;
    auto done = [&] { return error <= std::max(abs_tol, rel_tol * std::abs(value)); };
    while (!done() && count < max_intervals) {
        Segment worst = work.top();
        work.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        Segment left = kronrod15(f, worst.lo, mid);
        Segment right = kronrod15(f, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        l1 += left.l1 + right.l1 - worst.l1;
        work.push(left);
        work.push(right);
        ++count;
        // Roundoff floor: the Gauss/Kronrod difference cannot drop below this.
        if (error <= 50.0 * std::numeric_limits<double>::epsilon() * l1) break;
    }
    AdaptiveResult out;
    out.value = value;
    out.abs_error = error;
    out.l1_norm = l1;
    out.intervals = count;
    out.converged = done() || error <= 50.0 * std::numeric_limits<double>::epsilon() * l1;
    return out;
}

}  // namespace conekit::quad
