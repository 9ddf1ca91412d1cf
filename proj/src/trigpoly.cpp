#include "hermlab/trigpoly.hpp"

#include <cmath>
#include <numbers>

namespace hermlab {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

int TrigPolynomial::max_abs_degree() const {
    int m = 0;
    for (const auto& [mu, v] : coeffs) {
        (void)v;
        for (int e : mu) m = std::max(m, std::abs(e));
    }
    return m;
}

cplx TrigPolynomial::eval(const std::vector<double>& theta) const {
    require(static_cast<int>(theta.size()) == d, "TrigPolynomial::eval: dimension mismatch");
    cplx s{0.0, 0.0};
    for (const auto& [mu, v] : coeffs) {
        double ph = 0.0;
        for (int j = 0; j < d; ++j) ph += mu[j] * theta[j];
        s += v * std::exp(cplx{0.0, ph});
    }
    return s;
}

TrigPolynomial torus_multiplier(const TrigPolynomial& P,
                                const std::function<cplx(const std::vector<int>&)>& m) {
    TrigPolynomial out(P.d);
    for (const auto& [mu, v] : P.coeffs) out.coeffs[mu] = m(mu) * v;
    return out;
}

double torus_lp_norm(const TrigPolynomial& P, double p, int n_theta) {
    require(p >= 1.0 || std::isinf(p), "torus_lp_norm: p must be >= 1 or inf");
    const int guard = 4 * (P.max_abs_degree() + 1);
    require(n_theta >= guard, "torus_lp_norm: need n_theta >= 4 (max|mu|+1) = " +
                                  std::to_string(guard));
    const double dth = two_pi / n_theta;

    if (P.d == 1) {
        double acc = 0.0, mx = 0.0;
        std::vector<double> th(1);
        for (int j = 0; j < n_theta; ++j) {
            th[0] = dth * j;
            double a = std::abs(P.eval(th));
            mx = std::max(mx, a);
            if (!std::isinf(p)) acc += std::pow(a, p) * dth;
        }
        return std::isinf(p) ? mx : std::pow(acc, 1.0 / p);
    }
    require(P.d == 2, "torus_lp_norm: d must be 1 or 2");
    double acc = 0.0, mx = 0.0;
    std::vector<double> th(2);
    for (int j1 = 0; j1 < n_theta; ++j1) {
        th[0] = dth * j1;
        for (int j2 = 0; j2 < n_theta; ++j2) {
            th[1] = dth * j2;
            double a = std::abs(P.eval(th));
            mx = std::max(mx, a);
            if (!std::isinf(p)) acc += std::pow(a, p) * dth * dth;
        }
    }
    return std::isinf(p) ? mx : std::pow(acc, 1.0 / p);
}

double torus_l2_exact(const TrigPolynomial& P) {
    double s = 0.0;
    for (const auto& [mu, v] : P.coeffs) {
        (void)mu;
        s += std::norm(v);
    }
    return std::sqrt(std::pow(two_pi, P.d) * s);
}

} // namespace hermlab
