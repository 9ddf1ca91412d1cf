#include "hermlab/spectral.hpp"
#include "hermlab/fftutil.hpp"

#include <cmath>
#include <numbers>

namespace hermlab {

namespace {
constexpr double pi = std::numbers::pi;
}

cplx SpectralSymbol::eval(double lambda) const {
    switch (family) {
        case Family::Constant:
            return value;
        case Family::Oscillatory: {
            require(lambda > 0.0, "oscillatory symbol: lambda must be positive");
            const double ph = std::pow(lambda, gamma);
            return std::exp(cplx{0.0, ph}) / std::pow(lambda, beta);
        }
        case Family::Schrodinger:
            return std::exp(cplx{0.0, t * lambda});
        case Family::Wave: {
            require(lambda > 0.0, "wave symbol: lambda must be positive");
            const double r = std::sqrt(lambda);
            return cplx{std::sin(t * r) / r, 0.0};
        }
        case Family::Table: {
            auto it = table.find(lambda);
            if (it == table.end())
                fail("table symbol: no entry for eigenvalue " + std::to_string(lambda));
            return it->second;
        }
        case Family::Callable:
            return fn(lambda);
    }
    fail("unreachable symbol family");
}

SpectralSymbol SpectralSymbol::constant(cplx v) {
    SpectralSymbol m;
    m.family = Family::Constant;
    m.value = v;
    return m;
}

SpectralSymbol SpectralSymbol::oscillatory(double beta, double gamma) {
    SpectralSymbol m;
    m.family = Family::Oscillatory;
    m.beta = beta;
    m.gamma = gamma;
    return m;
}

SpectralSymbol SpectralSymbol::schrodinger(double t) {
    SpectralSymbol m;
    m.family = Family::Schrodinger;
    m.t = t;
    return m;
}

SpectralSymbol SpectralSymbol::wave(double t) {
    SpectralSymbol m;
    m.family = Family::Wave;
    m.t = t;
    return m;
}

SpectralSymbol SpectralSymbol::from_table(std::map<double, cplx> entries) {
    SpectralSymbol m;
    m.family = Family::Table;
    m.table = std::move(entries);
    return m;
}

SpectralSymbol SpectralSymbol::callable(std::function<cplx(double)> fn) {
    SpectralSymbol m;
    m.family = Family::Callable;
    m.fn = std::move(fn);
    return m;
}

HermiteCoeffs apply_symbol(const HermiteCoeffs& c, const SpectralSymbol& m) {
    HermiteCoeffs out(c.d, c.N);
    for (const auto& [a, v] : c.entries)
        out.entries[a] = m.eval(2.0 * mi_order(a) + c.d) * v;
    return out;
}

HermiteCoeffs schrodinger_propagate(const HermiteCoeffs& c, double t) {
    return apply_symbol(c, SpectralSymbol::schrodinger(t));
}

HermiteCoeffs wave_propagate(const HermiteCoeffs& c, double t) {
    return apply_symbol(c, SpectralSymbol::wave(t));
}

HermiteCoeffs riesz_transform(const HermiteCoeffs& c, int j) {
    require(j >= 0 && j < c.d, "riesz_transform: axis out of range");
    // (-d/dx_j + x_j) Phi_alpha = sqrt(2 alpha_j + 2) Phi_{alpha + e_j},
    // applied after H^{-1/2}
    HermiteCoeffs out(c.d, c.N + 1);
    for (const auto& [a, v] : c.entries) {
        MultiIndex b = a;
        b[j] += 1;
        const double lam = 2.0 * mi_order(a) + c.d;
        out.entries[b] += v * std::sqrt(2.0 * a[j] + 2.0) / std::sqrt(lam);
    }
    return out;
}

SlocResult sloc_sobolev_norm(const SpectralSymbol& m, const SlocSpec& spec) {
    require(m.continuum(), "sloc_sobolev_norm: symbol must be defined on the half line");
    require(spec.t_samples >= 2, "sloc_sobolev_norm: need at least two t samples");

    Grid sg(1, spec.s_halfwidth, spec.s_nodes);
    auto psi = [](double s) -> double {
        if (s <= 0.5 || s >= 1.0) return 0.0;
        return std::exp(-1.0 / ((s - 0.5) * (1.0 - s)));
    };

    SlocResult res;
    res.per_t.resize(spec.t_samples);
    for (int it = 0; it < spec.t_samples; ++it) {
        const double e = spec.log2_t_min +
            (spec.log2_t_max - spec.log2_t_min) * it / (spec.t_samples - 1);
        const double t = std::pow(2.0, e);
        GridField u(sg);
        for (int i = 0; i < sg.n; ++i) {
            const double s = sg.node(i);
            const double w = psi(s);
            u.at(i) = (w == 0.0) ? cplx{0.0, 0.0} : w * m.eval(t * s);
        }
        GridField uh = fourier_transform(u, -1);
        const double dtau = uh.grid.spacing();
        double acc = 0.0;
        for (int k = 0; k < uh.grid.n; ++k) {
            const double tau = uh.grid.node(k);
            acc += dtau * std::pow(1.0 + tau * tau, spec.beta) * std::norm(uh.at(k));
        }
        res.per_t[it] = std::sqrt(acc);
    }

    res.value = 0.0;
    for (double v : res.per_t) res.value = std::max(res.value, v);
    bool monotone = true;
    for (int i = 0; i + 1 < spec.t_samples; ++i)
        if (res.per_t[i + 1] < res.per_t[i] * (1.0 - 1e-12)) { monotone = false; break; }
    res.diverged = monotone && res.per_t.front() > 0.0 &&
                   res.per_t.back() / res.per_t.front() > 10.0;
    return res;
}

} // namespace hermlab
