#include "hermlab/torus.hpp"
#include "hermlab/fftutil.hpp"
#include "hermlab/io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hermlab {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

int next_pow2(double x) {
    int m = 2;
    while (static_cast<double>(m) < x) m *= 2;
    return m;
}

// Catmull-Rom on a uniform table, zero outside
cplx cubic_sample(const std::vector<cplx>& v, double s) {
    const int n = static_cast<int>(v.size());
    const double fl = std::floor(s);
    const int k = static_cast<int>(fl);
    const double u = s - fl;
    auto get = [&](int i) { return (i >= 0 && i < n) ? v[i] : cplx{0.0, 0.0}; };
    if (u == 0.0) return get(k);
    const cplx a = get(k - 1), b = get(k), c = get(k + 1), d = get(k + 2);
    const double u2 = u * u, u3 = u2 * u;
    return 0.5 * ((-u3 + 2 * u2 - u) * a + (3 * u3 - 5 * u2 + 2) * b +
                  (-3 * u3 + 4 * u2 + u) * c + (u3 - u2) * d);
}
} // namespace

cplx euclidean_symbol(const std::vector<double>& xi, double beta, double gamma) {
    double c = 0.0;
    for (double v : xi) c += 2.0 * std::abs(v);
    c += static_cast<double>(xi.size());
    return std::exp(cplx{0.0, std::pow(c, gamma)}) / std::pow(c, beta);
}

std::vector<double> default_radii(int count, double rmax) {
    require(count >= 1, "default_radii: count must be positive");
    std::vector<double> r(count);
    for (int j = 0; j < count; ++j) r[j] = rmax * (j + 1) / count;
    return r;
}

TransferenceReport transference_check(const HermiteCoeffs& c, const SpectralSymbol& m,
                                      double p, const std::vector<double>& radii,
                                      int n_theta) {
    TransferenceReport rep;
    for (double r : radii) {
        std::vector<double> rvec(c.d, r);
        TrigPolynomial P = to_polar_coeffs(c, rvec);
        TrigPolynomial Pm = torus_multiplier(P, [&](const std::vector<int>& mu) {
            int k = 0;
            for (int v : mu) k += v;
            return m.eval(2.0 * k + c.d);
        });
        TransferenceRow row;
        row.r = r;
        row.rhs = torus_lp_norm(P, p, n_theta);
        if (row.rhs < 1e-300) {
            warn("transference_check: zero torus norm at r = " + std::to_string(r) + ", skipped");
            continue;
        }
        row.lhs = torus_lp_norm(Pm, p, n_theta);
        row.ratio = row.lhs / row.rhs;
        rep.max_ratio = std::max(rep.max_ratio, row.ratio);
        rep.rows.push_back(row);
    }
    require(!rep.rows.empty(), "transference_check: all radii degenerate");
    return rep;
}

KernelNative subordination_kernel_native(const SubordinationParams& par, const Grid& target) {
    require(target.d == 1, "subordination_kernel_native: d = 1 only");
    require(par.sigma > 0.0 && par.gamma > 0.0,
            "subordination_kernel_native: sigma, gamma must be positive");
    const double sigma = par.sigma, gamma = par.gamma;
    const double d = 1.0;

    // frequency half-width: damped symbol below 1e-14 at the edge
    const double ln_cut = -std::log(1e-14);
    double Xi = 0.5 * (std::pow(ln_cut / sigma, 1.0 / gamma) - d);
    Xi = std::max(Xi, 2.0);

    // spatial half-width: target box plus the stationary-phase excursion of
    // the oscillation e^{i(2|xi|+d)^gamma}
    const double slope = 2.0 * gamma *
                         (gamma >= 1.0 ? std::pow(2.0 * Xi + d, gamma - 1.0)
                                       : std::pow(d, gamma - 1.0));
    const double x_half = 4.0 * target.L + slope;

    KernelNative nat;
    nat.dxi = std::numbers::pi / x_half;
    const double h = target.spacing();
    double want = std::max({2.0 * Xi / nat.dxi, 8.0 * x_half / h, 2.0 * target.n});
    if (want > double(1 << 24))
        fail("subordination_kernel_native: resolution out of range for sigma = " +
             std::to_string(sigma) + ", gamma = " + std::to_string(gamma));
    nat.M = next_pow2(want);
    nat.M = std::max(nat.M, 4);
    nat.dx = two_pi / (nat.M * nat.dxi);

    nat.xi.resize(nat.M);
    nat.symbol.resize(nat.M);
    std::vector<cplx> in(nat.M);
    for (int mm = 0; mm < nat.M; ++mm) {
        nat.xi[mm] = (mm - nat.M / 2) * nat.dxi;
        nat.symbol[mm] =
            std::exp(cplx{-sigma, 1.0} * std::pow(2.0 * std::abs(nat.xi[mm]) + d, gamma));
        in[mm] = (mm % 2 == 0) ? nat.symbol[mm] : -nat.symbol[mm];
    }
    // x_j xi_m = 2 pi j m / M - pi j - pi m + pi M / 2; M is a multiple of 4,
    // so the constant phase is 1 and the rest is a DFT with (-1)^j (-1)^m.
    std::vector<cplx> out = dft(in, +1);
    nat.k.resize(nat.M);
    const double pref = nat.dxi / std::sqrt(two_pi);
    for (int j = 0; j < nat.M; ++j)
        nat.k[j] = (j % 2 == 0) ? pref * out[j] : -pref * out[j];
    return nat;
}

GridField subordination_kernel(const SubordinationParams& par, const Grid& target) {
    KernelNative nat = subordination_kernel_native(par, target);
    GridField out(target);
    for (int i = 0; i < target.n; ++i) {
        const double s = target.node(i) / nat.dx + nat.M / 2;
        out.values[i] = cubic_sample(nat.k, s);
    }
    return out;
}

double kernel_roundtrip_error(const KernelNative& nat) {
    std::vector<cplx> in(nat.M);
    for (int j = 0; j < nat.M; ++j)
        in[j] = (j % 2 == 0) ? nat.k[j] : -nat.k[j];
    std::vector<cplx> out = dft(in, -1);
    const double pref = nat.dx / std::sqrt(two_pi);
    double err = 0.0;
    for (int mm = 0; mm < nat.M; ++mm) {
        cplx hat = (mm % 2 == 0) ? pref * out[mm] : -pref * out[mm];
        err = std::max(err, std::abs(hat - nat.symbol[mm]));
    }
    return err;
}

namespace {
double l1_ratio_max(const std::vector<double>& sigmas, const std::vector<double>& gammas,
                    const Grid& grid, std::vector<KernelL1Row>* rows) {
    double mx = 0.0;
    for (double g : gammas)
        for (double s : sigmas) {
            GridField k = subordination_kernel({s, g}, grid);
            KernelL1Row row;
            row.sigma = s;
            row.gamma = g;
            row.l1 = lp_norm(k, 1.0);
            row.bound = std::pow(s, -0.5) * std::exp(-0.5 * s);
            row.ratio = row.l1 / row.bound;
            mx = std::max(mx, row.ratio);
            if (rows) rows->push_back(row);
        }
    return mx;
}
} // namespace

KernelL1Report kernel_l1_bound_check(const std::vector<double>& sigmas,
                                     const std::vector<double>& gammas,
                                     const Grid& grid, double delta_tol) {
    require(grid.d == 1, "kernel_l1_bound_check: d = 1 only");
    KernelL1Report rep;
    rep.max_ratio = l1_ratio_max(sigmas, gammas, grid, &rep.rows);
    Grid fine(grid.d, grid.L, 2 * grid.n);
    const double mx2 = l1_ratio_max(sigmas, gammas, fine, nullptr);
    rep.refinement_delta = std::abs(mx2 - rep.max_ratio) / rep.max_ratio;
    rep.pass = std::isfinite(rep.max_ratio) && rep.max_ratio > 0.0 &&
               rep.refinement_delta < delta_tol;
    return rep;
}

double gamma_subordination_error(const std::vector<double>& xi1_values,
                                 const std::vector<double>& betas,
                                 const std::vector<double>& gammas, int d) {
    double worst = 0.0;
    for (double x : xi1_values)
        for (double beta : betas)
            for (double gamma : gammas) {
                require(beta > 0.0 && gamma > 0.0,
                        "gamma_subordination_error: beta, gamma must be positive");
                const double a = beta / gamma;
                require(a <= 8.0, "gamma_subordination_error: beta/gamma must be <= 8");
                const double c = 2.0 * std::abs(x) + d;
                const double cg = std::pow(c, gamma);
                // log substitution u = ln sigma; integrand e^{a u - c^gamma e^u}
                auto logf = [&](double u) { return a * u - cg * std::exp(u); };
                const double ustar = std::log(a / cg);
                const double drop = 18.0 * std::log(10.0) + 5.0;
                const double floor_lf = logf(ustar) - drop;
                double u0 = ustar - 1.0;
                while (logf(u0) > floor_lf) u0 -= 2.0;
                double u1 = ustar + 1.0;
                while (logf(u1) > floor_lf) u1 += 0.5;
                const int nn = std::max(64, static_cast<int>((u1 - u0) / 0.05));
                const double du = (u1 - u0) / nn;
                double acc = 0.0;
                for (int i = 0; i <= nn; ++i) {
                    const double w = (i == 0 || i == nn) ? 0.5 : 1.0;
                    acc += w * std::exp(logf(u0 + du * i));
                }
                acc *= du;
                const double rel = std::abs(acc * std::pow(c, beta) / std::tgamma(a) - 1.0);
                worst = std::max(worst, rel);
            }
    return worst;
}

std::string kernel_l1_report_csv(const KernelL1Report& rep, int d) {
    std::ostringstream os;
    os << "sigma,beta,gamma,d,l1_norm,bound,ratio\n";
    for (const auto& r : rep.rows)
        os << format_g17(r.sigma) << ",," << format_g17(r.gamma) << ',' << d << ','
           << format_g17(r.l1) << ',' << format_g17(r.bound) << ','
           << format_g17(r.ratio) << '\n';
    return os.str();
}

std::string kernel_l1_report_json(const KernelL1Report& rep) {
    std::ostringstream os;
    os << "{\"check\":\"kernel_l1_bound\",\"max_ratio\":" << format_g17(rep.max_ratio)
       << ",\"refinement_delta\":" << format_g17(rep.refinement_delta)
       << ",\"pass\":" << (rep.pass ? "true" : "false") << "}";
    return os.str();
}

} // namespace hermlab
