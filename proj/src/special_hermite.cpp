#include "hermlab/special_hermite.hpp"
#include "hermlab/hermite.hpp"
#include "hermlab/parallel.hpp"

#include <cmath>
#include <numbers>

namespace hermlab {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

// quadrature axis for the oscillatory xi-integral
struct QuadAxis {
    std::vector<double> nodes, weights;
};

QuadAxis quad_axis(double lambda) {
    const double L = std::max(12.0, 12.0 / std::sqrt(std::abs(lambda)));
    const int n = 512;
    QuadAxis q;
    q.nodes.resize(n);
    q.weights.resize(n, 2.0 * L / (n - 1));
    for (int i = 0; i < n; ++i) q.nodes[i] = -L + 2.0 * L * i / (n - 1);
    q.weights.front() *= 0.5;
    q.weights.back() *= 0.5;
    return q;
}

double scaled_h1(int k, double lambda, double x) {
    const double s = std::sqrt(std::abs(lambda));
    return std::sqrt(s) * hermite_1d(k, s * x);
}

// 6-point Lagrange interpolation of a length-n sequence at fractional
// index s, zero outside [0, n-1].  Even grids place every difference
// offset exactly half way between nodes, where lower-order kernels are
// at their worst; O(h^6) keeps the twisted-product defect ~1e-6.
cplx lagrange6_at(const cplx* v, int n, double s) {
    const double fl = std::floor(s);
    const int k = static_cast<int>(fl);
    if (s == fl) return (k >= 0 && k < n) ? v[k] : cplx{0.0, 0.0};
    auto get = [&](int i) { return (i >= 0 && i < n) ? v[i] : cplx{0.0, 0.0}; };
    const int j0 = k - 2;
    const double t = s - j0;
    cplx acc{0.0, 0.0};
    for (int a = 0; a < 6; ++a) {
        double w = 1.0;
        for (int l = 0; l < 6; ++l)
            if (l != a) w *= (t - l) / (a - l);
        acc += w * get(j0 + a);
    }
    return acc;
}
} // namespace

cplx plane_integrate(const PlaneField& F) {
    std::vector<double> w(F.n, F.spacing());
    w.front() *= 0.5;
    w.back() *= 0.5;
    cplx acc{0.0, 0.0};
    for (int i = 0; i < F.n; ++i)
        for (int j = 0; j < F.n; ++j)
            acc += w[i] * w[j] * F.at(i, j);
    return acc;
}

double plane_sup_error(const PlaneField& A, const PlaneField& B) {
    require(A.n == B.n && A.L == B.L, "plane_sup_error: grid mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < A.values.size(); ++i)
        m = std::max(m, std::abs(A.values[i] - B.values[i]));
    return m;
}

double plane_l2_inner_abs(const PlaneField& A, const PlaneField& B) {
    require(A.n == B.n && A.L == B.L, "plane_l2_inner_abs: grid mismatch");
    std::vector<double> w(A.n, A.spacing());
    w.front() *= 0.5;
    w.back() *= 0.5;
    cplx acc{0.0, 0.0};
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j)
            acc += w[i] * w[j] * A.at(i, j) * std::conj(B.at(i, j));
    return std::abs(acc);
}

cplx special_hermite(const MultiIndex& alpha, const MultiIndex& beta,
                     double lambda, double zx, double zy) {
    require(alpha.size() == 1 && beta.size() == 1, "special_hermite: d = 1 only");
    require(lambda != 0.0, "special_hermite: lambda must be nonzero");
    QuadAxis q = quad_axis(lambda);
    const int n = static_cast<int>(q.nodes.size());
    cplx acc{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const double xi = q.nodes[i];
        acc += q.weights[i] * scaled_h1(alpha[0], lambda, xi + zy) *
               scaled_h1(beta[0], lambda, xi) *
               std::exp(cplx{0.0, lambda * (zx * xi + 0.5 * zx * zy)});
    }
    return std::pow(two_pi, -0.5) * std::sqrt(std::abs(lambda)) * acc;
}

PlaneField special_hermite_field(const MultiIndex& alpha, const MultiIndex& beta,
                                 double lambda, const PlaneField& proto) {
    require(alpha.size() == 1 && beta.size() == 1, "special_hermite_field: d = 1 only");
    require(lambda != 0.0, "special_hermite_field: lambda must be nonzero");
    QuadAxis q = quad_axis(lambda);
    const int nq = static_cast<int>(q.nodes.size());

    std::vector<double> hb(nq);
    for (int i = 0; i < nq; ++i) hb[i] = q.weights[i] * scaled_h1(beta[0], lambda, q.nodes[i]);

    PlaneField out(proto.d, proto.L, proto.n);
    const double pref = std::pow(two_pi, -0.5) * std::sqrt(std::abs(lambda));
    parallel_for(out.n, [&](std::size_t iy) {
        const double y = out.node(static_cast<int>(iy));
        std::vector<cplx> prod(nq);
        for (int i = 0; i < nq; ++i)
            prod[i] = hb[i] * scaled_h1(alpha[0], lambda, q.nodes[i] + y);
        for (int ix = 0; ix < out.n; ++ix) {
            const double x = out.node(ix);
            cplx acc{0.0, 0.0};
            for (int i = 0; i < nq; ++i)
                acc += prod[i] * std::exp(cplx{0.0, lambda * x * q.nodes[i]});
            out.at(ix, static_cast<int>(iy)) =
                pref * std::exp(cplx{0.0, 0.5 * lambda * x * y}) * acc;
        }
    });
    return out;
}

cplx special_hermite_alpha0(const MultiIndex& alpha, double zx, double zy) {
    require(alpha.size() == 1, "special_hermite_alpha0: d = 1 only");
    const int k = alpha[0];
    const cplx zbar{zx, -zy};
    const cplx iso2 = std::pow(cplx{0.0, 1.0} / std::sqrt(2.0), k);
    const double fact = std::exp(-0.5 * mi_log_factorial(alpha));
    return std::pow(two_pi, -0.5) * fact * iso2 * std::pow(zbar, k) *
           std::exp(-0.25 * (zx * zx + zy * zy));
}

double laguerre_poly(int k, double a, double x) {
    require(k >= 0, "laguerre_poly: k must be non-negative");
    double lm = 0.0, l = 1.0;
    for (int j = 0; j < k; ++j) {
        double ln = ((2 * j + 1 + a - x) * l - (j + a) * lm) / (j + 1);
        lm = l;
        l = ln;
    }
    return l;
}

double laguerre_fn(int k, int d, double lambda, double zsq) {
    require(d >= 1, "laguerre_fn: d must be >= 1");
    const double u = std::abs(lambda) * zsq;
    return laguerre_poly(k, d - 1, 0.5 * u) * std::exp(-0.25 * u);
}

PlaneField laguerre_field(int k, int d, double lambda, const PlaneField& proto) {
    PlaneField out(proto.d, proto.L, proto.n);
    for (int ix = 0; ix < out.n; ++ix) {
        const double x = out.node(ix);
        for (int iy = 0; iy < out.n; ++iy) {
            const double y = out.node(iy);
            out.at(ix, iy) = laguerre_fn(k, d, lambda, x * x + y * y);
        }
    }
    return out;
}

PlaneField twisted_convolve(const PlaneField& F, const PlaneField& G, double lambda) {
    require(F.n == G.n && F.L == G.L, "twisted_convolve: grid mismatch");
    const int n = F.n;
    const double h = F.spacing();

    // F at all difference offsets (i - j) h, fractional node index
    // (i - j) + (n-1)/2; half-integer when n is even.
    const int m = 2 * n - 1;
    std::vector<cplx> rows(static_cast<std::size_t>(n) * m);  // axis-2 pass
    for (int i = 0; i < n; ++i)
        for (int q = 0; q < m; ++q) {
            const double s = (q - (n - 1)) + 0.5 * (n - 1);
            rows[static_cast<std::size_t>(i) * m + q] = lagrange6_at(&F.values[i * n], n, s);
        }
    std::vector<cplx> T(static_cast<std::size_t>(m) * m);     // axis-1 pass
    {
        std::vector<cplx> col(n);
        for (int q = 0; q < m; ++q) {
            for (int i = 0; i < n; ++i) col[i] = rows[static_cast<std::size_t>(i) * m + q];
            for (int p = 0; p < m; ++p) {
                const double s = (p - (n - 1)) + 0.5 * (n - 1);
                T[static_cast<std::size_t>(p) * m + q] = lagrange6_at(col.data(), n, s);
            }
        }
    }

    // twist e^{i lambda Im(z conj(w))/2} = e^{i lambda y u / 2} e^{-i lambda x v / 2}
    std::vector<cplx> P(static_cast<std::size_t>(n) * n), Q(P.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const double za = F.node(a), wb = F.node(b);
            P[static_cast<std::size_t>(a) * n + b] = std::exp(cplx{0.0, 0.5 * lambda * za * wb});
            Q[static_cast<std::size_t>(a) * n + b] = std::exp(cplx{0.0, -0.5 * lambda * za * wb});
        }

    std::vector<double> w(n, h);
    w.front() *= 0.5;
    w.back() *= 0.5;

    PlaneField out(F.d, F.L, F.n);
    parallel_for(n, [&](std::size_t ix_) {
        const int ix = static_cast<int>(ix_);
        // Gq[j1][j2] = G(j1, j2) w_{j1} w_{j2} e^{-i lambda x_{ix} v_{j2}/2}
        std::vector<cplx> Gq(static_cast<std::size_t>(n) * n);
        const cplx* Qrow = &Q[static_cast<std::size_t>(ix) * n];
        for (int j1 = 0; j1 < n; ++j1)
            for (int j2 = 0; j2 < n; ++j2)
                Gq[static_cast<std::size_t>(j1) * n + j2] =
                    G.at(j1, j2) * (w[j1] * w[j2]) * Qrow[j2];
        for (int iy = 0; iy < n; ++iy) {
            cplx acc{0.0, 0.0};
            const cplx* Prow = &P[static_cast<std::size_t>(iy) * n];
            for (int j1 = 0; j1 < n; ++j1) {
                const cplx* Trow = &T[static_cast<std::size_t>(ix - j1 + n - 1) * m + (iy + n - 1)];
                const cplx* Gqrow = &Gq[static_cast<std::size_t>(j1) * n];
                cplx inner{0.0, 0.0};
                for (int j2 = 0; j2 < n; ++j2) inner += Trow[-j2] * Gqrow[j2];
                acc += Prow[j1] * inner;
            }
            out.at(ix, iy) = acc;
        }
    });
    return out;
}

PlaneField special_hermite_project(const PlaneField& F, int k, double lambda) {
    require(lambda != 0.0, "special_hermite_project: lambda must be nonzero");
    PlaneField kern = laguerre_field(k, F.d, lambda, F);
    PlaneField conv = twisted_convolve(F, kern, lambda);
    const double pref = std::pow(two_pi, -F.d) * std::pow(std::abs(lambda), F.d);
    for (auto& v : conv.values) v *= pref;
    return conv;
}

} // namespace hermlab
