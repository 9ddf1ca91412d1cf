#include "hermlab/fftutil.hpp"

#include <fftw3.h>

#include <mutex>
#include <numbers>

namespace hermlab {

namespace {
constexpr double pi = std::numbers::pi;
std::mutex plan_mutex; // FFTW planning is not thread safe, execution is
}

std::vector<cplx> dft(const std::vector<cplx>& in, int sign) {
    const int M = static_cast<int>(in.size());
    std::vector<cplx> out(M);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_1d(
            M,
            reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
            reinterpret_cast<fftw_complex*>(out.data()),
            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

std::vector<cplx> dft_2d(const std::vector<cplx>& in, int rows, int cols, int sign) {
    std::vector<cplx> out(in.size());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_2d(
            rows, cols,
            reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
            reinterpret_cast<fftw_complex*>(out.data()),
            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

Grid conjugate_grid(const Grid& g) {
    const double dxi = 2.0 * pi / (g.n * g.spacing());
    return Grid(g.d, 0.5 * (g.n - 1) * dxi, g.n);
}

namespace {

// One axis of the node-centered continuum transform: with x_j = -L + j h
// and xi_k = -Lc + k dxi, h dxi = 2 pi / n, the kernel e^{-i x_j xi_k}
// factors into e^{-i L Lc} e^{i L k dxi} e^{i j h Lc} e^{-2 pi i jk/n}.
struct AxisRamp {
    std::vector<cplx> pre;   // applied to input, index j
    std::vector<cplx> post;  // applied to output, index k
};

AxisRamp make_ramp(const Grid& g, const Grid& gc, int sign) {
    const double h = g.spacing(), dxi = gc.spacing();
    const double L = g.L, Lc = gc.L;
    AxisRamp r;
    r.pre.resize(g.n);
    r.post.resize(g.n);
    const double s = (sign < 0) ? 1.0 : -1.0;
    for (int j = 0; j < g.n; ++j)
        r.pre[j] = std::exp(cplx{0.0, s * j * h * Lc});
    const cplx corner = std::exp(cplx{0.0, -s * L * Lc});
    for (int k = 0; k < g.n; ++k)
        r.post[k] = corner * std::exp(cplx{0.0, s * L * k * dxi});
    return r;
}

} // namespace

GridField fourier_transform(const GridField& f, int sign) {
    const Grid& g = f.grid;
    Grid gc = conjugate_grid(g);
    const double h = g.spacing();
    const double pref = std::pow(2.0 * pi, -0.5 * g.d) * std::pow(h, g.d);
    AxisRamp ramp = make_ramp(g, gc, sign);

    GridField out(gc);
    if (g.d == 1) {
        std::vector<cplx> buf(g.n);
        for (int j = 0; j < g.n; ++j) buf[j] = f.at(j) * ramp.pre[j];
        auto spec = dft(buf, sign);
        for (int k = 0; k < g.n; ++k) out.at(k) = pref * ramp.post[k] * spec[k];
    } else {
        std::vector<cplx> buf(f.values.size());
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                buf[static_cast<std::size_t>(i) * g.n + j] =
                    f.at(i, j) * ramp.pre[i] * ramp.pre[j];
        auto spec = dft_2d(buf, g.n, g.n, sign);
        for (int k = 0; k < g.n; ++k)
            for (int l = 0; l < g.n; ++l)
                out.at(k, l) = pref * ramp.post[k] * ramp.post[l] *
                               spec[static_cast<std::size_t>(k) * g.n + l];
    }
    return out;
}

} // namespace hermlab
