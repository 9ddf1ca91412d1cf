#include "hermlab/ensemble.hpp"
#include "hermlab/hermite.hpp"
#include "hermlab/spectral.hpp"
#include "hermlab/parallel.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace hermlab {

namespace {
std::string mi_name(const MultiIndex& a) {
    std::ostringstream os;
    for (std::size_t j = 0; j < a.size(); ++j) os << (j ? "_" : "") << a[j];
    return os.str();
}
} // namespace

std::vector<HermiteCoeffs> random_coeff_vectors(int d, int N, std::uint64_t seed, int count) {
    std::vector<HermiteCoeffs> out;
    out.reserve(count);
    const auto idx = enumerate_multiindices(d, N);
    for (int m = 0; m < count; ++m) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(m));
        std::normal_distribution<double> nd(0.0, 1.0);
        HermiteCoeffs c(d, N);
        for (const auto& a : idx) {
            const double re = nd(rng), im = nd(rng);
            const double damp = std::pow(1.0 + mi_order(a), -2.0);
            c.entries[a] = cplx{re, im} * damp;
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<EnsembleMember> make_ensemble(const EnsembleSpec& spec) {
    std::vector<EnsembleMember> out;

    for (const auto& a : enumerate_multiindices(spec.d, std::min(spec.delta_max_order, spec.N)))
        out.push_back({"delta_" + mi_name(a), delta_coeffs(spec.d, spec.N, a)});

    for (double a : {0.25, 1.0, 4.0}) {
        GridField f = sample(spec.grid, [a](const std::vector<double>& x) {
            double s = 0.0;
            for (double v : x) s += v * v;
            return cplx{std::exp(-0.5 * a * s), 0.0};
        });
        std::ostringstream nm;
        nm << "gauss_a" << a;
        out.push_back({nm.str(), analyze(f, spec.N)});
    }

    for (double b : {1.0, 3.0}) {
        GridField f = sample(spec.grid, [b](const std::vector<double>& x) {
            double s = 0.0;
            for (double v : x) s += v * v;
            return std::exp(cplx{-0.5 * s, 0.5 * b * s});
        });
        std::ostringstream nm;
        nm << "chirp_b" << b;
        out.push_back({nm.str(), analyze(f, spec.N)});
    }

    auto rnd = random_coeff_vectors(spec.d, spec.N, spec.seed, spec.n_random);
    for (std::size_t m = 0; m < rnd.size(); ++m)
        out.push_back({"rand_" + std::to_string(m), std::move(rnd[m])});
    return out;
}

NormEstimate estimate_operator_norm(const SpectralSymbol& m, double p, double q,
                                    const std::vector<EnsembleMember>& members,
                                    const Grid& grid, NormBackend backend) {
    require(!members.empty(), "estimate_operator_norm: empty ensemble");
    if (backend == NormBackend::Polar)
        require(p == q, "estimate_operator_norm: polar backend needs p = q");

    std::vector<NormEstimateRow> rows(members.size());
    parallel_for(members.size(), [&](std::size_t i) {
        const auto& mem = members[i];
        NormEstimateRow row;
        row.member = mem.name;
        if (backend == NormBackend::Polar) {
            row.norm_in = polar_modulation_functional(mem.coeffs, SpectralSymbol::constant(1.0), p);
            row.norm_out = polar_modulation_functional(mem.coeffs, m, p);
        } else {
            row.norm_in = modulation_norm(synthesize(mem.coeffs, grid), p, q);
            row.norm_out = modulation_norm(synthesize(apply_symbol(mem.coeffs, m), grid), p, q);
        }
        row.ratio = row.norm_in > 1e-13 ? row.norm_out / row.norm_in : -1.0;
        rows[i] = std::move(row);
    });

    NormEstimate est;
    for (auto& row : rows) {
        if (row.ratio < 0.0) {
            warn("estimate_operator_norm: member " + row.member + " has zero norm, skipped");
            ++est.skipped;
            continue;
        }
        if (row.ratio > est.max_ratio) {
            est.max_ratio = row.ratio;
            est.argmax = row.member;
        }
        est.rows.push_back(std::move(row));
    }
    require(!est.rows.empty(), "estimate_operator_norm: all members degenerate");
    return est;
}

NormEstimate estimate_operator_norm(const SpectralSymbol& m, double p, double q,
                                    const EnsembleSpec& spec, NormBackend backend) {
    return estimate_operator_norm(m, p, q, make_ensemble(spec), spec.grid, backend);
}

} // namespace hermlab
