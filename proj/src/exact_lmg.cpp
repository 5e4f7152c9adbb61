#include "lmg/exact_lmg.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include <lapacke.h>

namespace lmg {

SpinMatrix::SpinMatrix(int dimension) : dim_(dimension) {
    if (dimension < 1)
        throw ValidationError("SpinMatrix dimension must be >= 1");
    for (int off = 0; off <= kBandwidth; ++off)
        bands_[off].assign(static_cast<std::size_t>(std::max(0, dim_ - off)), 0.0);
}

std::vector<double> SpinMatrix::lapack_banded() const {
    const int ldab = kBandwidth + 1;
    std::vector<double> ab(static_cast<std::size_t>(ldab) * dim_, 0.0);
    for (int off = 0; off <= kBandwidth; ++off)
        for (int col = 0; col + off < dim_; ++col)
            ab[static_cast<std::size_t>(col) * ldab + off] = bands_[off][static_cast<std::size_t>(col)];
    return ab;
}

SpinMatrix build_lmg_hamiltonian(const LmgParams& params) {
    params.validate();
    const int n = params.n_spins;
    if (n > kMaxSpins)
        throw CapacityError("n_spins=" + std::to_string(n) + " exceeds capacity " +
                            std::to_string(kMaxSpins));

    const double j = 0.5 * n;
    const double jj = j * (j + 1.0);
    const double g4n = params.gamma_x / (4.0 * n);
    SpinMatrix H(n + 1);

    // J+|j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>; Jx^2 = (J+^2 + J-^2 + J+J- + J-J+)/4.
    for (int i = 0; i <= n; ++i) {
        const double m = -j + i;
        H.entry(0, i) = -params.h * m - g4n * ((jj - m * (m + 1.0)) + (jj - m * (m - 1.0)));
    }
    for (int i = 0; i + 2 <= n; ++i) {
        const double m = -j + i;
        H.entry(2, i) = -g4n * std::sqrt((jj - m * (m + 1.0)) * (jj - (m + 1.0) * (m + 2.0)));
    }
    return H;
}

SpectrumResult lowest_eigenvalues(const SpinMatrix& m, int k) {
    const int n = m.dimension();
    if (k < 1 || k > n)
        throw ValidationError("lowest_eigenvalues: need 1 <= k <= " + std::to_string(n) +
                              ", got k=" + std::to_string(k));

    std::vector<double> ab = m.lapack_banded();
    std::vector<double> w(static_cast<std::size_t>(n));
    std::vector<lapack_int> ifail(static_cast<std::size_t>(n));
    lapack_int found = 0;
    double zdum = 0.0, qdum = 0.0;
    const double abstol = 2.0 * LAPACKE_dlamch('S');

    lapack_int info = LAPACKE_dsbevx(
        LAPACK_COL_MAJOR, 'N', 'I', 'L', n, SpinMatrix::kBandwidth, ab.data(),
        SpinMatrix::kBandwidth + 1, &qdum, 1, 0.0, 0.0, 1, k, abstol, &found,
        w.data(), &zdum, 1, ifail.data());
    if (info != 0 || found != k)
        throw ConvergenceError("dsbevx failed: info=" + std::to_string(info) +
                               ", eigenvalues found=" + std::to_string(found));

    w.resize(static_cast<std::size_t>(k));
    return SpectrumResult{std::move(w)};
}

EigenDecomposition full_decomposition(const SpinMatrix& m) {
    const int n = m.dimension();
    std::vector<double> ab = m.lapack_banded();
    EigenDecomposition out;
    out.dim = n;
    out.eigenvalues.assign(static_cast<std::size_t>(n), 0.0);
    out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);

    lapack_int info = LAPACKE_dsbevd(
        LAPACK_COL_MAJOR, 'V', 'L', n, SpinMatrix::kBandwidth, ab.data(),
        SpinMatrix::kBandwidth + 1, out.eigenvalues.data(), out.vectors.data(), n);
    if (info != 0)
        throw ConvergenceError("dsbevd failed: info=" + std::to_string(info));
    return out;
}

namespace {

void require_dense_capacity(const LmgParams& params) {
    if (params.n_spins > kMaxSpinsDense)
        throw CapacityError("thermal averages need n_spins <= " +
                            std::to_string(kMaxSpinsDense) + ", got " +
                            std::to_string(params.n_spins));
}

} // namespace

double log_partition_function(const LmgParams& params, double beta) {
    require_dense_capacity(params);
    SpinMatrix H = build_lmg_hamiltonian(params);
    std::vector<double> ab = H.lapack_banded();
    std::vector<double> w(static_cast<std::size_t>(H.dimension()));
    lapack_int info = LAPACKE_dsbev(LAPACK_COL_MAJOR, 'N', 'L', H.dimension(),
                                    SpinMatrix::kBandwidth, ab.data(),
                                    SpinMatrix::kBandwidth + 1, w.data(), nullptr, 1);
    if (info != 0)
        throw ConvergenceError("dsbev failed: info=" + std::to_string(info));

    const double e0 = w.front();
    double z = 0.0;
    for (double e : w)
        z += std::exp(-beta * (e - e0));
    return -beta * e0 + std::log(z);
}

double thermal_expectation_jz(const LmgParams& params, double beta) {
    require_dense_capacity(params);
    const EigenDecomposition eig = full_decomposition(build_lmg_hamiltonian(params));
    const int dim = eig.dim;
    const double j = 0.5 * params.n_spins;
    const double e0 = eig.eigenvalues.front();

    double z = 0.0;
    double acc = 0.0;
    for (int nidx = 0; nidx < dim; ++nidx) {
        const double wgt = std::exp(-beta * (eig.eigenvalues[static_cast<std::size_t>(nidx)] - e0));
        if (wgt == 0.0)
            continue;
        double jz = 0.0;
        for (int midx = 0; midx < dim; ++midx) {
            const double c = eig.vector(midx, nidx);
            jz += (-j + midx) * c * c;
        }
        z += wgt;
        acc += wgt * jz;
    }
    return acc / z;
}

double thermal_expectation_jz_logz(const LmgParams& params, double beta, double rel_step) {
    const double dh = rel_step * params.h;
    LmgParams up = params;
    LmgParams dn = params;
    up.h += dh;
    dn.h -= dh;
    return (log_partition_function(up, beta) - log_partition_function(dn, beta)) /
           (2.0 * dh * beta);
}

} // namespace lmg
