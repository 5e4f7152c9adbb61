#pragma once

// Finite-size treatment of the isolated LMG model in the maximal
// angular-momentum sector j = N/2: banded Hamiltonian construction, LAPACK
// eigensolves and Gibbs-state observables.

#include <array>
#include <span>
#include <vector>

#include "lmg/core_model.hpp"

namespace lmg {

// Real symmetric banded matrix over the Dicke basis |j,m>, m = -j..j
// ascending, with bandwidth 2: Jz is diagonal, Jx couples m <-> m+-1 and
// Jx^2 couples m <-> m, m+-2.
class SpinMatrix {
public:
    static constexpr int kBandwidth = 2;

    explicit SpinMatrix(int dimension);

    int dimension() const noexcept { return dim_; }

    // Band at `offset` below the diagonal; band(offset)[i] = A(i+offset, i).
    std::span<const double> band(int offset) const { return bands_[offset]; }
    double& entry(int offset, int col) { return bands_[offset][static_cast<std::size_t>(col)]; }
    double entry(int offset, int col) const { return bands_[offset][static_cast<std::size_t>(col)]; }

    // Column-major LAPACK lower-banded buffer with ldab = kBandwidth + 1.
    std::vector<double> lapack_banded() const;

private:
    int dim_;
    std::array<std::vector<double>, kBandwidth + 1> bands_;
};

struct SpectrumResult {
    std::vector<double> eigenvalues; // ascending, size = requested count
};

struct EigenDecomposition {
    std::vector<double> eigenvalues; // ascending, size dim
    std::vector<double> vectors;     // column-major dim x dim
    int dim{0};

    double vector(int row, int col) const {
        return vectors[static_cast<std::size_t>(col) * dim + row];
    }
};

// Largest N accepted by build_lmg_hamiltonian.
inline constexpr int kMaxSpins = 5000;
// Largest N for which the dense full decomposition (thermal averages) runs.
inline constexpr int kMaxSpinsDense = 2000;

// H = -h Jz - (gamma_x/N) Jx^2 as a pentadiagonal SpinMatrix.
// Throws CapacityError for n_spins > kMaxSpins.
SpinMatrix build_lmg_hamiltonian(const LmgParams& params);

// k smallest eigenvalues, ascending (LAPACK dsbevx).
// Throws ValidationError unless 1 <= k <= dimension, ConvergenceError on
// solver failure.
SpectrumResult lowest_eigenvalues(const SpinMatrix& m, int k);

// Full eigendecomposition with vectors (LAPACK dsbevd).
EigenDecomposition full_decomposition(const SpinMatrix& m);

// ln Tr e^{-beta H} from the full spectrum, shifted for stability.
double log_partition_function(const LmgParams& params, double beta);

// Thermal <Jz> from eigenvectors: sum_n w_n <n|Jz|n> with Boltzmann weights.
// Throws CapacityError for n_spins > kMaxSpinsDense.
double thermal_expectation_jz(const LmgParams& params, double beta);

// Cross-check route: <Jz> = (1/beta) d ln Z / dh by central finite
// difference with the given relative step.
double thermal_expectation_jz_logz(const LmgParams& params, double beta,
                                   double rel_step = 1e-5);

} // namespace lmg
