// bath.hpp — phonon bath: spectral density, phase function, mean displacement,
// polaron shift and the phonon-mediated scattering rates.
//
// Public interfaces use the canonical units of units.hpp (energies meV, times
// ps); spectral quantities are evaluated at angular frequency internally.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "pqed/units.hpp"

namespace pqed {

struct BathParams {
    double alpha_p = 0.06;     // coupling strength, ps^2
    double omega_b = 1.0;      // phonon cutoff, meV
    double temperature = 4.0;  // K

    // throws std::invalid_argument on alpha_p < 0, omega_b <= 0, temperature < 0
    void validate() const;
};

// Scattering-rate bundle for one Liouvillian assembly. Rates are energies
// (meV); divide by hbar for the angular rates entering the generator.
struct PhononRateSet {
    double gamma_up_cav = 0.0;      // Gamma_ph^{sigma+ a}
    double gamma_down_cav = 0.0;    // Gamma_ph^{a† sigma-}
    double gamma_up_x = 0.0;        // Gamma_ph^{sigma+}
    double gamma_down_x = 0.0;      // Gamma_ph^{sigma-}
    double mean_displacement = 1.0; // <B>, dimensionless in (0,1]
};

struct RatePair {
    double up = 0.0;    // "+" branch, meV
    double down = 0.0;  // "-" branch, meV
};

// J(omega) = alpha_p * w^3 * exp(-w^2 / 2 wb^2), w = omega/hbar angular.
// Input in meV, result is an angular rate (rad/ps). omega < 0 is rejected.
double spectral_density(double omega_meV, const BathParams& bath);

// phi(t) = int_0^inf dw J(w)/w^2 [coth(hbar w / 2 kB T) cos(wt) - i sin(wt)],
// with coth -> 1 on the T = 0 branch. Adaptive quadrature; throws
// std::runtime_error with the estimated error when it fails to converge.
std::complex<double> phase_function(double t_ps, const BathParams& bath);

// <B> = exp(-1/2 int dw J/w^2 coth), in (0,1]. Evaluated by its own
// quadrature, independent of phase_function (cross-checked in tests).
double mean_displacement(const BathParams& bath);

// Delta_P = hbar int dw J(w)/w, returned in meV. Reported only; the
// Liouvillian treats delta_xL as already carrying the shift.
double polaron_shift(const BathParams& bath);

// Phonon bath with the phase function cached on a uniform tau grid
// (the hot path of detuning sweeps). Immutable after construction and safe
// to share across sweep workers.
class PhononBath {
public:
    static constexpr double kGridStep = 1e-3;  // ps
    static constexpr double kTauMax = 10.0;    // ps; C_pn is below 1e-13 here

    explicit PhononBath(BathParams params);

    const BathParams& params() const { return params_; }
    double mean_displacement() const { return mean_b_; }
    double polaron_shift() const { return polaron_shift_; }

    // phi(t) for |t| <= kTauMax, interpolated from the cache; phi(-t) = conj phi(t)
    std::complex<double> phase(double t_ps) const;

    // multiphonon correlation kernel C_pn(t) = e^{phi(t)} - 1
    std::complex<double> correlation(double t_ps) const;

    // Gamma_± = 2 (coupling/hbar)^2 Re int_0^inf e^{±i detuning tau / hbar} C_pn(tau) dtau,
    // returned in meV. The tau integral is truncated where |C_pn| falls below
    // its support cutoff. coupling must be >= 0.
    RatePair scattering_rate_pair(double detuning_meV, double coupling_meV) const;

    // Bundle for one system configuration: cavity pair at delta_cx with g',
    // and (when include_exciton_pair) the exciton pair at delta_Lx with eta'_x.
    PhononRateSet rates_for(double delta_cx_meV, double g_prime_meV,
                            double delta_Lx_meV, double eta_x_prime_meV,
                            bool include_exciton_pair) const;

private:
    BathParams params_;
    double mean_b_ = 1.0;
    double polaron_shift_ = 0.0;
    std::vector<std::complex<double>> phi_;       // phi(k * kGridStep)
    std::vector<std::complex<double>> kernel_;    // C_pn on the same grid
    std::size_t support_ = 0;                     // grid index of the kernel support end
};

}  // namespace pqed
