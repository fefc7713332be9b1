// units.hpp — canonical unit system: energies in meV, times in ps.
//
// Every public interface takes and returns energies in meV. Frequencies
// entering the spectral density, the phase function and the Liouvillian are
// angular (rad/ps), obtained as E/hbar. Rates carried as energies (meV)
// convert to angular rates the same way.

#pragma once

namespace pqed {

inline constexpr double hbar_meV_ps = 0.6582119569;   // meV ps
inline constexpr double kB_meV_K = 0.08617333;        // meV / K

// energy (meV) -> angular frequency (rad/ps)
inline constexpr double to_angular(double energy_meV) { return energy_meV / hbar_meV_ps; }

// angular frequency (rad/ps) -> energy (meV)
inline constexpr double to_energy(double omega_rad_ps) { return omega_rad_ps * hbar_meV_ps; }

inline constexpr double ueV_per_meV = 1e3;

}  // namespace pqed
