////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of npdiff, a simulator of electron-diffraction          //
//  gratings for levitated nanoparticle interferometry.                       //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#ifndef NPDIFF_CONSTANTS_HPP
#define NPDIFF_CONSTANTS_HPP

#include <numbers>

namespace npdiff::constants {

  // CODATA 2018 snapshot, SI units. Regression values in the test suite
  // depend on these exact numbers; do not update without re-freezing tests.
  inline constexpr double planck_h       = 6.62607015e-34;    // J s (exact)
  inline constexpr double hbar           = planck_h / ( 2.0 * std::numbers::pi );
  inline constexpr double light_speed    = 299792458.0;       // m/s (exact)
  inline constexpr double elem_charge    = 1.602176634e-19;   // C (exact)
  inline constexpr double boltzmann_k    = 1.380649e-23;      // J/K (exact)
  inline constexpr double electron_mass  = 9.1093837015e-31;  // kg
  inline constexpr double amu            = 1.66053906660e-27; // kg
  inline constexpr double vacuum_eps0    = 8.8541878128e-12;  // F/m
  inline constexpr double bohr_radius    = 5.29177210903e-11; // m
  inline constexpr double standard_g     = 9.80665;           // m/s^2 (exact)

  inline constexpr double electron_rest_energy = electron_mass * light_speed * light_speed;

  // FNV-1a hash of the constant values above, emitted into output headers so
  // that data files record which snapshot produced them.
  unsigned long long snapshot_hash();

}

#endif
