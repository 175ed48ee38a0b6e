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

#ifndef NPDIFF_KINEMATICS_HPP
#define NPDIFF_KINEMATICS_HPP

namespace npdiff {

  // Relativistic electron kinematics from the kinetic energy E0 (J).
  double electron_momentum( double kinetic_energy );   // kg m/s
  double electron_wavelength( double kinetic_energy ); // m, de Broglie h/p
  double electron_gamma( double kinetic_energy );      // Lorentz factor
  double electron_speed( double kinetic_energy );      // m/s

  // Talbot time of a particle of mass M behind a grating of period d:
  // the timescale on which near-field fringe revivals occur.
  double talbot_time( double mass, double period );    // s, M d^2 / h

  // Free-fall drop accumulated over two Talbot times (one grating-to-readout
  // cycle of duration 2 T): 2 g T^2.
  double free_fall_drop( double talbot );              // m

  // Gaussian motional state of the particle along the grating direction:
  // position/momentum standard deviations of the (possibly thermal)
  // harmonic-oscillator state it is released from.
  struct GaussianState {
    double mass;    // kg
    double sigma_x; // m
    double sigma_p; // kg m/s
  };

  // State of a particle of mass M released from a harmonic trap of angular
  // frequency omega thermalised at temperature T. The widths carry the
  // thermal factor coth(hbar omega / 2 kB T) relative to the ground state;
  // sigma_x * sigma_p = (hbar/2) coth(...).
  GaussianState trap_release_state( double mass, double omega, double temperature );

  // coth(hbar omega / 2 kB T), the thermal broadening factor squared.
  double thermal_occupation_factor( double omega, double temperature );

}

#endif
