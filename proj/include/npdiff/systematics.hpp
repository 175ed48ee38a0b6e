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

#ifndef NPDIFF_SYSTEMATICS_HPP
#define NPDIFF_SYSTEMATICS_HPP

#include <vector>

namespace npdiff {

  // Deflection of a beam electron passing a single elementary charge at
  // impact parameter b: e^2 / (2 pi eps0 me gamma v^2 b).
  double charge_deflection_angle( double kinetic_energy, double impact_parameter );

  // Displacement of a singly charged particle of mass M accumulated over
  // time t under the Coulomb attraction to its image charge at separation r:
  //   shift = [ e^2 / (4 pi eps0 r^2) ] * t^2 / (2 M).
  double mirror_image_shift( double distance, double time, double mass );

  // Velocity kick 2 p_e / M from an electron backscattered off the particle.
  double backscatter_recoil_velocity( double kinetic_energy, double mass );

  struct TalbotTableRow {
    double mass;      // kg
    double talbot;    // s
    double drop;      // m, free fall over 2 * talbot
  };

  // Talbot time and free-fall drop per candidate mass, fixed grating period.
  std::vector<TalbotTableRow> talbot_table( const std::vector<double>& masses,
                                            double period );

}

#endif
