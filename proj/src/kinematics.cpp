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

#include "npdiff/kinematics.hpp"

#include <cmath>
#include <string>

#include "npdiff/constants.hpp"
#include "npdiff/errors.hpp"

namespace npdiff {

  namespace nc = constants;

  double electron_momentum( double kinetic_energy )
  {
    if ( kinetic_energy <= 0.0 )
      throw config_error( "beam_energy: must be positive, got "
                          + std::to_string( kinetic_energy ) + " J" );
    return std::sqrt( kinetic_energy * ( kinetic_energy + 2.0 * nc::electron_rest_energy ) )
           / nc::light_speed;
  }

  double electron_wavelength( double kinetic_energy )
  {
    return nc::planck_h / electron_momentum( kinetic_energy );
  }

  double electron_gamma( double kinetic_energy )
  {
    return 1.0 + kinetic_energy / nc::electron_rest_energy;
  }

  double electron_speed( double kinetic_energy )
  {
    return electron_momentum( kinetic_energy )
           / ( electron_gamma( kinetic_energy ) * nc::electron_mass );
  }

  double talbot_time( double mass, double period )
  {
    if ( mass <= 0.0 || period <= 0.0 )
      throw config_error( "talbot time: mass and period must be positive" );
    return mass * period * period / nc::planck_h;
  }

  double free_fall_drop( double talbot )
  {
    return 2.0 * nc::standard_g * talbot * talbot;
  }

  double thermal_occupation_factor( double omega, double temperature )
  {
    if ( omega <= 0.0 )
      throw config_error( "trap_frequency: must be positive" );
    if ( temperature < 0.0 )
      throw config_error( "temperature: must be non-negative" );
    if ( temperature == 0.0 )
      return 1.0;
    return 1.0 / std::tanh( nc::hbar * omega / ( 2.0 * nc::boltzmann_k * temperature ) );
  }

  GaussianState trap_release_state( double mass, double omega, double temperature )
  {
    if ( mass <= 0.0 )
      throw config_error( "mass: must be positive" );
    const double th = std::sqrt( thermal_occupation_factor( omega, temperature ) );
    return GaussianState{ mass,
                          std::sqrt( nc::hbar / ( 2.0 * mass * omega ) ) * th,
                          std::sqrt( nc::hbar * mass * omega / 2.0 ) * th };
  }

}
