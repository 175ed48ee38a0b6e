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

#include "npdiff/systematics.hpp"

#include <cmath>
#include <numbers>

#include "npdiff/constants.hpp"
#include "npdiff/errors.hpp"
#include "npdiff/kinematics.hpp"

namespace npdiff {

  namespace nc = constants;
  using std::numbers::pi;

  double charge_deflection_angle( double kinetic_energy, double impact_parameter )
  {
    if ( impact_parameter <= 0.0 )
      throw config_error( "impact_parameter: must be positive" );
    const double v = electron_speed( kinetic_energy );
    const double gamma = electron_gamma( kinetic_energy );
    return nc::elem_charge * nc::elem_charge
           / ( 2.0 * pi * nc::vacuum_eps0 * nc::electron_mass * gamma * v * v
               * impact_parameter );
  }

  double mirror_image_shift( double distance, double time, double mass )
  {
    if ( distance <= 0.0 )
      throw config_error( "mirror_distance: must be positive" );
    if ( mass <= 0.0 )
      throw config_error( "mass: must be positive" );
    const double force = nc::elem_charge * nc::elem_charge
                         / ( 4.0 * pi * nc::vacuum_eps0 * distance * distance );
    return force * time * time / ( 2.0 * mass );
  }

  double backscatter_recoil_velocity( double kinetic_energy, double mass )
  {
    if ( mass <= 0.0 )
      throw config_error( "mass: must be positive" );
    return 2.0 * electron_momentum( kinetic_energy ) / mass;
  }

  std::vector<TalbotTableRow> talbot_table( const std::vector<double>& masses,
                                            double period )
  {
    std::vector<TalbotTableRow> rows;
    rows.reserve( masses.size() );
    for ( double m : masses ) {
      const double tm = talbot_time( m, period );
      rows.push_back( TalbotTableRow{ m, tm, free_fall_drop( tm ) } );
    }
    return rows;
  }

}
