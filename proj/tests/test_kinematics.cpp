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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "npdiff/errors.hpp"
#include "npdiff/kinematics.hpp"
#include "oracles.hpp"

using namespace npdiff;
namespace nc = npdiff::constants;

TEST_CASE( "electron wavelength matches the energy-momentum oracle" )
{
  for ( double kev : { 60.0, 100.0, 200.0, 300.0, 1000.0 } ) {
    const double e0 = kev * 1e3 * nc::elem_charge;
    CHECK( electron_wavelength( e0 )
           == doctest::Approx( oracles::wavelength_oracle( e0 ) ).epsilon( 1e-12 ) );
  }
  // Frozen regression: lambda(300 keV) = 1.96865 pm.
  const double lam = electron_wavelength( 300e3 * nc::elem_charge );
  CHECK( lam == doctest::Approx( 1.96865e-12 ).epsilon( 1e-5 ) );
  CHECK_THROWS_AS( electron_wavelength( -1.0 ), config_error );
}

TEST_CASE( "electron speed stays below c and matches p/(gamma me)" )
{
  const double e0 = 300e3 * nc::elem_charge;
  const double v = electron_speed( e0 );
  CHECK( v < nc::light_speed );
  CHECK( v == doctest::Approx( 2.32805e8 ).epsilon( 1e-4 ) );
  CHECK( electron_gamma( e0 ) == doctest::Approx( 1.587085 ).epsilon( 1e-5 ) );
}

TEST_CASE( "Talbot time of the case-study mass and period" )
{
  const double d = 543e-12 / ( 2.0 * std::sqrt( 2.0 ) );
  const double tm = talbot_time( 2e9 * nc::amu, d );
  CHECK( tm == doctest::Approx( 1.847280e-4 ).epsilon( 1e-5 ) );
  // Scaling: T is linear in M and quadratic in d.
  CHECK( talbot_time( 4e9 * nc::amu, d ) == doctest::Approx( 2.0 * tm ) );
  CHECK( talbot_time( 2e9 * nc::amu, 2.0 * d ) == doctest::Approx( 4.0 * tm ) );
  CHECK( free_fall_drop( tm ) == doctest::Approx( 6.693e-7 ).epsilon( 1e-3 ) );
}

TEST_CASE( "trap release state: case-study widths and thermal factor" )
{
  const double mass = 2e9 * nc::amu;
  const double omega = 2.0 * std::numbers::pi * 305e3;
  const auto st = trap_release_state( mass, omega, 12e-6 );
  CHECK( st.sigma_x == doctest::Approx( 3.9023e-12 ).epsilon( 1e-4 ) );
  CHECK( st.sigma_p == doctest::Approx( 2.48359e-23 ).epsilon( 1e-4 ) );
  // Exact product identity sigma_x sigma_p = (hbar/2) coth(...).
  const double coth = thermal_occupation_factor( omega, 12e-6 );
  CHECK( st.sigma_x * st.sigma_p
         == doctest::Approx( 0.5 * nc::hbar * coth ).epsilon( 1e-12 ) );
  // Ground state at T = 0: minimum uncertainty.
  const auto gs = trap_release_state( mass, omega, 0.0 );
  CHECK( gs.sigma_x * gs.sigma_p == doctest::Approx( 0.5 * nc::hbar ).epsilon( 1e-12 ) );
  CHECK( thermal_occupation_factor( omega, 0.0 ) == doctest::Approx( 1.0 ) );
}

TEST_CASE( "thermal factor grows with temperature and with softer traps" )
{
  const double omega = 2.0 * std::numbers::pi * 305e3;
  CHECK( thermal_occupation_factor( omega, 24e-6 )
         > thermal_occupation_factor( omega, 12e-6 ) );
  CHECK( thermal_occupation_factor( omega / 2.0, 12e-6 )
         > thermal_occupation_factor( omega, 12e-6 ) );
  // High-temperature limit: coth(x) ~ 1/x.
  const double hot = thermal_occupation_factor( omega, 1.0 );
  CHECK( hot == doctest::Approx( 2.0 * nc::boltzmann_k * 1.0 / ( nc::hbar * omega ) )
                    .epsilon( 1e-6 ) );
}
