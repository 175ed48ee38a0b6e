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

#include "npdiff/constants.hpp"
#include "npdiff/kinematics.hpp"
#include "npdiff/systematics.hpp"

using namespace npdiff;
namespace nc = npdiff::constants;

TEST_CASE( "stray-charge deflection at 300 keV and 1 nm impact parameter" )
{
  const double angle = charge_deflection_angle( 300e3 * nc::elem_charge, 1e-9 );
  CHECK( angle == doctest::Approx( 5.887e-6 ).epsilon( 1e-2 ) );
  // Well below the Bragg angle (~1e-2 rad) but above mechanical jitter specs.
  CHECK( angle > 1e-6 );
  CHECK( angle < 1e-4 );
  // Falls off as 1/b.
  CHECK( charge_deflection_angle( 300e3 * nc::elem_charge, 2e-9 )
         == doctest::Approx( angle / 2.0 ) );
}

TEST_CASE( "image-charge pull over one interferometer cycle stays sub-fringe" )
{
  const double talbot = talbot_time( 2e9 * nc::amu, 543e-12 / ( 2.0 * std::sqrt( 2.0 ) ) );
  const double shift = mirror_image_shift( 2e-3, 2.0 * talbot, 2e9 * nc::amu );
  CHECK( shift == doctest::Approx( 1.186e-12 ).epsilon( 2e-2 ) );
  CHECK( shift > 0.8e-12 );
  CHECK( shift < 1.2e-12 );
  // Quadratic in the hold time, inverse-square in the electrode distance.
  CHECK( mirror_image_shift( 2e-3, 4.0 * talbot, 2e9 * nc::amu )
         == doctest::Approx( 4.0 * shift ) );
  CHECK( mirror_image_shift( 4e-3, 2.0 * talbot, 2e9 * nc::amu )
         == doctest::Approx( shift / 4.0 ) );
}

TEST_CASE( "backscatter recoil of the case-study particle" )
{
  const double v = backscatter_recoil_velocity( 300e3 * nc::elem_charge, 2e9 * nc::amu );
  CHECK( v == doctest::Approx( 2.0269e-4 ).epsilon( 1e-2 ) );
  CHECK( v > 1.8e-4 );
  CHECK( v < 2.2e-4 );
  CHECK( v == doctest::Approx( 2.0 * electron_momentum( 300e3 * nc::elem_charge )
                               / ( 2e9 * nc::amu ) ) );
}

TEST_CASE( "candidate-mass table reproduces the published coincidence scan" )
{
  const double period = 543e-12 / ( 2.0 * std::sqrt( 2.0 ) );
  const std::vector<double> masses = { 1e6 * nc::amu, 2e9 * nc::amu, 2e10 * nc::amu,
                                       1e11 * nc::amu, 7e11 * nc::amu };
  const auto table = talbot_table( masses, period );
  REQUIRE( table.size() == 5 );
  const double expected_t[5] = { 9.2e-8, 1.8e-4, 1.8e-3, 9.2e-3, 6.5e-2 };
  const double expected_drop[5] = { 1.7e-13, 6.7e-7, 6.7e-5, 1.7e-3, 8.2e-2 };
  for ( int i = 0; i < 5; ++i ) {
    CHECK( table[i].mass == doctest::Approx( masses[i] ) );
    CHECK( table[i].talbot == doctest::Approx( expected_t[i] ).epsilon( 5e-2 ) );
    CHECK( table[i].drop == doctest::Approx( expected_drop[i] ).epsilon( 5e-2 ) );
    CHECK( table[i].drop == doctest::Approx( free_fall_drop( table[i].talbot ) ) );
  }
}
