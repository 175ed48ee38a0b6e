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

#include "npdiff/constants.hpp"
#include "npdiff/errors.hpp"
#include "npdiff/kinematics.hpp"
#include "npdiff/macroscopicity.hpp"
#include "oracles.hpp"

using namespace npdiff;
namespace nc = npdiff::constants;

namespace {

  Crystal case_crystal()
  {
    return Crystal{ 543e-12, 14, 109e-9, 30e-9 };
  }

  constexpr double case_mass = 2e9 * 1.66053906660e-27;
  constexpr double case_period = 543e-12 / 2.8284271247461903; // a / (2 sqrt 2)

}

TEST_CASE( "spheroid integrals: point-particle limits and frozen table" )
{
  const double root = std::sqrt( std::numbers::pi / 2.0 );
  CHECK( std::abs( spheroid_integral( 0.0, 0.0 ) - 2.0 / 3.0 * root ) < 1e-7 );
  CHECK( std::abs( spheroid_integral_squared( 0.0, 0.0 ) - 2.0 / 9.0 * root ) < 1e-7 );

  // Frozen high-precision references.
  CHECK( std::abs( spheroid_integral( 1.3, 0.37 ) - 4.2545047586e-01 ) < 1e-8 );
  CHECK( std::abs( spheroid_integral_squared( 1.3, 0.37 ) - 8.8465389247e-02 ) < 1e-8 );
  CHECK( std::abs( spheroid_integral( 5.0, 1.4 ) - 1.9720235649e-03 ) < 1e-8 );
  CHECK( std::abs( spheroid_integral_squared( 5.0, 1.4 ) - 1.4114136071e-03 ) < 1e-8 );
  CHECK( std::abs( spheroid_integral_squared( 20.0, 5.5 ) - 6.1710157687e-06 ) < 1e-8 );
  // Deep cancellation: the oscillatory kernel averages to nearly nothing.
  CHECK( std::abs( spheroid_integral( 20.0, 5.5 ) - 4.9766989009e-12 ) < 1e-11 );
  // The case-study spheroid at the top of the sigma_q scan.
  CHECK( spheroid_integral_squared( 109.0, 30.0 )
         == doctest::Approx( 7.0367314113e-09 ).epsilon( 1e-3 ) );

  CHECK_THROWS_AS( spheroid_integral( -1.0, 0.0 ), config_error );
}

TEST_CASE( "spheroid integrals agree with the Monte Carlo oracle" )
{
  struct Point {
    double alpha, beta;
    bool squared;
  };
  const Point points[] = {
    { 1.3, 0.37, false }, { 1.3, 0.37, true },  { 5.0, 1.4, false },
    { 5.0, 1.4, true },   { 20.0, 5.5, true },
  };
  for ( const auto& pt : points ) {
    const auto mc = oracles::spheroid_mc_oracle( pt.alpha, pt.beta, pt.squared );
    const double quad = pt.squared ? spheroid_integral_squared( pt.alpha, pt.beta )
                                   : spheroid_integral( pt.alpha, pt.beta );
    CAPTURE( pt.alpha );
    CAPTURE( pt.beta );
    CAPTURE( pt.squared );
    CHECK( std::abs( quad - mc.value ) < mc.stderr3 );
  }
}

TEST_CASE( "dephasing-rate difference matches the full momentum-space quadrature" )
{
  const auto c = case_crystal();
  const ModificationParams mod{ 1e16, 1e9 };
  const double dx = case_period / 10.0;
  const double closed = dephasing_rate_difference( dx, case_mass, mod, c );
  CHECK( closed == doctest::Approx( 6.18847187e-03 ).epsilon( 1e-4 ) );
  const double full = oracles::gamma_difference_oracle( dx, case_mass, mod, c );
  CHECK( closed == doctest::Approx( full ).epsilon( 1e-3 ) );
  CHECK_THROWS_AS(
      dephasing_rate_difference( dx, case_mass, ModificationParams{ 0.0, 1e9 }, c ),
      config_error );
}

TEST_CASE( "harmonic damping: symmetry, scaling, half-contrast consistency" )
{
  const auto c = case_crystal();
  const double talbot = talbot_time( case_mass, case_period );
  const ModificationParams mod{ 1e12, 1e7 };
  const double e2 = harmonic_damping_exponent( 2, case_mass, case_period, talbot,
                                               talbot, mod, c );
  CHECK( e2 > 0.0 );
  CHECK( harmonic_damping_exponent( -2, case_mass, case_period, talbot, talbot, mod, c )
         == doctest::Approx( e2 ) );
  CHECK( harmonic_damping_exponent( 1, case_mass, case_period, talbot, talbot, mod, c )
         == doctest::Approx( e2 / 4.0 ).epsilon( 1e-12 ) );
  CHECK( harmonic_damping_exponent( 0, case_mass, case_period, talbot, talbot, mod, c )
         == 0.0 );

  // tau_max is calibrated so the n = 2 harmonic sits exactly at half
  // contrast after time t with release delay t0 = Talbot time.
  const double t = 1e-3;
  for ( double sigma_q : { 1e6, 1.2551e7, 1e8 } ) {
    const double tm = tau_max( sigma_q, case_mass, case_period, t, talbot, c );
    const double expo = harmonic_damping_exponent(
        2, case_mass, case_period, talbot, t, ModificationParams{ tm, sigma_q }, c );
    CHECK( std::exp( -expo ) == doctest::Approx( 0.5 ).epsilon( 1e-12 ) );
  }
}

TEST_CASE( "excluded coherence time scales with the squared mass ratio" )
{
  const auto c = case_crystal();
  const double talbot = talbot_time( case_mass, case_period );
  const double t = 1e-3;
  const double sigma_q = 3e6;
  const double base = tau_max( sigma_q, case_mass, case_period, t, talbot, c );
  // Scaling a hypothetical particle's mass at fixed interferometer timing
  // and geometry multiplies tau_max by the mass ratio squared.
  const double scaled = tau_max( sigma_q, 10.0 * case_mass, case_period, t, talbot, c );
  CHECK( scaled == doctest::Approx( 100.0 * base ).epsilon( 1e-12 ) );
  CHECK_THROWS_AS( tau_max( 0.0, case_mass, case_period, t, talbot, c ),
                   config_error );
  CHECK_THROWS_AS( tau_max( sigma_q, case_mass, case_period, -1.0, talbot, c ),
                   config_error );
}

TEST_CASE( "macroscopicity of the case study" )
{
  const auto c = case_crystal();
  const auto res = macroscopicity( case_mass, case_period, 1e-3, c );
  CHECK( std::abs( res.mu - 16.25669 ) < 1e-3 );
  CHECK( res.argmax_sigma_q == doctest::Approx( 1.2551e7 ).epsilon( 1e-2 ) );
  CHECK_FALSE( res.at_boundary );
  REQUIRE( res.curve_sigma_q.size() == res.curve_tau_max.size() );
  REQUIRE( res.curve_sigma_q.size() == 64 );

  // The tau_max curve is smooth on the log-log scale: bounded fourth
  // difference guards against quadrature jitter between scan points.
  double max_d4 = 0.0;
  std::vector<double> lt;
  for ( double tv : res.curve_tau_max )
    lt.push_back( std::log10( tv ) );
  for ( std::size_t i = 4; i < lt.size(); ++i ) {
    const double d4 =
        lt[i] - 4.0 * lt[i - 1] + 6.0 * lt[i - 2] - 4.0 * lt[i - 3] + lt[i - 4];
    max_d4 = std::max( max_d4, std::abs( d4 ) );
  }
  CHECK( max_d4 < 0.05 );

  CHECK_THROWS_AS( macroscopicity( case_mass, case_period, 1e-3, c, 1e9, 1e5 ),
                   config_error );
  CHECK_THROWS_AS( macroscopicity( case_mass, case_period, 1e-3, c, 1e5, 1e9, 4 ),
                   config_error );
}
