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
#include "npdiff/crystal.hpp"
#include "npdiff/errors.hpp"
#include "npdiff/special.hpp"
#include "oracles.hpp"

using namespace npdiff;
namespace nc = npdiff::constants;

namespace {
  Crystal case_crystal()
  {
    return Crystal{ 543e-12, 14, 109e-9, 30e-9 };
  }
}

TEST_CASE( "plane spacings of the fcc reciprocal lattice" )
{
  const auto c = case_crystal();
  CHECK( plane_spacing( { 1, -1, 0 }, c )
         == doctest::Approx( 543e-12 / ( 2.0 * std::sqrt( 2.0 ) ) ).epsilon( 1e-12 ) );
  CHECK( plane_spacing( { 2, -2, 0 }, c )
         == doctest::Approx( 543e-12 / ( 4.0 * std::sqrt( 2.0 ) ) ).epsilon( 1e-12 ) );
  // Primitive (1,1,1) maps to conventional (1,1,1): the cubic lattice planes
  // with spacing a / sqrt(3).
  CHECK( plane_spacing( { 1, 1, 1 }, c )
         == doctest::Approx( 543e-12 / std::sqrt( 3.0 ) ).epsilon( 1e-12 ) );

  const auto conv = conventional_index( { 1, -1, 0 } );
  CHECK( conv[0] == -2 );
  CHECK( conv[1] == 2 );
  CHECK( conv[2] == 0 );

  // The reciprocal vector of the n-th order is n times the base vector.
  const auto g1 = reciprocal_vector( { 1, -1, 0 }, c );
  const auto g2 = reciprocal_vector( { 2, -2, 0 }, c );
  for ( int i = 0; i < 3; ++i )
    CHECK( g2[i] == doctest::Approx( 2.0 * g1[i] ) );
}

TEST_CASE( "two-atom basis structure factor and forbidden reflections" )
{
  CHECK( structure_factor( { 1, -1, 0 } ) == doctest::Approx( 2.0 ) );
  CHECK( structure_factor( { 1, 1, 1 } )
         == doctest::Approx( -std::sqrt( 2.0 ) ) );
  CHECK( is_forbidden( { 1, 1, 0 } ) );       // h+k+l = 2
  CHECK( is_forbidden( { 2, 2, 2 } ) );       // h+k+l = 6
  CHECK( is_forbidden( { -1, -1, 0 } ) );     // h+k+l = -2
  CHECK_FALSE( is_forbidden( { 1, -1, 0 } ) );
  CHECK_FALSE( is_forbidden( { 2, -2, 0 } ) );
  CHECK_FALSE( is_forbidden( { 2, 2, 0 } ) ); // h+k+l = 4: F = -2
  CHECK( structure_factor( { 2, 2, 0 } ) == doctest::Approx( -2.0 ) );
}

TEST_CASE( "screened-potential scattering amplitudes at 300 keV" )
{
  const auto c = case_crystal();
  const double e0 = 300e3 * nc::elem_charge;
  // Frozen regressions for the case-study reflection family.
  CHECK( scattering_amplitude( { 1, -1, 0 }, c, e0 )
         == doctest::Approx( 1.05113e-21 ).epsilon( 3e-3 ) );
  CHECK( scattering_amplitude( { 2, -2, 0 }, c, e0 )
         == doctest::Approx( 5.19935e-22 ).epsilon( 3e-3 ) );
  // Odd symmetry in the order index: f_{-n} = f_n (same spacing, same F).
  CHECK( scattering_amplitude( { -1, 1, 0 }, c, e0 )
         == doctest::Approx( scattering_amplitude( { 1, -1, 0 }, c, e0 ) ) );
  // Forbidden reflections scatter nothing.
  CHECK( scattering_amplitude( { 1, 1, 0 }, c, e0 ) == 0.0 );
  // Amplitudes grow with energy through the relativistic factor and shrink
  // with tighter plane spacings.
  CHECK( scattering_amplitude( { 1, -1, 0 }, c, 2.0 * e0 )
         > scattering_amplitude( { 1, -1, 0 }, c, e0 ) * 0.5 );
  CHECK( scattering_amplitude( { 2, -2, 0 }, c, e0 )
         < scattering_amplitude( { 1, -1, 0 }, c, e0 ) );
}

TEST_CASE( "projected cell density integrates to the cell count" )
{
  const auto c = case_crystal();
  const double n_cells = c.cell_count();
  CHECK( n_cells == doctest::Approx( 3.73012e7 ).epsilon( 1e-4 ) );
  CHECK( c.atom_count() == doctest::Approx( 2.0 * n_cells ) );
  CHECK( oracles::projected_cells_oracle( c )
         == doctest::Approx( n_cells ).epsilon( 1e-6 ) );
  // Column density vanishes outside the equatorial radius.
  CHECK( projected_cell_density( c.radius * 1.0001, c ) == 0.0 );
  CHECK( projected_cell_density( 0.0, c ) > 0.0 );
  // Physical consistency: the cell count times two silicon masses is close
  // to the case-study particle mass of 2e9 amu.
  CHECK( c.atom_count() * 28.0855 * nc::amu
         == doctest::Approx( 2e9 * nc::amu ).epsilon( 0.1 ) );
}

TEST_CASE( "transverse Fourier transform matches the Hankel oracle" )
{
  const auto c = case_crystal();
  const double n_cells = c.cell_count();
  for ( double kr : { 0.05, 1.0, 5.0, 20.0, 50.0 } ) {
    const double k = kr / c.radius;
    const double diff =
        std::abs( projected_density_fourier( k, c ) - oracles::hankel_oracle( k, c ) );
    CAPTURE( kr );
    CHECK( diff < 1e-4 * n_cells );
  }
  // k -> 0 limit is the total count.
  CHECK( projected_density_fourier( 0.0, c ) == doctest::Approx( n_cells ) );
}

TEST_CASE( "spheroid mass-density Fourier transform matches direct quadrature" )
{
  const auto c = case_crystal();
  const double mass = 2e9 * nc::amu;
  const double cases[][2] = { { 1e7, 5e6 }, { 2e7, 0.0 }, { 1e4, 3e7 } };
  for ( const auto& qc : cases ) {
    const double lib = mass_density_fourier( qc[0], qc[1], c, mass );
    const double ora = oracles::spheroid_fourier_oracle( qc[0], qc[1], c, mass );
    CAPTURE( qc[0] );
    CAPTURE( qc[1] );
    CHECK( std::abs( lib - ora ) < 3e-4 * mass );
  }
  // q -> 0 limit is the total mass.
  CHECK( mass_density_fourier( 0.0, 0.0, c, mass ) == doctest::Approx( mass ) );
}

TEST_CASE( "spherical Bessel kernel: series/closed-form seam and known zero" )
{
  // Agreement with the standard-library spherical Bessel function.
  for ( double x : { 0.1, 1.0, 2.5, 7.0, 15.0 } )
    CHECK( sph_bessel_j1( x )
           == doctest::Approx( std::sph_bessel( 1u, x ) ).epsilon( 1e-10 ) );
  // Continuity across the series/closed-form switch near x = 1e-3.
  const double below = sph_bessel_j1_over_x( 0.999e-3 );
  const double above = sph_bessel_j1_over_x( 1.001e-3 );
  CHECK( below == doctest::Approx( above ).epsilon( 1e-9 ) );
  CHECK( sph_bessel_j1_over_x( 0.0 ) == doctest::Approx( 1.0 / 3.0 ) );
  // First zero of j1 near 4.4934.
  CHECK( std::abs( sph_bessel_j1( 4.493409457909064 ) ) < 1e-12 );
}
