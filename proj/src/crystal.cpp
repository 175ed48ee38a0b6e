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

#include "npdiff/crystal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "npdiff/constants.hpp"
#include "npdiff/errors.hpp"
#include "npdiff/kinematics.hpp"
#include "npdiff/special.hpp"

namespace npdiff {

  namespace nc = constants;
  using std::numbers::pi;

  namespace {

    void check_geometry( const Crystal& c )
    {
      if ( c.lattice_a <= 0.0 )
        throw config_error( "lattice_constant: must be positive" );
      if ( c.atomic_number < 1 )
        throw config_error( "atomic_number: must be at least 1" );
      if ( c.radius <= 0.0 )
        throw config_error( "radius: must be positive" );
      if ( c.half_thickness <= 0.0 )
        throw config_error( "half_thickness: must be positive" );
    }

  }

  double Crystal::volume() const
  {
    return 4.0 / 3.0 * pi * radius * radius * half_thickness;
  }

  double Crystal::cell_count() const
  {
    // Four primitive fcc cells per conventional cube a^3.
    return 4.0 * volume() / ( lattice_a * lattice_a * lattice_a );
  }

  double Crystal::atom_count() const
  {
    return 2.0 * cell_count();
  }

  std::array<double, 3> reciprocal_vector( const MillerIndex& idx, const Crystal& c )
  {
    check_geometry( c );
    const double f = 2.0 * pi / c.lattice_a;
    return { f * ( -idx.h + idx.k + idx.l ),
             f * ( idx.h - idx.k + idx.l ),
             f * ( idx.h + idx.k - idx.l ) };
  }

  std::array<int, 3> conventional_index( const MillerIndex& idx )
  {
    return { -idx.h + idx.k + idx.l, idx.h - idx.k + idx.l, idx.h + idx.k - idx.l };
  }

  double plane_spacing( const MillerIndex& idx, const Crystal& c )
  {
    const auto g = reciprocal_vector( idx, c );
    const double norm = std::sqrt( g[0] * g[0] + g[1] * g[1] + g[2] * g[2] );
    if ( norm == 0.0 )
      throw config_error( "miller: (0,0,0) has no plane spacing" );
    return 2.0 * pi / norm;
  }

  double structure_factor( const MillerIndex& idx )
  {
    // Two-atom basis at 0 and (a/4)(1,1,1): phases 1 and e^(i pi (h+k+l)/2),
    // giving |F| = 2 |cos((h+k+l) pi/4)| with a global phase dropped.
    return 2.0 * std::cos( ( idx.h + idx.k + idx.l ) * pi / 4.0 );
  }

  bool is_forbidden( const MillerIndex& idx )
  {
    const int s = idx.h + idx.k + idx.l;
    return ( ( s % 4 ) + 4 ) % 4 == 2;
  }

  double scattering_amplitude( const MillerIndex& idx, const Crystal& c,
                               double kinetic_energy )
  {
    check_geometry( c );
    if ( is_forbidden( idx ) )
      return 0.0;
    const double screen = nc::bohr_radius / std::cbrt( double( c.atomic_number ) );
    const double d = plane_spacing( idx, c );
    const double lambda = electron_wavelength( kinetic_energy );
    const double z23 = std::cbrt( double( c.atomic_number ) * double( c.atomic_number ) );
    const double kappa = 2.0 * pi * screen / d;
    return structure_factor( idx ) * electron_gamma( kinetic_energy ) * 2.0 * z23 * screen
           * lambda / ( 1.0 + kappa * kappa );
  }

  double projected_cell_density( double r, const Crystal& c )
  {
    check_geometry( c );
    if ( r < 0.0 )
      throw config_error( "projected_cell_density: radius must be non-negative" );
    if ( r >= c.radius )
      return 0.0;
    const double rel = r / c.radius;
    return c.cell_count() / c.volume() * 2.0 * c.half_thickness
           * std::sqrt( 1.0 - rel * rel );
  }

  double projected_density_fourier( double k, const Crystal& c )
  {
    check_geometry( c );
    return 3.0 * c.cell_count() * sph_bessel_j1_over_x( k * c.radius );
  }

  double mass_density_fourier( double q_perp, double q_z,
                               const Crystal& c, double mass )
  {
    check_geometry( c );
    const double ur = q_perp * c.radius;
    const double uz = q_z * c.half_thickness;
    return 3.0 * mass * sph_bessel_j1_over_x( std::sqrt( ur * ur + uz * uz ) );
  }

}
