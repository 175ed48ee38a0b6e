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

#include "npdiff/grating.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "npdiff/errors.hpp"
#include "npdiff/quadrature.hpp"

namespace npdiff {

  using std::numbers::pi;

  DiffractionMask build_mask( const MillerIndex& base, const std::vector<int>& orders,
                              const Crystal& c, double kinetic_energy )
  {
    if ( orders.empty() )
      throw config_error( "orders: at least one diffraction order is required" );
    std::set<int> seen;
    for ( int n : orders ) {
      if ( n == 0 )
        throw config_error( "orders: order 0 (undiffracted beam) is not a valid "
                            "mask entry" );
      if ( !seen.insert( n ).second )
        throw config_error( "orders: duplicate order " + std::to_string( n ) );
    }
    if ( is_forbidden( base ) )
      throw config_error( "miller: reflection is forbidden by the structure factor" );

    DiffractionMask mask;
    mask.period = plane_spacing( base, c );
    mask.orders = orders;
    std::sort( mask.orders.begin(), mask.orders.end() );
    mask.amplitudes.reserve( mask.orders.size() );
    for ( int n : mask.orders ) {
      const MillerIndex scaled{ n * base.h, n * base.k, n * base.l };
      mask.amplitudes.push_back( scattering_amplitude( scaled, c, kinetic_energy ) );
    }
    return mask;
  }

  std::complex<double> GratingCoefficients::talbot_coefficient( int n, double xi ) const
  {
    std::complex<double> sum = 0.0;
    for ( std::size_t i = 0; i < orders.size(); ++i ) {
      const int j = orders[i];
      const auto it = std::find( orders.begin(), orders.end(), j + n );
      if ( it == orders.end() )
        continue;
      const std::size_t ip = static_cast<std::size_t>( it - orders.begin() );
      sum += at( i, ip ) * std::polar( 1.0, pi * xi * ( n + 2 * j ) );
    }
    return sum;
  }

  double GratingCoefficients::trace() const
  {
    double tr = 0.0;
    for ( std::size_t i = 0; i < orders.size(); ++i )
      tr += at( i, i ).real();
    return tr;
  }

  GratingCoefficients aligned_coefficients( const DiffractionMask& mask )
  {
    const std::size_t m = mask.orders.size();
    double norm = 0.0;
    for ( double f : mask.amplitudes )
      norm += f * f;
    if ( norm <= 0.0 )
      throw config_error( "orders: all mask amplitudes vanish (forbidden "
                          "reflections only)" );
    GratingCoefficients g;
    g.period = mask.period;
    g.orders = mask.orders;
    g.b.resize( m * m );
    for ( std::size_t i = 0; i < m; ++i )
      for ( std::size_t j = 0; j < m; ++j )
        g.b[i * m + j] = mask.amplitudes[i] * mask.amplitudes[j] / norm;
    return g;
  }

  double misalignment_factor( int n, int nprime, double y, double period,
                              double xi, double sigma_beta, MisalignMode mode )
  {
    if ( xi <= 0.0 )
      throw config_error( "pinhole_width: must be positive" );
    const double nn = double( n ) * n + double( nprime ) * nprime;
    const double dn = double( n ) - nprime;
    if ( mode == MisalignMode::small_pinhole ) {
      // Limit sigma_beta >> xi with the order-independent scale xi/sigma_beta
      // dropped (it cancels once patterns are normalised).
      return std::exp( -2.0 * pi * pi * xi * xi * y * y * dn * dn
                       / ( period * period * nn ) )
             / std::sqrt( nn );
    }
    if ( sigma_beta < 0.0 )
      throw config_error( "sigma_beta: must be non-negative" );
    const double s2 = xi * xi + nn * sigma_beta * sigma_beta;
    return xi / std::sqrt( s2 )
           * std::exp( -2.0 * pi * pi * dn * dn * sigma_beta * sigma_beta * xi * xi
                       * y * y / ( s2 * period * period ) );
  }

  GratingCoefficients misaligned_coefficients( const DiffractionMask& mask, double y,
                                               double xi, double sigma_beta,
                                               MisalignMode mode )
  {
    GratingCoefficients g = aligned_coefficients( mask );
    const std::size_t m = g.orders.size();
    for ( std::size_t i = 0; i < m; ++i )
      for ( std::size_t j = 0; j < m; ++j )
        g.b[i * m + j] *= misalignment_factor( g.orders[i], g.orders[j], y,
                                               mask.period, xi, sigma_beta, mode );
    return g;
  }

  double focus_wavenumber_spread( double intensity_hwhm )
  {
    if ( intensity_hwhm <= 0.0 )
      throw config_error( "spot_hwhm: must be positive" );
    return std::sqrt( 0.5 * std::numbers::ln2 ) / intensity_hwhm;
  }

  namespace {

    double amplitude_norm( const DiffractionMask& mask )
    {
      double s = 0.0;
      for ( double f : mask.amplitudes )
        s += f * f;
      return s;
    }

  }

  double detection_probability( const DiffractionMask& mask, const Crystal& c,
                                double delta_k )
  {
    if ( delta_k <= 0.0 )
      throw config_error( "spot_hwhm: focus spread must be positive" );
    const double n_cells = c.cell_count();
    const double v = c.volume();
    const double a = 2.0 * delta_k * delta_k * c.radius * c.radius;
    // [ 2 - (1 - e^-a)/(a/2) ], with expm1 keeping the small-a limit stable.
    const double bracket = 2.0 + 2.0 * std::expm1( -a ) / a;
    return 2.0 * n_cells * n_cells * c.half_thickness * c.half_thickness / ( v * v )
           * bracket * amplitude_norm( mask );
  }

  double detection_probability_quadrature( const DiffractionMask& mask, const Crystal& c,
                                           double delta_k )
  {
    if ( delta_k <= 0.0 )
      throw config_error( "spot_hwhm: focus spread must be positive" );
    // Int d^2r (2 dk^2/pi) e^(-2 dk^2 r^2) rhobar(r)^2, angular part done.
    const auto f = [&]( double r ) {
      const double rho = projected_cell_density( r, c );
      return r * std::exp( -2.0 * delta_k * delta_k * r * r ) * rho * rho;
    };
    const double integral =
        integrate_panels( f, 0.0, c.radius,
                          std::max( 64, int( c.radius * delta_k * 8 ) ) );
    return 4.0 * delta_k * delta_k * integral * amplitude_norm( mask );
  }

}
