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

#include "npdiff/macroscopicity.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "npdiff/constants.hpp"
#include "npdiff/errors.hpp"
#include "npdiff/kinematics.hpp"
#include "npdiff/quadrature.hpp"
#include "npdiff/special.hpp"

namespace npdiff {

  namespace nc = constants;
  using std::numbers::pi;

  namespace {

    constexpr double domain_cut = 12.0; // Gaussian weight is ~1e-31 here

    // Panel count resolving both the Gaussian weight and the j1 oscillation
    // of wavelength 2 pi / rate over [0, domain_cut].
    int osc_panels( double rate )
    {
      const int base = 8;
      if ( rate <= 0.0 )
        return base;
      return std::max( base,
                       int( std::ceil( 3.0 * domain_cut * rate / ( 2.0 * pi ) ) ) );
    }

    double spheroid_quad( double alpha, double beta, bool squared )
    {
      if ( alpha < 0.0 || beta < 0.0 )
        throw config_error( "spheroid_integral: alpha/beta must be non-negative" );
      const auto integrand = [&]( double xp, double xz ) {
        const double u = std::hypot( alpha * xp, beta * xz );
        const double k = sph_bessel_j1_over_x( u );
        return xp * xp * xp * std::exp( -0.5 * ( xp * xp + xz * xz ) )
               * ( squared ? k * k : k );
      };
      int nx = osc_panels( alpha );
      int nz = osc_panels( beta );
      double prev = integrate_panels_2d( integrand, 0.0, domain_cut, nx,
                                         0.0, domain_cut, nz );
      for ( int step = 0; step < 4; ++step ) {
        nx = ( nx * 3 + 1 ) / 2;
        nz = ( nz * 3 + 1 ) / 2;
        const double next = integrate_panels_2d( integrand, 0.0, domain_cut, nx,
                                                 0.0, domain_cut, nz );
        if ( std::abs( next - prev ) < 1e-8 )
          return next;
        prev = next;
      }
      std::ostringstream os;
      os << "spheroid_integral: refinement stalled at alpha=" << alpha
         << " beta=" << beta << " panels=(" << nx << "," << nz
         << ") last value=" << prev;
      throw numerical_error( os.str() );
    }

  }

  double spheroid_integral( double alpha, double beta )
  {
    return spheroid_quad( alpha, beta, false );
  }

  double spheroid_integral_squared( double alpha, double beta )
  {
    return spheroid_quad( alpha, beta, true );
  }

  namespace {

    void check_mod( const ModificationParams& mod )
    {
      if ( mod.tau <= 0.0 )
        throw config_error( "mod_tau: must be positive" );
      if ( mod.sigma_q <= 0.0 )
        throw config_error( "mod_sigma_q: must be positive" );
    }

  }

  double dephasing_rate_difference( double dx, double mass, const ModificationParams& mod,
                                    const Crystal& c )
  {
    check_mod( mod );
    const double i2 = spheroid_integral_squared( mod.sigma_q * c.radius,
                                                 mod.sigma_q * c.half_thickness );
    const double mm = mass / nc::electron_mass;
    return 9.0 * mm * mm * mod.sigma_q * mod.sigma_q * dx * dx
           / ( 2.0 * std::sqrt( 2.0 * pi ) * mod.tau ) * i2;
  }

  double harmonic_damping_exponent( int n, double mass, double period,
                                    double t0, double t,
                                    const ModificationParams& mod, const Crystal& c )
  {
    check_mod( mod );
    if ( n == 0 || t <= 0.0 || t0 + t <= 0.0 )
      return 0.0;
    const double i2 = spheroid_integral_squared( mod.sigma_q * c.radius,
                                                 mod.sigma_q * c.half_thickness );
    const double talbot = talbot_time( mass, period );
    const double mm = mass / nc::electron_mass;
    const double arm = n * mod.sigma_q * period * t * t0 / ( talbot * ( t + t0 ) );
    return 3.0 * mm * mm * ( t + t0 ) / ( 2.0 * std::sqrt( 2.0 * pi ) * mod.tau )
           * arm * arm * i2;
  }

  double tau_max( double sigma_q, double mass, double period, double t,
                  double talbot, const Crystal& c )
  {
    if ( sigma_q <= 0.0 )
      throw config_error( "sigma_q: must be positive" );
    if ( t <= 0.0 )
      throw config_error( "macro_t: must be positive" );
    if ( talbot <= 0.0 )
      throw config_error( "talbot: must be positive" );
    const double i2 = spheroid_integral_squared( sigma_q * c.radius,
                                                 sigma_q * c.half_thickness );
    const double mm = mass / nc::electron_mass;
    return 6.0 * mm * mm / ( std::sqrt( 2.0 * pi ) * std::numbers::ln2 )
           * t * t / ( t + talbot ) * sigma_q * period * sigma_q * period * i2;
  }

  MacroResult macroscopicity( double mass, double period, double t, const Crystal& c,
                              double sigma_q_min, double sigma_q_max, int scan_points )
  {
    if ( sigma_q_min <= 0.0 || sigma_q_max <= sigma_q_min )
      throw config_error( "sigma_q_min/sigma_q_max: need 0 < min < max" );
    if ( scan_points < 8 )
      throw config_error( "macroscopicity: need at least 8 scan points" );

    const double talbot = talbot_time( mass, period );
    const auto tau_of_log = [&]( double ls ) {
      return tau_max( std::exp( ls ), mass, period, t, talbot, c );
    };

    MacroResult res;
    const double llo = std::log( sigma_q_min ), lhi = std::log( sigma_q_max );
    int best = 0;
    double best_tau = -1.0;
    for ( int i = 0; i < scan_points; ++i ) {
      const double ls = llo + ( lhi - llo ) * i / ( scan_points - 1 );
      const double tv = tau_of_log( ls );
      res.curve_sigma_q.push_back( std::exp( ls ) );
      res.curve_tau_max.push_back( tv );
      if ( tv > best_tau ) {
        best_tau = tv;
        best = i;
      }
    }
    res.at_boundary = ( best == 0 || best == scan_points - 1 );

    // Golden-section refinement on log sigma_q between the scan neighbours.
    const double step = ( lhi - llo ) / ( scan_points - 1 );
    double lo = llo + step * std::max( 0, best - 1 );
    double hi = llo + step * std::min( scan_points - 1, best + 1 );
    const double gr = ( std::sqrt( 5.0 ) - 1.0 ) / 2.0;
    double cpt = hi - gr * ( hi - lo );
    double dpt = lo + gr * ( hi - lo );
    double fc = tau_of_log( cpt );
    double fd = tau_of_log( dpt );
    while ( hi - lo > 1e-3 ) {
      if ( fc > fd ) {
        hi = dpt;
        dpt = cpt;
        fd = fc;
        cpt = hi - gr * ( hi - lo );
        fc = tau_of_log( cpt );
      } else {
        lo = cpt;
        cpt = dpt;
        fc = fd;
        dpt = lo + gr * ( hi - lo );
        fd = tau_of_log( dpt );
      }
    }
    const double ls = 0.5 * ( lo + hi );
    res.argmax_sigma_q = std::exp( ls );
    const double tv = tau_of_log( ls );
    res.mu = std::log10( std::max( tv, best_tau ) );
    return res;
  }

}
