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

#include "npdiff/interference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "npdiff/constants.hpp"
#include "npdiff/errors.hpp"

namespace npdiff {

  using std::numbers::pi;

  double PropagatedWidths::reduction( int n, double mass, double period, double t ) const
  {
    const double u = pi * n * sigma_p * t / ( mass * period );
    return std::exp( -2.0 * u * u );
  }

  PropagatedWidths propagate( const Evolution& ev, double period )
  {
    const auto& st = ev.state;
    if ( st.mass <= 0.0 || st.sigma_x <= 0.0 || st.sigma_p <= 0.0 )
      throw config_error( "source state: mass and widths must be positive" );
    if ( ev.t0 < 0.0 || ev.t < 0.0 )
      throw config_error( "t0/t: evolution times must be non-negative" );

    const double tau = ev.t0 + ev.t;                  // total free flight
    const double tc = st.mass * st.sigma_x / st.sigma_p; // coherence timescale
    PropagatedWidths w;
    const double r = tau / tc;
    w.sigma_p = st.sigma_p / std::sqrt( 1.0 + r * r );
    w.sigma_x = std::sqrt( st.sigma_x * st.sigma_x
                           + std::pow( st.sigma_p * tau / st.mass, 2 ) );
    w.magnified_period = period * ( tau * tau + tc * tc )
                         / ( ev.t0 * tau + tc * tc );
    w.talbot = talbot_time( st.mass, period );
    w.xi = ev.t * period / ( w.talbot * w.magnified_period );
    return w;
  }

  std::vector<double> default_grid( const Evolution& ev, double period,
                                    int n, double span_sigmas )
  {
    if ( n < 8 )
      throw config_error( "grid_points: need at least 8" );
    const PropagatedWidths w = propagate( ev, period );
    const double half = span_sigmas * w.sigma_x;
    std::vector<double> grid( n );
    for ( int i = 0; i < n; ++i )
      grid[i] = -half + 2.0 * half * i / ( n - 1 );
    return grid;
  }

  namespace {

    double gauss( double x, double sigma )
    {
      const double u = x / sigma;
      return std::exp( -0.5 * u * u ) / ( std::sqrt( 2.0 * pi ) * sigma );
    }

    // Per-harmonic damping from source width, plus the optional
    // macrorealistic-modification exponent.
    double harmonic_weight( int n, const PropagatedWidths& w, const Evolution& ev,
                            double period, const ModifiedDynamics* mod )
    {
      double r = w.reduction( n, ev.state.mass, period, ev.t );
      if ( mod )
        r *= std::exp( -harmonic_damping_exponent( n, ev.state.mass, period, ev.t0,
                                                   ev.t, mod->mod, mod->geometry ) );
      return r;
    }

    void check_residues( FringePattern& p, const char* what )
    {
      const auto qmax = *std::max_element( p.quantum.begin(), p.quantum.end() );
      const auto qmin = *std::min_element( p.quantum.begin(), p.quantum.end() );
      if ( qmax <= 0.0 || qmin < -1e-12 * qmax ) {
        std::ostringstream os;
        os << what << ": density negativity beyond tolerance (min " << qmin
           << ", max " << qmax << ")";
        throw numerical_error( os.str() );
      }
      if ( p.imag_residue > 1e-12 ) {
        std::ostringstream os;
        os << what << ": imaginary residue " << p.imag_residue
           << " exceeds 1e-12 of the density peak";
        throw numerical_error( os.str() );
      }
      const auto cmax = *std::max_element( p.classical.begin(), p.classical.end() );
      const auto cmin = *std::min_element( p.classical.begin(), p.classical.end() );
      if ( cmax <= 0.0 || cmin < -1e-12 * cmax ) {
        std::ostringstream os;
        os << what << ": classical density negativity beyond tolerance (min "
           << cmin << ", max " << cmax << ")";
        throw numerical_error( os.str() );
      }
    }

  }

  FringePattern fringe_pattern( const std::vector<double>& grid,
                                const GratingCoefficients& coeffs,
                                const Evolution& ev,
                                const ModifiedDynamics* mod )
  {
    const double d = coeffs.period;
    const PropagatedWidths w = propagate( ev, d );
    const double D = w.magnified_period;
    const std::size_t m = coeffs.size();

    // Per-pair constants: complex amplitude (coefficient * reduction *
    // Talbot phase), envelope shift, and harmonic number.
    struct Term {
      std::complex<double> amp;
      double shift;
      int n;
    };
    std::vector<Term> terms;
    std::vector<std::complex<double>> classical_amp; // per distinct n
    std::vector<int> ns;
    terms.reserve( m * m );
    for ( std::size_t i = 0; i < m; ++i ) {
      for ( std::size_t ip = 0; ip < m; ++ip ) {
        const int j = coeffs.orders[i];
        const int n = coeffs.orders[ip] - j;
        const double weight = harmonic_weight( n, w, ev, d, mod );
        const std::complex<double> phase =
            std::polar( 1.0, pi * n * ( 2 * j + n ) * ev.t * d / ( w.talbot * D ) );
        terms.push_back( Term{ coeffs.at( i, ip ) * weight * phase,
                               ( j + 0.5 * n ) * d * ev.t / w.talbot, n } );
        // classical shadow: same kick statistics, no Talbot phase, common
        // envelope; collect per-harmonic amplitude
        auto it = std::find( ns.begin(), ns.end(), n );
        if ( it == ns.end() ) {
          ns.push_back( n );
          classical_amp.push_back( coeffs.at( i, ip ) * weight );
        } else {
          classical_amp[static_cast<std::size_t>( it - ns.begin() )] +=
              coeffs.at( i, ip ) * weight;
        }
      }
    }

    FringePattern p;
    p.position = grid;
    p.widths = w;
    p.quantum.resize( grid.size() );
    p.classical.resize( grid.size() );
    double max_im = 0.0, max_re = 0.0;
    for ( std::size_t k = 0; k < grid.size(); ++k ) {
      const double X = grid[k];
      std::complex<double> acc = 0.0;
      for ( const auto& t : terms )
        acc += t.amp
               * std::polar( 1.0, 2.0 * pi * t.n * ( X / D - ev.impact_x / d ) )
               * gauss( X + t.shift, w.sigma_x );
      p.quantum[k] = acc.real();
      max_im = std::max( max_im, std::abs( acc.imag() ) );
      max_re = std::max( max_re, std::abs( acc.real() ) );

      std::complex<double> cl = 0.0;
      for ( std::size_t q = 0; q < ns.size(); ++q )
        cl += classical_amp[q]
              * std::polar( 1.0, 2.0 * pi * ns[q] * ( X / D - ev.impact_x / d ) );
      p.classical[k] = cl.real() * gauss( X, w.sigma_x );
    }
    p.imag_residue = max_re > 0.0 ? max_im / max_re : 0.0;
    check_residues( p, "fringe_pattern" );
    return p;
  }

  FringePattern broad_pattern( const std::vector<double>& grid,
                               const GratingCoefficients& coeffs,
                               const Evolution& ev,
                               const ModifiedDynamics* mod )
  {
    const double d = coeffs.period;
    const PropagatedWidths w = propagate( ev, d );
    const double D = w.magnified_period;

    std::set<int> diff;
    for ( int a : coeffs.orders )
      for ( int b : coeffs.orders )
        diff.insert( b - a );

    struct Harmonic {
      int n;
      std::complex<double> q_amp, c_amp;
    };
    std::vector<Harmonic> hs;
    for ( int n : diff ) {
      const double weight = harmonic_weight( n, w, ev, d, mod );
      hs.push_back( Harmonic{ n, coeffs.talbot_coefficient( n, n * w.xi ) * weight,
                              coeffs.talbot_coefficient( n, 0.0 ) * weight } );
    }

    FringePattern p;
    p.position = grid;
    p.widths = w;
    p.quantum.resize( grid.size() );
    p.classical.resize( grid.size() );
    double max_im = 0.0, max_re = 0.0;
    for ( std::size_t k = 0; k < grid.size(); ++k ) {
      const double X = grid[k];
      const double env = gauss( X, w.sigma_x );
      std::complex<double> q = 0.0, c = 0.0;
      for ( const auto& h : hs ) {
        const auto ph = std::polar( 1.0, 2.0 * pi * h.n
                                             * ( X / D - ev.impact_x / d ) );
        q += h.q_amp * ph;
        c += h.c_amp * ph;
      }
      p.quantum[k] = q.real() * env;
      p.classical[k] = c.real() * env;
      max_im = std::max( max_im, std::abs( q.imag() ) * env );
      max_re = std::max( max_re, std::abs( q.real() ) * env );
    }
    p.imag_residue = max_re > 0.0 ? max_im / max_re : 0.0;
    check_residues( p, "broad_pattern" );
    return p;
  }

  double l1_distance( const std::vector<double>& a, const std::vector<double>& b )
  {
    if ( a.size() != b.size() || a.empty() )
      throw config_error( "l1_distance: size mismatch" );
    double sa = 0.0, sb = 0.0;
    for ( std::size_t i = 0; i < a.size(); ++i ) {
      sa += std::abs( a[i] );
      sb += std::abs( b[i] );
    }
    if ( sa <= 0.0 || sb <= 0.0 )
      throw numerical_error( "l1_distance: zero-mass pattern" );
    double dist = 0.0;
    for ( std::size_t i = 0; i < a.size(); ++i )
      dist += std::abs( a[i] / sa - b[i] / sb );
    return dist;
  }

  namespace {

    // Least-squares fit of y ~ a0 + ac cos(2 pi X/D) + as sin(2 pi X/D)
    // over the index window [lo, hi].
    double sinusoid_visibility( const std::vector<double>& x,
                                const std::vector<double>& y,
                                double period, double window )
    {
      double s[3][3] = { { 0 } };
      double r[3] = { 0 };
      std::size_t used = 0;
      for ( std::size_t i = 0; i < x.size(); ++i ) {
        if ( std::abs( x[i] ) > window )
          continue;
        const double c = std::cos( 2.0 * pi * x[i] / period );
        const double sn = std::sin( 2.0 * pi * x[i] / period );
        const double basis[3] = { 1.0, c, sn };
        for ( int a = 0; a < 3; ++a ) {
          for ( int b = 0; b < 3; ++b )
            s[a][b] += basis[a] * basis[b];
          r[a] += basis[a] * y[i];
        }
        ++used;
      }
      if ( used < 8 )
        throw numerical_error( "visibility: fewer than 8 grid points in the "
                               "fit window" );
      // Cramer's rule on the 3x3 normal equations.
      const auto det3 = []( const double m[3][3] ) {
        return m[0][0] * ( m[1][1] * m[2][2] - m[1][2] * m[2][1] )
               - m[0][1] * ( m[1][0] * m[2][2] - m[1][2] * m[2][0] )
               + m[0][2] * ( m[1][0] * m[2][1] - m[1][1] * m[2][0] );
      };
      const double det = det3( s );
      if ( std::abs( det ) < 1e-30 )
        throw numerical_error( "visibility: degenerate fit basis" );
      double coef[3];
      for ( int c = 0; c < 3; ++c ) {
        double m[3][3];
        for ( int a = 0; a < 3; ++a )
          for ( int b = 0; b < 3; ++b )
            m[a][b] = ( b == c ) ? r[a] : s[a][b];
        coef[c] = det3( m ) / det;
      }
      if ( coef[0] <= 0.0 )
        return 0.0;
      return std::hypot( coef[1], coef[2] ) / coef[0];
    }

  }

  double visibility( const FringePattern& p, bool classical )
  {
    return sinusoid_visibility( p.position, classical ? p.classical : p.quantum,
                                p.widths.magnified_period, p.widths.sigma_x );
  }

  double michelson_contrast( const FringePattern& p, bool classical )
  {
    const auto& y = classical ? p.classical : p.quantum;
    const double sigma = p.widths.sigma_x;
    double mx = -1.0, mn = -1.0;
    for ( std::size_t i = 0; i < y.size(); ++i ) {
      if ( std::abs( p.position[i] ) > 1.5 * sigma )
        continue;
      const double flat = y[i] / std::exp( -0.5 * std::pow( p.position[i] / sigma, 2 ) );
      if ( mx < 0.0 ) {
        mx = mn = flat;
      } else {
        mx = std::max( mx, flat );
        mn = std::min( mn, flat );
      }
    }
    if ( mx < 0.0 || mx + mn <= 0.0 )
      throw numerical_error( "michelson_contrast: empty or non-positive window" );
    return ( mx - mn ) / ( mx + mn );
  }

  double peak_spacing( const FringePattern& p, bool classical )
  {
    const auto& y = classical ? p.classical : p.quantum;
    const double sigma = p.widths.sigma_x;

    // Envelope-flattened values inside |X| <= 2 sigma.
    std::vector<double> xs, fs;
    for ( std::size_t i = 0; i < y.size(); ++i ) {
      if ( std::abs( p.position[i] ) > 2.0 * sigma )
        continue;
      xs.push_back( p.position[i] );
      fs.push_back( y[i] / std::exp( -0.5 * std::pow( p.position[i] / sigma, 2 ) ) );
    }
    if ( xs.size() < 5 )
      return std::nan( "" );

    std::vector<double> peaks, heights;
    for ( std::size_t i = 1; i + 1 < xs.size(); ++i ) {
      if ( !( fs[i] > fs[i - 1] && fs[i] >= fs[i + 1] ) )
        continue;
      const double denom = fs[i - 1] - 2.0 * fs[i] + fs[i + 1];
      double offset = 0.0;
      if ( denom < 0.0 )
        offset = 0.5 * ( fs[i - 1] - fs[i + 1] ) / denom;
      const double h = xs[i + 1] - xs[i];
      peaks.push_back( xs[i] + offset * h );
      heights.push_back( fs[i] );
    }
    if ( peaks.size() < 2 )
      return std::nan( "" );
    const double top = *std::max_element( heights.begin(), heights.end() );
    std::vector<double> kept;
    for ( std::size_t i = 0; i < peaks.size(); ++i )
      if ( heights[i] >= 0.5 * top )
        kept.push_back( peaks[i] );
    if ( kept.size() < 2 )
      return std::nan( "" );
    std::vector<double> gaps;
    for ( std::size_t i = 1; i < kept.size(); ++i )
      gaps.push_back( kept[i] - kept[i - 1] );
    std::sort( gaps.begin(), gaps.end() );
    const std::size_t mid = gaps.size() / 2;
    return gaps.size() % 2 ? gaps[mid] : 0.5 * ( gaps[mid - 1] + gaps[mid] );
  }

  Carpet carpet( const std::vector<double>& t_grid, const std::vector<double>& grid,
                 const GratingCoefficients& coeffs, const GaussianState& state,
                 double t0, const ModifiedDynamics* mod )
  {
    Carpet c;
    c.times = t_grid;
    c.position = grid;
    c.quantum.reserve( t_grid.size() );
    c.classical.reserve( t_grid.size() );
    for ( double t : t_grid ) {
      const Evolution ev{ state, t0, t };
      FringePattern p = fringe_pattern( grid, coeffs, ev, mod );
      const auto norm_max = []( std::vector<double>& v ) {
        const double mx = *std::max_element( v.begin(), v.end() );
        if ( mx > 0.0 )
          for ( double& x : v )
            x /= mx;
      };
      norm_max( p.quantum );
      norm_max( p.classical );
      c.quantum.push_back( std::move( p.quantum ) );
      c.classical.push_back( std::move( p.classical ) );
    }
    return c;
  }

}
