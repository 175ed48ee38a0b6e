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

#include "npdiff/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace npdiff {

  namespace {

    GaussLegendre16 build_rule()
    {
      // Newton iteration on P16; standard approach, converges in a few
      // steps from the Chebyshev-like initial guess.
      constexpr int n = 16;
      GaussLegendre16 r{};
      for ( int i = 0; i < n / 2; ++i ) {
        double x = std::cos( std::numbers::pi * ( i + 0.75 ) / ( n + 0.5 ) );
        double dp = 0.0;
        for ( int it = 0; it < 100; ++it ) {
          double p0 = 1.0, p1 = x;
          for ( int k = 2; k <= n; ++k ) {
            const double p2 = ( ( 2 * k - 1 ) * x * p1 - ( k - 1 ) * p0 ) / k;
            p0 = p1;
            p1 = p2;
          }
          dp = n * ( x * p1 - p0 ) / ( x * x - 1.0 );
          const double dx = p1 / dp;
          x -= dx;
          if ( std::abs( dx ) < 1e-15 )
            break;
        }
        const double w = 2.0 / ( ( 1.0 - x * x ) * dp * dp );
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
      }
      return r;
    }

  }

  const GaussLegendre16& GaussLegendre16::get()
  {
    static const GaussLegendre16 rule = build_rule();
    return rule;
  }

  double integrate_panels( const std::function<double( double )>& f,
                           double a, double b, int panels )
  {
    const auto& gl = GaussLegendre16::get();
    const double h = ( b - a ) / panels;
    double sum = 0.0;
    for ( int p = 0; p < panels; ++p ) {
      const double mid = a + ( p + 0.5 ) * h;
      double s = 0.0;
      for ( int i = 0; i < 16; ++i )
        s += gl.weights[i] * f( mid + 0.5 * h * gl.nodes[i] );
      sum += 0.5 * h * s;
    }
    return sum;
  }

  double integrate_panels_2d( const std::function<double( double, double )>& f,
                              double ax, double bx, int panels_x,
                              double ay, double by, int panels_y )
  {
    const auto& gl = GaussLegendre16::get();
    const double hx = ( bx - ax ) / panels_x;
    const double hy = ( by - ay ) / panels_y;
    double sum = 0.0;
    for ( int px = 0; px < panels_x; ++px ) {
      const double mx = ax + ( px + 0.5 ) * hx;
      for ( int py = 0; py < panels_y; ++py ) {
        const double my = ay + ( py + 0.5 ) * hy;
        double s = 0.0;
        for ( int i = 0; i < 16; ++i ) {
          const double x = mx + 0.5 * hx * gl.nodes[i];
          double sy = 0.0;
          for ( int j = 0; j < 16; ++j )
            sy += gl.weights[j] * f( x, my + 0.5 * hy * gl.nodes[j] );
          s += gl.weights[i] * sy;
        }
        sum += 0.25 * hx * hy * s;
      }
    }
    return sum;
  }

}
