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

#ifndef NPDIFF_QUADRATURE_HPP
#define NPDIFF_QUADRATURE_HPP

#include <array>
#include <functional>

namespace npdiff {

  // Nodes and weights of the 16-point Gauss-Legendre rule on [-1, 1],
  // computed once by Newton iteration on the Legendre polynomial.
  struct GaussLegendre16 {
    std::array<double, 16> nodes;
    std::array<double, 16> weights;
    static const GaussLegendre16& get();
  };

  // Integrate f over [a, b] with `panels` equal subintervals, 16-point
  // Gauss-Legendre on each. Deterministic; accuracy is controlled by the
  // panel count, which callers size from the integrand's oscillation scale.
  double integrate_panels( const std::function<double( double )>& f,
                           double a, double b, int panels );

  // Same over the rectangle [ax,bx] x [ay,by].
  double integrate_panels_2d( const std::function<double( double, double )>& f,
                              double ax, double bx, int panels_x,
                              double ay, double by, int panels_y );

}

#endif
