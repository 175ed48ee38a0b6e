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

#ifndef NPDIFF_SPECIAL_HPP
#define NPDIFF_SPECIAL_HPP

namespace npdiff {

  // Spherical Bessel function j1(x) = sin(x)/x^2 - cos(x)/x, with a Taylor
  // fallback for |x| < 1e-3 where the closed form loses digits to
  // cancellation.
  double sph_bessel_j1( double x );

  // j1(x)/x, finite at x = 0 (value 1/3). Appears in Fourier transforms of
  // uniform spheres/spheroids.
  double sph_bessel_j1_over_x( double x );

}

#endif
