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

#include "npdiff/special.hpp"

#include <cmath>

namespace npdiff {

  double sph_bessel_j1( double x )
  {
    if ( std::abs( x ) < 1e-3 ) {
      const double x2 = x * x;
      return x * ( 1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0 );
    }
    return std::sin( x ) / ( x * x ) - std::cos( x ) / x;
  }

  double sph_bessel_j1_over_x( double x )
  {
    if ( std::abs( x ) < 1e-3 ) {
      const double x2 = x * x;
      return 1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0;
    }
    return ( std::sin( x ) / ( x * x ) - std::cos( x ) / x ) / x;
  }

}
