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

#include "npdiff/constants.hpp"

#include <cstdio>
#include <cstring>

namespace npdiff::constants {

  unsigned long long snapshot_hash()
  {
    const double vals[] = { planck_h,     light_speed, elem_charge, boltzmann_k,
                            electron_mass, amu,        vacuum_eps0, bohr_radius,
                            standard_g };
    // FNV-1a over the full-precision decimal rendering, so the hash tracks
    // the published values rather than any particular binary layout.
    unsigned long long h = 1469598103934665603ull;
    char buf[40];
    for ( double v : vals ) {
      std::snprintf( buf, sizeof buf, "%.17g", v );
      for ( const char* p = buf; *p; ++p ) {
        h ^= static_cast<unsigned char>( *p );
        h *= 1099511628211ull;
      }
    }
    return h;
  }

}
