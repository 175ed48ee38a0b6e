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

#ifndef NPDIFF_UNITS_HPP
#define NPDIFF_UNITS_HPP

#include <string>

namespace npdiff {

  // Physical dimension a configuration value must carry.
  enum class Dimension {
    length,       // m, cm, mm, um, nm, pm
    time,         // s, ms, us, ns  (plus 'talbot', resolved by the caller)
    mass,         // kg, amu
    energy,       // J, eV, keV, MeV
    frequency,    // Hz, kHz, MHz  (cycles; callers convert to angular)
    temperature,  // K, mK, uK
    wavenumber,   // 1/m, 1/nm
    dimensionless // no suffix
  };

  // Parsed "value [unit]" token. For Dimension::time the unit may be
  // "talbot"; then `in_talbot` is set and `value` is the multiple (the SI
  // value is resolved later, once the Talbot time is known).
  struct Quantity {
    double value = 0.0;  // SI
    bool in_talbot = false;
  };

  // Parse text like "543 pm" or "12 uK" ("µ" accepted for "u") into SI.
  // `key` names the offending configuration key in error messages.
  Quantity parse_quantity( const std::string& text, Dimension dim,
                           const std::string& key );

  // Canonical SI unit suffix for a dimension ("m", "s", "kg", ...),
  // used when echoing configurations.
  const char* si_suffix( Dimension dim );

}

#endif
