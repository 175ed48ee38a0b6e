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

#include "npdiff/units.hpp"

#include <cstdlib>
#include <map>
#include <vector>

#include "npdiff/constants.hpp"
#include "npdiff/errors.hpp"

namespace npdiff {

  namespace {

    struct UnitEntry {
      const char* name;
      double factor;
    };

    const std::vector<UnitEntry>& table( Dimension dim )
    {
      namespace nc = constants;
      static const std::map<Dimension, std::vector<UnitEntry>> tables = {
        { Dimension::length,
          { { "m", 1.0 }, { "cm", 1e-2 }, { "mm", 1e-3 }, { "um", 1e-6 },
            { "nm", 1e-9 }, { "pm", 1e-12 } } },
        { Dimension::time,
          { { "s", 1.0 }, { "ms", 1e-3 }, { "us", 1e-6 }, { "ns", 1e-9 } } },
        { Dimension::mass,
          { { "kg", 1.0 }, { "g", 1e-3 }, { "amu", nc::amu }, { "u", nc::amu } } },
        { Dimension::energy,
          { { "J", 1.0 }, { "eV", nc::elem_charge }, { "keV", 1e3 * nc::elem_charge },
            { "MeV", 1e6 * nc::elem_charge } } },
        { Dimension::frequency,
          { { "Hz", 1.0 }, { "kHz", 1e3 }, { "MHz", 1e6 }, { "GHz", 1e9 } } },
        { Dimension::temperature,
          { { "K", 1.0 }, { "mK", 1e-3 }, { "uK", 1e-6 }, { "nK", 1e-9 } } },
        { Dimension::wavenumber,
          { { "1/m", 1.0 }, { "1/um", 1e6 }, { "1/nm", 1e9 }, { "1/pm", 1e12 } } },
        { Dimension::dimensionless,
          { { "", 1.0 }, { "rad", 1.0 }, { "mrad", 1e-3 }, { "urad", 1e-6 } } },
      };
      return tables.at( dim );
    }

    std::string expected_units( Dimension dim )
    {
      std::string s;
      for ( const auto& e : table( dim ) ) {
        if ( e.name[0] == '\0' )
          continue;
        if ( !s.empty() )
          s += ", ";
        s += e.name;
      }
      if ( dim == Dimension::time )
        s += ", talbot";
      return s;
    }

    std::string trim( const std::string& s )
    {
      const auto b = s.find_first_not_of( " \t\r\n" );
      if ( b == std::string::npos )
        return "";
      const auto e = s.find_last_not_of( " \t\r\n" );
      return s.substr( b, e - b + 1 );
    }

    // Accept the micro sign by folding it to 'u'.
    std::string fold_micro( std::string s )
    {
      std::string out;
      for ( std::size_t i = 0; i < s.size(); ++i ) {
        if ( i + 1 < s.size() && static_cast<unsigned char>( s[i] ) == 0xC2
             && static_cast<unsigned char>( s[i + 1] ) == 0xB5 ) {
          out += 'u';
          ++i;
        } else {
          out += s[i];
        }
      }
      return out;
    }

  }

  Quantity parse_quantity( const std::string& text, Dimension dim,
                           const std::string& key )
  {
    const std::string body = fold_micro( trim( text ) );
    if ( body.empty() )
      throw config_error( key + ": empty value" );

    char* end = nullptr;
    const double value = std::strtod( body.c_str(), &end );
    if ( end == body.c_str() )
      throw config_error( key + ": cannot parse a number from '" + text + "'" );
    const std::string unit = trim( std::string( end ) );

    if ( dim == Dimension::time && unit == "talbot" )
      return Quantity{ value, true };

    for ( const auto& e : table( dim ) ) {
      if ( unit == e.name )
        return Quantity{ value * e.factor, false };
    }
    if ( unit.empty() )
      throw config_error( key + ": missing unit suffix (expected one of: "
                          + expected_units( dim ) + ")" );
    throw config_error( key + ": unknown unit '" + unit + "' (expected one of: "
                        + expected_units( dim ) + ")" );
  }

  const char* si_suffix( Dimension dim )
  {
    switch ( dim ) {
      case Dimension::length: return "m";
      case Dimension::time: return "s";
      case Dimension::mass: return "kg";
      case Dimension::energy: return "J";
      case Dimension::frequency: return "Hz";
      case Dimension::temperature: return "K";
      case Dimension::wavenumber: return "1/m";
      case Dimension::dimensionless: return "";
    }
    return "";
  }

}
