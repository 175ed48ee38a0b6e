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

#include "npdiff/output.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "npdiff/constants.hpp"
#include "npdiff/errors.hpp"

namespace npdiff {

  std::string format_number( double x )
  {
    char buf[32];
    std::snprintf( buf, sizeof buf, "%.12g", x );
    return buf;
  }

  namespace {

    std::string hash_string()
    {
      char buf[24];
      std::snprintf( buf, sizeof buf, "0x%016llx", constants::snapshot_hash() );
      return buf;
    }

    std::ofstream open_out( const std::string& path )
    {
      std::ofstream out( path, std::ios::binary ); // binary: LF everywhere
      if ( !out )
        throw config_error( "cannot open output file '" + path + "'" );
      return out;
    }

  }

  std::vector<std::string> csv_header( const std::string& command, const RunConfig& cfg,
                                       const std::string& columns_note )
  {
    std::vector<std::string> lines;
    lines.push_back( "npdiff " + command );
    lines.push_back( "constants_snapshot = " + hash_string() );
    lines.push_back( "config:" );
    std::istringstream echo( echo_config( cfg ) );
    std::string line;
    while ( std::getline( echo, line ) )
      lines.push_back( "  " + line );
    lines.push_back( "columns: " + columns_note );
    return lines;
  }

  void write_csv( const std::string& path, const std::vector<std::string>& comments,
                  const std::vector<std::string>& column_names,
                  const std::vector<std::vector<double>>& rows )
  {
    auto out = open_out( path );
    for ( const auto& c : comments )
      out << "# " << c << "\n";
    for ( std::size_t i = 0; i < column_names.size(); ++i )
      out << ( i ? "," : "" ) << column_names[i];
    out << "\n";
    for ( const auto& row : rows ) {
      for ( std::size_t i = 0; i < row.size(); ++i )
        out << ( i ? "," : "" ) << format_number( row[i] );
      out << "\n";
    }
  }

  void write_carpet_csv( const std::string& path, const std::vector<std::string>& comments,
                         const std::vector<double>& times,
                         const std::vector<double>& positions,
                         const std::vector<std::vector<double>>& rows )
  {
    auto out = open_out( path );
    for ( const auto& c : comments )
      out << "# " << c << "\n";
    // First row: times in us with an empty leading cell; rows: position in
    // pm, then the row-max-normalised density per time.
    for ( double t : times )
      out << "," << format_number( t * 1e6 );
    out << "\n";
    for ( std::size_t i = 0; i < positions.size(); ++i ) {
      out << format_number( positions[i] * 1e12 );
      for ( std::size_t k = 0; k < times.size(); ++k )
        out << "," << format_number( rows[k][i] );
      out << "\n";
    }
  }

  void write_sidecar( const std::string& csv_path, const std::string& command,
                      const RunConfig& cfg, const std::vector<std::string>& column_names,
                      const std::string& normalization, bool timestamp )
  {
    nlohmann::json j;
    j["tool"] = "npdiff";
    j["command"] = command;
    j["constants_snapshot"] = hash_string();
    j["columns"] = column_names;
    j["normalization"] = normalization;
    nlohmann::json cfgj;
    std::istringstream echo( echo_config( cfg ) );
    std::string line;
    while ( std::getline( echo, line ) ) {
      const auto eq = line.find( " = " );
      if ( eq != std::string::npos )
        cfgj[line.substr( 0, eq )] = line.substr( eq + 3 );
    }
    j["config"] = cfgj;
    if ( timestamp ) {
      char buf[32];
      const std::time_t now = std::time( nullptr );
      std::tm tm{};
      gmtime_r( &now, &tm );
      std::strftime( buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm );
      j["generated_at"] = buf;
    }
    std::string path = csv_path;
    const auto dot = path.rfind( ".csv" );
    if ( dot != std::string::npos )
      path = path.substr( 0, dot );
    path += ".json";
    auto out = open_out( path );
    out << j.dump( 2 ) << "\n";
  }

}
