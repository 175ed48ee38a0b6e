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

// End-to-end checks of the installed binary: every invocation goes through
// std::system on the path baked in by the build (NPDIFF_BIN).

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "npdiff/config.hpp"
#include "npdiff/errors.hpp"

namespace fs = std::filesystem;

namespace {

  int run( const std::string& args )
  {
    const std::string cmd = std::string( NPDIFF_BIN ) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system( cmd.c_str() );
    return WIFEXITED( rc ) ? WEXITSTATUS( rc ) : -1;
  }

  std::string slurp( const fs::path& p )
  {
    std::ifstream in( p, std::ios::binary );
    REQUIRE( in.good() );
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  struct TempDir {
    fs::path path;
    explicit TempDir( const std::string& tag )
        : path( fs::temp_directory_path() / ( "npdiff_test_" + tag ) )
    {
      fs::remove_all( path );
      fs::create_directories( path );
    }
    ~TempDir() { fs::remove_all( path ); }
  };

}

TEST_CASE( "fringes: exit status, output file, byte determinism" )
{
  TempDir a( "fringes_a" ), b( "fringes_b" );
  const std::string common = "fringes --grid 256 --out ";
  REQUIRE( run( common + a.path.string() ) == 0 );
  REQUIRE( run( common + b.path.string() ) == 0 );
  const auto fa = a.path / "fringes.csv";
  REQUIRE( fs::exists( fa ) );
  CHECK( slurp( fa ) == slurp( b.path / "fringes.csv" ) );
  // No stray sidecar without csv+json.
  CHECK_FALSE( fs::exists( a.path / "fringes.json" ) );
}

TEST_CASE( "fringes: header config lines round-trip through the parser" )
{
  TempDir dir( "fringes_hdr" );
  REQUIRE( run( "fringes --grid 256 --set 't=0.5 talbot' --out "
                + dir.path.string() )
           == 0 );
  std::ifstream in( dir.path / "fringes.csv" );
  REQUIRE( in.good() );
  std::string line, config_text;
  int data_rows = 0;
  bool saw_columns = false;
  while ( std::getline( in, line ) ) {
    if ( line.rfind( "#   ", 0 ) == 0 )
      config_text += line.substr( 2 ) + "\n";
    else if ( line.rfind( "# columns:", 0 ) == 0 )
      saw_columns = true;
    else if ( !line.empty() && line[0] != '#' )
      ++data_rows;
  }
  CHECK( saw_columns );
  CHECK( data_rows == 256 + 1 ); // column names + grid rows

  const npdiff::RunConfig cfg = npdiff::parse_config( config_text );
  const npdiff::Scenario sc = npdiff::resolve( cfg );
  // The header reflects the override, already resolved into seconds.
  CHECK( sc.evolution.t == doctest::Approx( 0.5 * sc.talbot ).epsilon( 1e-12 ) );
  CHECK( cfg.grid_points == 256 );
}

TEST_CASE( "sidecar JSON appears with csv+json and stays deterministic" )
{
  TempDir a( "json_a" ), b( "json_b" );
  const std::string common =
      "fringes --grid 64 --format csv+json --out ";
  REQUIRE( run( common + a.path.string() ) == 0 );
  REQUIRE( run( common + b.path.string() ) == 0 );
  REQUIRE( fs::exists( a.path / "fringes.json" ) );
  CHECK( slurp( a.path / "fringes.json" ) == slurp( b.path / "fringes.json" ) );
  const std::string j = slurp( a.path / "fringes.json" );
  CHECK( j.find( "generated_at" ) == std::string::npos );

  // The timestamp flag adds a generation time (and breaks determinism, which
  // is why it is opt-in).
  TempDir c( "json_c" );
  REQUIRE( run( "fringes --grid 64 --format csv+json --timestamp --out "
                + c.path.string() )
           == 0 );
  CHECK( slurp( c.path / "fringes.json" ).find( "generated_at" )
         != std::string::npos );
}

TEST_CASE( "remaining subcommands produce their files" )
{
  TempDir dir( "subcmds" );
  const std::string out = " --out " + dir.path.string();

  REQUIRE( run( "classical --grid 64" + out ) == 0 );
  CHECK( fs::exists( dir.path / "classical.csv" ) );

  REQUIRE( run( "carpet --grid 64 --set time_points=6 --t-max 1.0" + out ) == 0 );
  CHECK( fs::exists( dir.path / "carpet_quantum.csv" ) );
  CHECK( fs::exists( dir.path / "carpet_classical.csv" ) );
  {
    std::ifstream in( dir.path / "carpet_quantum.csv" );
    std::string line;
    int plain = 0;
    while ( std::getline( in, line ) )
      if ( !line.empty() && line[0] != '#' )
        ++plain;
    CHECK( plain == 64 + 1 ); // time row + one row per grid point
  }

  REQUIRE( run( "misalign --grid 64 --set 'impact_y=54.5 nm'" + out ) == 0 );
  CHECK( fs::exists( dir.path / "misalign.csv" ) );

  REQUIRE( run( "macro --set 'sigma_q_min=1e6 1/m' --set 'sigma_q_max=1e8 1/m'"
                + out )
           == 0 );
  CHECK( fs::exists( dir.path / "macro_curve.csv" ) );

  REQUIRE( run( "detect-prob" + out ) == 0 );
  CHECK( fs::exists( dir.path / "detect_prob.csv" ) );

  REQUIRE( run( "table --masses 1e6,2e9" + out ) == 0 );
  {
    std::ifstream in( dir.path / "talbot_table.csv" );
    REQUIRE( in.good() );
    std::string line;
    int plain = 0;
    while ( std::getline( in, line ) )
      if ( !line.empty() && line[0] != '#' )
        ++plain;
    CHECK( plain == 2 + 1 );
  }

  REQUIRE( run( "systematics --impact-parameter '1 nm' --mirror-distance '2 mm'"
                + out )
           == 0 );
  CHECK( fs::exists( dir.path / "systematics.csv" ) );
}

TEST_CASE( "a config file on disk feeds any subcommand" )
{
  TempDir dir( "cfgfile" );
  const fs::path cfg_path = dir.path / "run.cfg";
  {
    std::ofstream out( cfg_path );
    out << "# half-size crystal\n"
        << "radius = 54.5 nm\n"
        << "t = 0.5 talbot\n";
  }
  REQUIRE( run( "fringes --grid 64 --config " + cfg_path.string() + " --out "
                + dir.path.string() )
           == 0 );
  CHECK( fs::exists( dir.path / "fringes.csv" ) );
  const std::string text = slurp( dir.path / "fringes.csv" );
  CHECK( text.find( "radius = 5.45" ) != std::string::npos );
}

TEST_CASE( "configuration mistakes exit with status 1" )
{
  TempDir dir( "errors" );
  const std::string out = " --out " + dir.path.string();
  CHECK( run( "fringes --set bogus_key=3" + out ) == 1 );
  CHECK( run( "fringes --config /nonexistent/path.cfg" + out ) == 1 );
  CHECK( run( "fringes --set 't=5 parsecs'" + out ) == 1 );
  CHECK( run( "fringes --set 'miller=1 1 0'" + out ) == 1 );
  CHECK( run( "carpet --set grid_points=2" + out ) == 1 );
  // Unknown CLI flags and missing subcommands are usage errors, also 1.
  CHECK( run( "fringes --frobnicate" + out ) == 1 );
  CHECK( run( "" ) == 1 );
  // Help is not an error.
  CHECK( run( "--help" ) == 0 );
}
