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

#include "npdiff/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "npdiff/constants.hpp"
#include "npdiff/errors.hpp"
#include "npdiff/units.hpp"

namespace npdiff {

  namespace nc = constants;

  namespace {

    std::string trim( const std::string& s )
    {
      const auto b = s.find_first_not_of( " \t\r\n" );
      if ( b == std::string::npos )
        return "";
      const auto e = s.find_last_not_of( " \t\r\n" );
      return s.substr( b, e - b + 1 );
    }

    long parse_int( const std::string& text, const std::string& key )
    {
      const std::string body = trim( text );
      char* end = nullptr;
      const long v = std::strtol( body.c_str(), &end, 10 );
      if ( end == body.c_str() || trim( std::string( end ) ) != "" )
        throw config_error( key + ": expected an integer, got '" + text + "'" );
      return v;
    }

    double parse_plain_double( const std::string& text, const std::string& key )
    {
      const std::string body = trim( text );
      char* end = nullptr;
      const double v = std::strtod( body.c_str(), &end );
      if ( end == body.c_str() || trim( std::string( end ) ) != "" )
        throw config_error( key + ": expected a plain number, got '" + text + "'" );
      return v;
    }

    std::vector<int> parse_int_list( const std::string& text, const std::string& key )
    {
      std::vector<int> out;
      std::istringstream is( text );
      std::string tok;
      while ( is >> tok )
        out.push_back( int( parse_int( tok, key ) ) );
      if ( out.empty() )
        throw config_error( key + ": expected a space-separated integer list" );
      return out;
    }

    std::string fmt( double v )
    {
      char buf[40];
      std::snprintf( buf, sizeof buf, "%.17g", v );
      return buf;
    }

    void set_key( RunConfig& cfg, const std::string& key, const std::string& value )
    {
      const auto qty = [&]( Dimension d ) { return parse_quantity( value, d, key ); };
      if ( key == "lattice_constant" ) {
        cfg.lattice_constant = qty( Dimension::length ).value;
      } else if ( key == "atomic_number" ) {
        cfg.atomic_number = int( parse_int( value, key ) );
      } else if ( key == "radius" ) {
        cfg.radius = qty( Dimension::length ).value;
      } else if ( key == "half_thickness" ) {
        cfg.half_thickness = qty( Dimension::length ).value;
      } else if ( key == "beam_energy" ) {
        cfg.beam_energy = qty( Dimension::energy ).value;
      } else if ( key == "spot_hwhm" ) {
        cfg.spot_hwhm = qty( Dimension::length ).value;
      } else if ( key == "miller" ) {
        const auto v = parse_int_list( value, key );
        if ( v.size() != 3 )
          throw config_error( "miller: expected three integers" );
        cfg.miller = MillerIndex{ v[0], v[1], v[2] };
      } else if ( key == "orders" ) {
        cfg.orders = parse_int_list( value, key );
      } else if ( key == "pinhole_width" ) {
        cfg.pinhole_width = qty( Dimension::dimensionless ).value;
      } else if ( key == "mass" ) {
        cfg.mass = qty( Dimension::mass ).value;
      } else if ( key == "trap_frequency" ) {
        cfg.trap_frequency = qty( Dimension::frequency ).value;
      } else if ( key == "temperature" ) {
        cfg.temperature = qty( Dimension::temperature ).value;
      } else if ( key == "t0" ) {
        const Quantity q = qty( Dimension::time );
        cfg.t0 = q.value;
        cfg.t0_talbot = q.in_talbot;
      } else if ( key == "t" ) {
        const Quantity q = qty( Dimension::time );
        cfg.t = q.value;
        cfg.t_talbot = q.in_talbot;
      } else if ( key == "impact_x" ) {
        cfg.impact_x = qty( Dimension::length ).value;
      } else if ( key == "impact_y" ) {
        cfg.impact_y = qty( Dimension::length ).value;
      } else if ( key == "alignment" ) {
        const std::string v = trim( value );
        if ( v != "aligned" && v != "general" && v != "small_pinhole" )
          throw config_error( "alignment: expected aligned, general or "
                              "small_pinhole, got '" + v + "'" );
        cfg.alignment = v;
      } else if ( key == "sigma_beta" ) {
        cfg.sigma_beta = qty( Dimension::dimensionless ).value;
      } else if ( key == "mod_tau" ) {
        const Quantity q = qty( Dimension::time );
        if ( q.in_talbot )
          throw config_error( "mod_tau: talbot units not supported here" );
        cfg.mod_tau = q.value;
      } else if ( key == "mod_sigma_q" ) {
        cfg.mod_sigma_q = qty( Dimension::wavenumber ).value;
      } else if ( key == "macro_t" ) {
        const Quantity q = qty( Dimension::time );
        cfg.macro_t = q.value;
        cfg.macro_t_talbot = q.in_talbot;
      } else if ( key == "sigma_q_min" ) {
        cfg.sigma_q_min = qty( Dimension::wavenumber ).value;
      } else if ( key == "sigma_q_max" ) {
        cfg.sigma_q_max = qty( Dimension::wavenumber ).value;
      } else if ( key == "grid_points" ) {
        cfg.grid_points = int( parse_int( value, key ) );
      } else if ( key == "time_points" ) {
        cfg.time_points = int( parse_int( value, key ) );
      } else if ( key == "t_max" ) {
        cfg.t_max = parse_plain_double( value, key );
      } else if ( key == "span_sigmas" ) {
        cfg.span_sigmas = parse_plain_double( value, key );
      } else {
        throw config_error( "unknown configuration key '" + key + "'" );
      }
    }

  }

  RunConfig case_study()
  {
    RunConfig cfg;
    cfg.lattice_constant = 543e-12;
    cfg.atomic_number = 14;
    cfg.radius = 109e-9;
    cfg.half_thickness = 30e-9;
    cfg.beam_energy = 300e3 * nc::elem_charge;
    cfg.spot_hwhm = 115e-9;
    cfg.miller = MillerIndex{ 1, -1, 0 };
    cfg.orders = { -2, -1, 1, 2 };
    cfg.pinhole_width = 1e-3;
    cfg.mass = 2e9 * nc::amu;
    cfg.trap_frequency = 305e3;
    cfg.temperature = 12e-6;
    cfg.t0 = 1.0;
    cfg.t0_talbot = true;
    cfg.t = 1.0;
    cfg.t_talbot = true;
    cfg.sigma_beta = 0.05;
    cfg.mod_sigma_q = 1e7;
    cfg.macro_t = 1e-3;
    cfg.sigma_q_min = 1e5;
    cfg.sigma_q_max = 1e9;
    return cfg;
  }

  RunConfig parse_config( const std::string& text )
  {
    RunConfig cfg = case_study();
    std::istringstream is( text );
    std::string line;
    int lineno = 0;
    while ( std::getline( is, line ) ) {
      ++lineno;
      const auto hash = line.find( '#' );
      if ( hash != std::string::npos )
        line = line.substr( 0, hash );
      line = trim( line );
      if ( line.empty() )
        continue;
      const auto eq = line.find( '=' );
      if ( eq == std::string::npos )
        throw config_error( "config line " + std::to_string( lineno )
                            + ": expected 'key = value', got '" + line + "'" );
      set_key( cfg, trim( line.substr( 0, eq ) ), trim( line.substr( eq + 1 ) ) );
    }
    return cfg;
  }

  void apply_override( RunConfig& cfg, const std::string& assignment )
  {
    const auto eq = assignment.find( '=' );
    if ( eq == std::string::npos )
      throw config_error( "--set: expected key=value, got '" + assignment + "'" );
    set_key( cfg, trim( assignment.substr( 0, eq ) ),
             trim( assignment.substr( eq + 1 ) ) );
  }

  std::string echo_config( const RunConfig& cfg )
  {
    // Resolve Talbot-multiple times so the echo is unit-explicit SI.
    RunConfig r = cfg;
    {
      const Crystal c{ cfg.lattice_constant, cfg.atomic_number, cfg.radius,
                       cfg.half_thickness };
      const double talbot =
          talbot_time( cfg.mass, plane_spacing( cfg.miller, c ) );
      if ( r.t0_talbot ) {
        r.t0 *= talbot;
        r.t0_talbot = false;
      }
      if ( r.t_talbot ) {
        r.t *= talbot;
        r.t_talbot = false;
      }
      if ( r.macro_t_talbot ) {
        r.macro_t *= talbot;
        r.macro_t_talbot = false;
      }
    }
    std::ostringstream os;
    os << "lattice_constant = " << fmt( r.lattice_constant ) << " m\n"
       << "atomic_number = " << r.atomic_number << "\n"
       << "radius = " << fmt( r.radius ) << " m\n"
       << "half_thickness = " << fmt( r.half_thickness ) << " m\n"
       << "beam_energy = " << fmt( r.beam_energy ) << " J\n"
       << "spot_hwhm = " << fmt( r.spot_hwhm ) << " m\n"
       << "miller = " << r.miller.h << " " << r.miller.k << " " << r.miller.l << "\n"
       << "orders =";
    for ( int n : r.orders )
      os << " " << n;
    os << "\n"
       << "pinhole_width = " << fmt( r.pinhole_width ) << "\n"
       << "mass = " << fmt( r.mass ) << " kg\n"
       << "trap_frequency = " << fmt( r.trap_frequency ) << " Hz\n"
       << "temperature = " << fmt( r.temperature ) << " K\n"
       << "t0 = " << fmt( r.t0 ) << " s\n"
       << "t = " << fmt( r.t ) << " s\n"
       << "impact_x = " << fmt( r.impact_x ) << " m\n"
       << "impact_y = " << fmt( r.impact_y ) << " m\n"
       << "alignment = " << r.alignment << "\n"
       << "sigma_beta = " << fmt( r.sigma_beta ) << "\n"
       << "mod_tau = " << fmt( r.mod_tau ) << " s\n"
       << "mod_sigma_q = " << fmt( r.mod_sigma_q ) << " 1/m\n"
       << "macro_t = " << fmt( r.macro_t ) << " s\n"
       << "sigma_q_min = " << fmt( r.sigma_q_min ) << " 1/m\n"
       << "sigma_q_max = " << fmt( r.sigma_q_max ) << " 1/m\n"
       << "grid_points = " << r.grid_points << "\n"
       << "time_points = " << r.time_points << "\n"
       << "t_max = " << fmt( r.t_max ) << "\n"
       << "span_sigmas = " << fmt( r.span_sigmas ) << "\n";
    return os.str();
  }

  Scenario resolve( const RunConfig& cfg )
  {
    Scenario sc;
    sc.crystal = Crystal{ cfg.lattice_constant, cfg.atomic_number, cfg.radius,
                          cfg.half_thickness };
    sc.mask = build_mask( cfg.miller, cfg.orders, sc.crystal, cfg.beam_energy );
    sc.talbot = talbot_time( cfg.mass, sc.mask.period );

    if ( cfg.alignment == "aligned" ) {
      sc.coeffs = aligned_coefficients( sc.mask );
    } else {
      const MisalignMode mode = cfg.alignment == "general"
                                    ? MisalignMode::general
                                    : MisalignMode::small_pinhole;
      sc.coeffs = misaligned_coefficients( sc.mask, cfg.impact_y, cfg.pinhole_width,
                                           cfg.sigma_beta, mode );
    }

    const double omega = 2.0 * std::numbers::pi * cfg.trap_frequency;
    sc.evolution.state = trap_release_state( cfg.mass, omega, cfg.temperature );
    sc.evolution.t0 = cfg.t0_talbot ? cfg.t0 * sc.talbot : cfg.t0;
    sc.evolution.t = cfg.t_talbot ? cfg.t * sc.talbot : cfg.t;
    sc.evolution.impact_x = cfg.impact_x;
    if ( sc.evolution.t0 < 0.0 || sc.evolution.t < 0.0 )
      throw config_error( "t0/t: must be non-negative" );

    sc.delta_k = focus_wavenumber_spread( cfg.spot_hwhm );
    sc.macro_t = cfg.macro_t_talbot ? cfg.macro_t * sc.talbot : cfg.macro_t;

    if ( cfg.mod_tau < 0.0 )
      throw config_error( "mod_tau: must be non-negative (0 disables)" );
    if ( cfg.mod_tau > 0.0 )
      sc.mod = ModifiedDynamics{ ModificationParams{ cfg.mod_tau, cfg.mod_sigma_q },
                                 sc.crystal };

    if ( cfg.grid_points < 8 )
      throw config_error( "grid_points: need at least 8" );
    if ( cfg.time_points < 2 )
      throw config_error( "time_points: need at least 2" );
    if ( cfg.t_max <= 0.0 )
      throw config_error( "t_max: must be positive" );
    if ( cfg.span_sigmas <= 0.0 )
      throw config_error( "span_sigmas: must be positive" );
    return sc;
  }

}
