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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "npdiff/config.hpp"
#include "npdiff/constants.hpp"
#include "npdiff/errors.hpp"
#include "npdiff/output.hpp"
#include "npdiff/systematics.hpp"
#include "npdiff/units.hpp"

namespace {

  using namespace npdiff;

  struct CommonArgs {
    std::string config = "case_study";
    std::vector<std::string> sets;
    std::string out = ".";
    std::string format = "csv";
    int grid = 0;       // 0: keep config value
    double t_max = 0.0; // 0: keep config value
    bool timestamp = false;
  };

  void add_common( CLI::App* cmd, CommonArgs& a )
  {
    cmd->add_option( "--config", a.config,
                     "configuration file path, or 'case_study' for the "
                     "built-in preset" );
    cmd->add_option( "--set", a.sets, "override one key, e.g. --set 't=0.5 talbot'" );
    cmd->add_option( "--out", a.out, "output directory" );
    cmd->add_option( "--format", a.format, "csv or csv+json" )
        ->check( CLI::IsMember( { "csv", "csv+json" } ) );
    cmd->add_option( "--grid", a.grid, "position grid points" );
    cmd->add_option( "--t-max", a.t_max, "carpet time span in Talbot times" );
    cmd->add_flag( "--timestamp", a.timestamp,
                   "stamp the JSON sidecar with the generation time" );
  }

  RunConfig load_config( const CommonArgs& a )
  {
    RunConfig cfg;
    if ( a.config == "case_study" ) {
      cfg = case_study();
    } else {
      std::ifstream in( a.config );
      if ( !in )
        throw config_error( "cannot read config file '" + a.config + "'" );
      std::ostringstream ss;
      ss << in.rdbuf();
      cfg = parse_config( ss.str() );
    }
    for ( const auto& s : a.sets )
      apply_override( cfg, s );
    if ( a.grid > 0 )
      cfg.grid_points = a.grid;
    if ( a.t_max > 0.0 )
      cfg.t_max = a.t_max;
    return cfg;
  }

  std::string out_path( const CommonArgs& a, const std::string& name )
  {
    std::filesystem::create_directories( a.out );
    return ( std::filesystem::path( a.out ) / name ).string();
  }

  OutputOptions out_opts( const CommonArgs& a )
  {
    return OutputOptions{ a.out, a.format == "csv+json", a.timestamp };
  }

  void unit_sum( std::vector<double>& v )
  {
    double s = 0.0;
    for ( double x : v )
      s += x;
    if ( s > 0.0 )
      for ( double& x : v )
        x /= s;
  }

  // ---- subcommand bodies ---------------------------------------------------

  void run_fringes( const CommonArgs& a, bool classical_only )
  {
    const RunConfig cfg = load_config( a );
    const Scenario sc = resolve( cfg );
    const auto grid = default_grid( sc.evolution, sc.mask.period, cfg.grid_points,
                                    cfg.span_sigmas );
    FringePattern p = fringe_pattern( grid, sc.coeffs, sc.evolution,
                                      sc.mod ? &*sc.mod : nullptr );
    unit_sum( p.quantum );
    unit_sum( p.classical );
    // The emitted axis is the relative coordinate X - x D/d, which removes
    // the electron-position fringe shift.
    const double axis_shift =
        cfg.impact_x * p.widths.magnified_period / sc.mask.period;

    const std::string command = classical_only ? "classical" : "fringes";
    const std::string fname = command + ".csv";
    std::vector<std::string> cols;
    std::vector<std::vector<double>> rows;
    if ( classical_only ) {
      cols = { "relative_position_pm", "classical_density" };
      for ( std::size_t i = 0; i < grid.size(); ++i )
        rows.push_back( { ( grid[i] - axis_shift ) * 1e12, p.classical[i] } );
    } else {
      cols = { "relative_position_pm", "quantum_density", "classical_density" };
      for ( std::size_t i = 0; i < grid.size(); ++i )
        rows.push_back( { ( grid[i] - axis_shift ) * 1e12, p.quantum[i],
                          p.classical[i] } );
    }
    const std::string note =
        "relative_position_pm [pm]; densities are unit-sum normalised over "
        "the grid [dimensionless]";
    write_csv( out_path( a, fname ), csv_header( command, cfg, note ), cols, rows );
    const OutputOptions oo = out_opts( a );
    if ( oo.json_sidecar )
      write_sidecar( out_path( a, fname ), command, cfg, cols, "unit_sum",
                     oo.timestamp );
    std::cout << command << ": wrote " << fname << "  (D = "
              << format_number( p.widths.magnified_period * 1e12 )
              << " pm, sigma_x = " << format_number( p.widths.sigma_x * 1e12 )
              << " pm)\n";
  }

  void run_carpet( const CommonArgs& a )
  {
    const RunConfig cfg = load_config( a );
    const Scenario sc = resolve( cfg );
    const double t_end = cfg.t_max * sc.talbot;
    std::vector<double> t_grid( cfg.time_points );
    for ( int i = 0; i < cfg.time_points; ++i )
      t_grid[i] = t_end * i / ( cfg.time_points - 1 );
    Evolution ev_end = sc.evolution;
    ev_end.t = t_end;
    const auto grid = default_grid( ev_end, sc.mask.period, cfg.grid_points,
                                    cfg.span_sigmas );
    const Carpet c = carpet( t_grid, grid, sc.coeffs, sc.evolution.state,
                             sc.evolution.t0, sc.mod ? &*sc.mod : nullptr );
    const std::string note = "first row: t [us]; first column: position [pm]; "
                             "body: density normalised to unit row maximum";
    write_carpet_csv( out_path( a, "carpet_quantum.csv" ),
                      csv_header( "carpet", cfg, note ), c.times, c.position,
                      c.quantum );
    write_carpet_csv( out_path( a, "carpet_classical.csv" ),
                      csv_header( "carpet", cfg, note ), c.times, c.position,
                      c.classical );
    const OutputOptions oo = out_opts( a );
    if ( oo.json_sidecar ) {
      write_sidecar( out_path( a, "carpet_quantum.csv" ), "carpet", cfg,
                     { "t_us", "position_pm", "density" }, "row_max", oo.timestamp );
      write_sidecar( out_path( a, "carpet_classical.csv" ), "carpet", cfg,
                     { "t_us", "position_pm", "density" }, "row_max", oo.timestamp );
    }
    std::cout << "carpet: wrote carpet_quantum.csv, carpet_classical.csv  ("
              << cfg.time_points << " times x " << cfg.grid_points
              << " positions)\n";
  }

  void run_misalign( const CommonArgs& a )
  {
    RunConfig cfg = load_config( a );
    if ( cfg.alignment == "aligned" )
      cfg.alignment = "small_pinhole"; // this subcommand studies misalignment
    const Scenario sc = resolve( cfg );
    const auto grid = default_grid( sc.evolution, sc.mask.period, cfg.grid_points,
                                    cfg.span_sigmas );
    FringePattern p = fringe_pattern( grid, sc.coeffs, sc.evolution,
                                      sc.mod ? &*sc.mod : nullptr );
    const double vis = visibility( p );
    unit_sum( p.quantum );
    unit_sum( p.classical );
    std::vector<std::string> cols = { "relative_position_pm", "quantum_density",
                                      "classical_density" };
    std::vector<std::vector<double>> rows;
    for ( std::size_t i = 0; i < grid.size(); ++i )
      rows.push_back( { grid[i] * 1e12, p.quantum[i], p.classical[i] } );
    const std::string note =
        "relative_position_pm [pm]; densities are unit-sum normalised over "
        "the grid [dimensionless]";
    write_csv( out_path( a, "misalign.csv" ), csv_header( "misalign", cfg, note ),
               cols, rows );
    const OutputOptions oo = out_opts( a );
    if ( oo.json_sidecar )
      write_sidecar( out_path( a, "misalign.csv" ), "misalign", cfg, cols,
                     "unit_sum", oo.timestamp );
    std::cout << "misalign: wrote misalign.csv  (mode = " << cfg.alignment
              << ", impact_y = " << format_number( cfg.impact_y * 1e9 )
              << " nm, visibility = " << format_number( vis ) << ")\n";
  }

  void run_macro( const CommonArgs& a )
  {
    const RunConfig cfg = load_config( a );
    const Scenario sc = resolve( cfg );
    const MacroResult res =
        macroscopicity( cfg.mass, sc.mask.period, sc.macro_t, sc.crystal,
                        cfg.sigma_q_min, cfg.sigma_q_max );
    std::vector<std::vector<double>> rows;
    for ( std::size_t i = 0; i < res.curve_sigma_q.size(); ++i )
      rows.push_back( { res.curve_sigma_q[i], res.curve_tau_max[i] } );
    const std::string note = "sigma_q_per_m [1/m]; tau_max_s [s]";
    write_csv( out_path( a, "macro_curve.csv" ), csv_header( "macro", cfg, note ),
               { "sigma_q_per_m", "tau_max_s" }, rows );
    const OutputOptions oo = out_opts( a );
    if ( oo.json_sidecar )
      write_sidecar( out_path( a, "macro_curve.csv" ), "macro", cfg,
                     { "sigma_q_per_m", "tau_max_s" }, "none", oo.timestamp );
    std::cout << "macro: mu = " << format_number( res.mu ) << " at sigma_q = "
              << format_number( res.argmax_sigma_q ) << " 1/m (boundary: "
              << ( res.at_boundary ? "yes" : "no" ) << "); wrote macro_curve.csv\n";
  }

  void run_detect_prob( const CommonArgs& a )
  {
    const RunConfig cfg = load_config( a );
    const Scenario sc = resolve( cfg );
    const double closed = detection_probability( sc.mask, sc.crystal, sc.delta_k );
    const double quad =
        detection_probability_quadrature( sc.mask, sc.crystal, sc.delta_k );
    const std::string note = "delta_k_per_m [1/m]; probabilities per detected "
                             "electron [dimensionless]";
    write_csv( out_path( a, "detect_prob.csv" ),
               csv_header( "detect-prob", cfg, note ),
               { "delta_k_per_m", "pr_closed", "pr_quadrature" },
               { { sc.delta_k, closed, quad } } );
    const OutputOptions oo = out_opts( a );
    if ( oo.json_sidecar )
      write_sidecar( out_path( a, "detect_prob.csv" ), "detect-prob", cfg,
                     { "delta_k_per_m", "pr_closed", "pr_quadrature" }, "none",
                     oo.timestamp );
    std::cout << "detect-prob: closed = " << format_number( closed )
              << ", quadrature = " << format_number( quad )
              << "; wrote detect_prob.csv\n";
  }

  void run_table( const CommonArgs& a, const std::vector<double>& masses_amu )
  {
    const RunConfig cfg = load_config( a );
    const Scenario sc = resolve( cfg );
    std::vector<double> masses;
    for ( double m : masses_amu )
      masses.push_back( m * constants::amu );
    const auto rows_in = talbot_table( masses, sc.mask.period );
    std::vector<std::vector<double>> rows;
    for ( const auto& r : rows_in )
      rows.push_back( { r.mass / constants::amu, r.talbot, r.drop } );
    const std::string note = "mass_amu [amu]; talbot_time_s [s]; free_fall_m "
                             "[m] (drop over two Talbot times)";
    write_csv( out_path( a, "talbot_table.csv" ), csv_header( "table", cfg, note ),
               { "mass_amu", "talbot_time_s", "free_fall_m" }, rows );
    const OutputOptions oo = out_opts( a );
    if ( oo.json_sidecar )
      write_sidecar( out_path( a, "talbot_table.csv" ), "table", cfg,
                     { "mass_amu", "talbot_time_s", "free_fall_m" }, "none",
                     oo.timestamp );
    for ( const auto& r : rows_in )
      std::cout << "table: M = " << format_number( r.mass / constants::amu )
                << " amu  T = " << format_number( r.talbot ) << " s  fall = "
                << format_number( r.drop ) << " m\n";
  }

  void run_systematics( const CommonArgs& a, const std::string& impact_parameter,
                        const std::string& mirror_distance )
  {
    const RunConfig cfg = load_config( a );
    const Scenario sc = resolve( cfg );
    const double b =
        parse_quantity( impact_parameter, Dimension::length, "impact_parameter" )
            .value;
    const double r =
        parse_quantity( mirror_distance, Dimension::length, "mirror_distance" )
            .value;
    const double t_hold = 2.0 * sc.talbot; // one full grating-readout cycle
    const double defl = charge_deflection_angle( cfg.beam_energy, b );
    const double shift = mirror_image_shift( r, t_hold, cfg.mass );
    const double recoil = backscatter_recoil_velocity( cfg.beam_energy, cfg.mass );
    const std::string note =
        "deflection_rad [rad] at the given impact parameter; mirror_shift_m "
        "[m] over two Talbot times; backscatter_m_per_s [m/s]";
    write_csv( out_path( a, "systematics.csv" ),
               csv_header( "systematics", cfg, note ),
               { "impact_parameter_m", "deflection_rad", "mirror_distance_m",
                 "mirror_shift_m", "backscatter_m_per_s" },
               { { b, defl, r, shift, recoil } } );
    const OutputOptions oo = out_opts( a );
    if ( oo.json_sidecar )
      write_sidecar( out_path( a, "systematics.csv" ), "systematics", cfg,
                     { "impact_parameter_m", "deflection_rad", "mirror_distance_m",
                       "mirror_shift_m", "backscatter_m_per_s" },
                     "none", oo.timestamp );
    std::cout << "systematics: deflection = " << format_number( defl )
              << " rad, mirror shift = " << format_number( shift )
              << " m, backscatter = " << format_number( recoil ) << " m/s\n";
  }

}

int main( int argc, char** argv )
{
  CLI::App app{ "npdiff: quantum and classical fringe patterns of a levitated "
                "nanoparticle diffracted by Bragg-scattered electrons" };
  app.require_subcommand( 1 );

  CommonArgs fringes_a, carpet_a, classical_a, misalign_a, macro_a, detect_a,
      table_a, syst_a;
  std::vector<double> masses_amu = { 1e6, 2e9, 2e10, 1e11, 7e11 };
  std::string impact_parameter = "1 nm";
  std::string mirror_distance = "2 mm";

  auto* fringes = app.add_subcommand(
      "fringes", "quantum and classical readout pattern at fixed t0, t" );
  add_common( fringes, fringes_a );
  auto* carpet_cmd = app.add_subcommand(
      "carpet", "pattern vs time: quantum and classical carpets" );
  add_common( carpet_cmd, carpet_a );
  auto* classical = app.add_subcommand(
      "classical", "classical shadow pattern only" );
  add_common( classical, classical_a );
  auto* misalign = app.add_subcommand(
      "misalign", "pattern with nutation-averaged (misaligned) coefficients" );
  add_common( misalign, misalign_a );
  auto* macro = app.add_subcommand(
      "macro", "macrorealism exclusion: tau_max(sigma_q) curve and mu" );
  add_common( macro, macro_a );
  auto* detect = app.add_subcommand(
      "detect-prob", "per-electron detection probability, closed form vs "
                     "quadrature" );
  add_common( detect, detect_a );
  auto* table = app.add_subcommand(
      "table", "Talbot time and free-fall drop per candidate mass" );
  add_common( table, table_a );
  table->add_option( "--masses", masses_amu, "masses in amu" )->delimiter( ',' );
  auto* syst = app.add_subcommand(
      "systematics", "stray-charge deflection, mirror-image shift, "
                     "backscatter recoil" );
  add_common( syst, syst_a );
  syst->add_option( "--impact-parameter", impact_parameter,
                    "stray charge distance, e.g. '1 nm'" );
  syst->add_option( "--mirror-distance", mirror_distance,
                    "mirror separation, e.g. '2 mm'" );

  try {
    app.parse( argc, argv );
  } catch ( const CLI::ParseError& e ) {
    const int code = app.exit( e );
    return code == 0 ? 0 : 1;
  }

  try {
    if ( fringes->parsed() )
      run_fringes( fringes_a, false );
    else if ( classical->parsed() )
      run_fringes( classical_a, true );
    else if ( carpet_cmd->parsed() )
      run_carpet( carpet_a );
    else if ( misalign->parsed() )
      run_misalign( misalign_a );
    else if ( macro->parsed() )
      run_macro( macro_a );
    else if ( detect->parsed() )
      run_detect_prob( detect_a );
    else if ( table->parsed() )
      run_table( table_a, masses_amu );
    else if ( syst->parsed() )
      run_systematics( syst_a, impact_parameter, mirror_distance );
  } catch ( const npdiff::config_error& e ) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch ( const npdiff::numerical_error& e ) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
