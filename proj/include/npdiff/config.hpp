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

#ifndef NPDIFF_CONFIG_HPP
#define NPDIFF_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "npdiff/interference.hpp"

namespace npdiff {

  // Flat run configuration. All stored values are SI; timing values may
  // instead be expressed as Talbot-time multiples (resolved in resolve()).
  struct RunConfig {
    // crystal
    double lattice_constant;  // m
    int    atomic_number;
    double radius;            // m
    double half_thickness;    // m
    // electron beam
    double beam_energy;       // J
    double spot_hwhm;         // m, intensity half-width at half-maximum
    // diffraction mask
    MillerIndex miller;       // base reflection (primitive basis)
    std::vector<int> orders;  // accepted orders of the base reflection
    double pinhole_width;     // dimensionless angular half-width xi
    // particle source
    double mass;              // kg
    double trap_frequency;    // Hz (cycles; angular frequency is 2 pi nu)
    double temperature;       // K
    // timing (Talbot multiples resolved against the mask period)
    double t0 = 0.0;          // s (if !t0_talbot)
    double t  = 0.0;          // s (if !t_talbot)
    bool t0_talbot = false;   // t0 holds a Talbot multiple
    bool t_talbot  = false;   // t holds a Talbot multiple
    // electron impact geometry and crystal alignment
    double impact_x = 0.0;    // m, along the grating direction
    double impact_y = 0.0;    // m, offset from the nutation axis
    std::string alignment = "aligned"; // aligned | general | small_pinhole
    double sigma_beta = 0.0;  // rad, nutation spread (general mode)
    // macrorealistic modification (tau = 0: off)
    double mod_tau = 0.0;     // s
    double mod_sigma_q = 0.0; // 1/m
    double macro_t = 0.0;     // s, evolution time for tau_max scans
    bool macro_t_talbot = false;
    double sigma_q_min;       // 1/m, scan bounds for the macroscopicity search
    double sigma_q_max;       // 1/m
    // output shape
    int grid_points = 2048;
    int time_points = 256;
    double t_max = 2.0;       // carpet upper edge, Talbot multiples
    double span_sigmas = 4.0; // grid half-width in units of sigma_x(t)
  };

  // The case-study scenario: a 2e9 amu silicon spheroid (R 109 nm, b 30 nm)
  // probed by 300 keV electrons on the (1,-1,0) reflection, orders +-1, +-2,
  // released from a 305 kHz trap at 12 uK, t0 = t = one Talbot time.
  RunConfig case_study();

  // Parse "key = value" lines ('#' comments allowed) on top of the
  // case-study defaults. Unknown keys or malformed values raise config_error
  // naming the key.
  RunConfig parse_config( const std::string& text );

  // Apply one "key=value" override (the CLI's --set).
  void apply_override( RunConfig& cfg, const std::string& assignment );

  // Serialise with every value in canonical SI units, at full precision, in
  // a form parse_config() accepts (Talbot-multiple flags are resolved first,
  // which needs no external input since the mask period is derivable).
  std::string echo_config( const RunConfig& cfg );

  // Everything derived: geometry, amplitudes, coefficients, timing.
  struct Scenario {
    Crystal crystal;
    DiffractionMask mask;
    GratingCoefficients coeffs; // aligned or misaligned per cfg.alignment
    Evolution evolution;        // resolved t0, t, source state, impact x
    double talbot;              // s, of the mask period
    double delta_k;             // 1/m, beam focus wavenumber spread
    double macro_t;             // s, resolved
    std::optional<ModifiedDynamics> mod;
  };

  // Validate and derive. Domain violations (non-positive sizes, forbidden
  // base reflection, empty order list, ...) raise config_error.
  Scenario resolve( const RunConfig& cfg );

}

#endif
