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

#ifndef NPDIFF_INTERFERENCE_HPP
#define NPDIFF_INTERFERENCE_HPP

#include <optional>
#include <vector>

#include "npdiff/grating.hpp"
#include "npdiff/kinematics.hpp"
#include "npdiff/macroscopicity.hpp"

namespace npdiff {

  // Timing of one interferometer run: the particle expands freely for t0
  // after release, receives the grating kick, then evolves for t before its
  // position is read out.
  struct Evolution {
    GaussianState state; // motional state at release
    double t0;           // s, release-to-grating delay
    double t;            // s, grating-to-readout time
    double impact_x = 0; // m, electron impact coordinate along the grating;
                         // enters the fringe phases only, with period d
  };

  // Free-expansion widths at readout and the derived fringe geometry.
  struct PropagatedWidths {
    double sigma_x;   // m, position spread at readout
    double sigma_p;   // kg m/s, conditional momentum spread at readout
    double magnified_period; // m, D: geometric image of the grating period
    double talbot;    // s, Talbot time M d^2/h of the grating
    double xi;        // magnification-corrected Talbot phase t d / (T D)

    // Coherence reduction of the n-th harmonic from the momentum spread:
    // exp( -2 pi^2 n^2 (sigma_p t / (M d))^2 ).
    double reduction( int n, double mass, double period, double t ) const;
  };

  PropagatedWidths propagate( const Evolution& ev, double period );

  // A macrorealistic modification acting on a specific particle: the noise
  // parameters plus the spheroid geometry its form factor averages over.
  struct ModifiedDynamics {
    ModificationParams mod;
    Crystal geometry;
  };

  // One-dimensional readout pattern on a position grid. Positions are
  // relative: X - x D/d, with x the electron's impact coordinate along the
  // grating direction, so patterns for different x coincide pointwise.
  struct FringePattern {
    std::vector<double> position;  // m, relative coordinate
    std::vector<double> quantum;   // 1/m (unnormalised density)
    std::vector<double> classical; // 1/m, same kick statistics, no coherences
    PropagatedWidths widths;
    double imag_residue = 0.0;     // max |Im| / max |Re| discarded from quantum
  };

  // Symmetric grid of n points covering |X| <= span_sigmas * sigma_x(t).
  std::vector<double> default_grid( const Evolution& ev, double period,
                                    int n = 2048, double span_sigmas = 4.0 );

  // Full quantum and classical fringe patterns of the masked grating kick,
  // valid for arbitrary source widths. `mod` optionally damps every harmonic
  // with the macrorealistic-modification exponent. Throws numerical_error if
  // the quantum density's imaginary residue exceeds 1e-12 of its peak or if
  // it dips below -1e-12 of its peak.
  FringePattern fringe_pattern( const std::vector<double>& grid,
                                const GratingCoefficients& coeffs,
                                const Evolution& ev,
                                const ModifiedDynamics* mod = nullptr );

  // Paraxial limit for sources much broader than the grating period: a
  // single Gaussian envelope times the harmonic comb, with Talbot
  // coefficients B_n(n xi) (quantum) or B_n(0) (classical).
  FringePattern broad_pattern( const std::vector<double>& grid,
                               const GratingCoefficients& coeffs,
                               const Evolution& ev,
                               const ModifiedDynamics* mod = nullptr );

  // L1 distance between the two densities after normalising each to unit
  // sum on the grid; 0 for identical shapes, 2 for disjoint supports.
  double l1_distance( const std::vector<double>& a, const std::vector<double>& b );

  // Fringe visibility of the harmonic at the pattern period D: least-squares
  // amplitude of [1, cos(2 pi X/D), sin(2 pi X/D)] over |X| <= sigma_x(t),
  // reported as sqrt(ac^2+as^2)/a0. A structureless pattern gives 0.
  double visibility( const FringePattern& p, bool classical = false );

  // Peak-to-valley (Michelson) contrast (max-min)/(max+min) of the
  // envelope-flattened density over |X| <= 1.5 sigma_x(t).
  double michelson_contrast( const FringePattern& p, bool classical = false );

  // Median spacing of dominant local maxima of the envelope-flattened
  // density over |X| <= 2 sigma_x(t) (peaks above half the tallest, with
  // parabolic sub-grid refinement). Nan if fewer than two peaks qualify.
  double peak_spacing( const FringePattern& p, bool classical = false );

  // Quantum and classical carpets: one row per time in t_grid, evaluated on
  // the common position grid and normalised to unit row maximum.
  struct Carpet {
    std::vector<double> times;               // s
    std::vector<double> position;            // m
    std::vector<std::vector<double>> quantum;   // [time][position]
    std::vector<std::vector<double>> classical; // [time][position]
  };

  Carpet carpet( const std::vector<double>& t_grid, const std::vector<double>& grid,
                 const GratingCoefficients& coeffs, const GaussianState& state,
                 double t0, const ModifiedDynamics* mod = nullptr );

}

#endif
