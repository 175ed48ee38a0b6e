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

#ifndef NPDIFF_MACROSCOPICITY_HPP
#define NPDIFF_MACROSCOPICITY_HPP

#include <vector>

#include "npdiff/crystal.hpp"

namespace npdiff {

  // Minimal macrorealistic modification of quantum mechanics: classicalising
  // noise of momentum-kick spread sigma_q and coherence time parameter tau
  // (referenced to the electron mass m_e as m0).
  struct ModificationParams {
    double tau;     // s, coherence time parameter
    double sigma_q; // 1/m, wavenumber spread of the noise kicks
  };

  // Gaussian-weighted spheroid form-factor integral
  //   I(alpha, beta) = Int_0^inf dxz Int_0^inf dxp
  //                      xp^3 e^(-(xp^2+xz^2)/2) * j1(u)/u,
  //   u = sqrt(alpha^2 xp^2 + beta^2 xz^2),  alpha = sigma_q R, beta = sigma_q b.
  // I(0,0) = (2/3) sqrt(pi/2). Evaluated by oscillation-resolving panel
  // quadrature, domain truncated at x = 12, refined to 1e-8 absolute; throws
  // numerical_error with diagnostics if the refinement does not converge.
  double spheroid_integral( double alpha, double beta );

  // Same weight with the squared kernel (j1(u)/u)^2; I2(0,0) = (2/9)
  // sqrt(pi/2). This is what enters the decoherence rate of a rigid
  // spheroid, whose Fourier-space mass density appears squared in the
  // two-point rate difference.
  double spheroid_integral_squared( double alpha, double beta );

  // Rate at which the modification damps coherences between positions a
  // distance dx apart (quadratic small-dx form):
  //   Gamma(0) - Gamma(dx) = (9 M^2 sigma_q^2 dx^2 / (2 sqrt(2 pi) m0^2 tau))
  //                          * I2(sigma_q R, sigma_q b),   m0 = m_e.
  double dephasing_rate_difference( double dx, double mass, const ModificationParams& mod,
                                    const Crystal& c );

  // Damping exponent the modification adds to the n-th fringe harmonic of an
  // interferometer with grating period d, release delay t0 and evolution
  // time t (the harmonic's reduction factor gets multiplied by e^-exponent):
  //   (3 M^2 (t+t0) / (2 sqrt(2 pi) m0^2 tau))
  //     * [ n sigma_q d t t0 / (T (t+t0)) ]^2 * I2,   T the Talbot time.
  double harmonic_damping_exponent( int n, double mass, double period,
                                    double t0, double t,
                                    const ModificationParams& mod, const Crystal& c );

  // Largest tau excluded when the n=2 fringe harmonic is observed at no less
  // than half its unmodified contrast after evolution time t. The release
  // delay t0 = T (one Talbot time) is folded into the closed form; other
  // delays would need a re-derived prefactor:
  //   tau_max = [ 6 (M/m0)^2 / (sqrt(2 pi) ln 2) ] * [ t^2/(t+T) ]
  //             * (sigma_q d)^2 * I2(sigma_q R, sigma_q b).
  // The Talbot time T is an explicit argument so hypothetical-mass scans can
  // keep the interferometer timing fixed while scaling M.
  double tau_max( double sigma_q, double mass, double period, double t,
                  double talbot, const Crystal& c );

  struct MacroResult {
    double mu;                 // log10( tau_max* / 1 s ), empirical macroscopicity
    double argmax_sigma_q;     // 1/m, maximiser of tau_max over sigma_q
    bool   at_boundary;        // argmax pinned to a search-interval endpoint
    std::vector<double> curve_sigma_q; // the scanned sigma_q grid (log-spaced)
    std::vector<double> curve_tau_max; // tau_max along the grid
  };

  // Empirical macroscopicity mu = log10 max_sigma_q tau_max / 1s, maximised
  // over sigma_q in [sigma_q_min, sigma_q_max] by a log-spaced bracketing
  // scan followed by golden-section refinement (1e-3 relative in sigma_q).
  MacroResult macroscopicity( double mass, double period, double t, const Crystal& c,
                              double sigma_q_min = 1e5, double sigma_q_max = 1e9,
                              int scan_points = 64 );

}

#endif
