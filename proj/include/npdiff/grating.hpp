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

#ifndef NPDIFF_GRATING_HPP
#define NPDIFF_GRATING_HPP

#include <complex>
#include <vector>

#include "npdiff/crystal.hpp"

namespace npdiff {

  // The set of Bragg orders selected by the detection pinholes. Detecting an
  // electron scattered into order n kicks the particle by n momentum quanta
  // h/d, where d is the plane spacing of the underlying reflection.
  struct DiffractionMask {
    double period;                   // m, grating period d
    std::vector<int> orders;         // selected orders, e.g. {-2,-1,1,2}
    std::vector<double> amplitudes;  // scattering amplitude f_n per order, m^2
  };

  // Build the mask for the reflection family (n*h, n*k, n*l), n running over
  // `orders`, with amplitudes evaluated at each order's plane spacing.
  DiffractionMask build_mask( const MillerIndex& base, const std::vector<int>& orders,
                              const Crystal& c, double kinetic_energy );

  // Hermitian positive-semidefinite coefficient matrix B_{j j'} of the
  // effective grating transformation: a detected electron maps the particle
  // state rho to  sum_{j j'} B_{j j'} e^{i 2 pi j x/d} rho e^{-i 2 pi j' x/d}.
  struct GratingCoefficients {
    double period = 0.0;                  // m
    std::vector<int> orders;              // matrix index -> Bragg order
    std::vector<std::complex<double>> b;  // row-major, orders.size()^2

    std::size_t size() const { return orders.size(); }
    std::complex<double> at( std::size_t i, std::size_t j ) const
    {
      return b[i * orders.size() + j];
    }

    // Talbot coefficient B_n(xi) = sum_j B_{j, j+n} e^{i pi xi (n + 2 j)},
    // the n-th fringe harmonic weight in the paraxial (broad-state) pattern.
    // Pairs (j, j+n) absent from the mask contribute zero.
    std::complex<double> talbot_coefficient( int n, double xi ) const;

    // Sum of |amplitude|^2 over orders (diagonal trace before
    // normalisation); 1 for trace-normalised coefficients.
    double trace() const;
  };

  // Perfectly aligned grating: B_{j j'} = f_j f_j'^* / sum_k |f_k|^2.
  GratingCoefficients aligned_coefficients( const DiffractionMask& mask );

  // How the two-point coefficients decay when the electron hits a distance y
  // from the rotation axis of a crystal whose orientation nutates shot to
  // shot with angular spread sigma_beta, while the pinholes only accept a
  // relative angular window xi (dimensionless pinhole half-width).
  enum class MisalignMode {
    general,       // finite sigma_beta
    small_pinhole  // limit sigma_beta >> xi, common prefactor xi/sigma_beta dropped
  };

  // Attenuation factor multiplying B_{n n'} at impact offset y.
  double misalignment_factor( int n, int nprime, double y, double period,
                              double xi, double sigma_beta, MisalignMode mode );

  // Aligned coefficients with each entry damped by the misalignment factor.
  GratingCoefficients misaligned_coefficients( const DiffractionMask& mask, double y,
                                               double xi, double sigma_beta,
                                               MisalignMode mode );

  // Wavenumber spread of a focused Gaussian beam whose intensity profile has
  // the given half-width at half-maximum: sqrt(ln 2 / 2) / hwhm.
  double focus_wavenumber_spread( double intensity_hwhm );

  // Probability that a beam electron scatters into any masked order, for a
  // focus spread delta_k aimed at the spheroid centre. Closed form:
  //   (2 N^2 b^2 / V^2) [ 2 - (1 - e^(-2 dk^2 R^2)) / (dk^2 R^2) ] sum |f_n|^2.
  double detection_probability( const DiffractionMask& mask, const Crystal& c,
                                double delta_k );

  // Same quantity as the underlying transverse integral
  //   \int d^2r (2 dk^2/pi) e^(-2 dk^2 r^2) rhobar(r)^2 * sum |f_n|^2,
  // evaluated by radial quadrature; cross-check of the closed form.
  double detection_probability_quadrature( const DiffractionMask& mask, const Crystal& c,
                                           double delta_k );

}

#endif
