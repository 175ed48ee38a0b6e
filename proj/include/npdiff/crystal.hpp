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

#ifndef NPDIFF_CRYSTAL_HPP
#define NPDIFF_CRYSTAL_HPP

#include <array>
#include <complex>

namespace npdiff {

  // Miller index with respect to the primitive reciprocal basis of the
  // diamond-cubic lattice (fcc with a two-atom basis at 0 and (a/4)(1,1,1)).
  struct MillerIndex {
    int h = 0, k = 0, l = 0;
  };

  // A spheroidal nanocrystal: diamond-cubic lattice constant a, atomic
  // number Z, equatorial radius R (perpendicular to the beam) and polar
  // half-thickness b (along the beam).
  struct Crystal {
    double lattice_a;      // m
    int    atomic_number;
    double radius;         // m, R
    double half_thickness; // m, b

    double volume() const;         // m^3, spheroid (4/3) pi R^2 b
    double cell_count() const;     // primitive fcc cells: 4 V / a^3
    double atom_count() const;     // two atoms per primitive cell
  };

  // Reciprocal-lattice vector h b1 + k b2 + l b3 of the fcc lattice,
  // b1 = (2pi/a)(-1,1,1) and cyclic. Cartesian components in 1/m.
  std::array<double, 3> reciprocal_vector( const MillerIndex& idx, const Crystal& c );

  // Conventional-cell Miller index (components of the reciprocal vector in
  // units of 2pi/a); e.g. primitive (1,-1,0) maps to conventional (-2,2,0).
  std::array<int, 3> conventional_index( const MillerIndex& idx );

  // Lattice-plane spacing 2pi/|g| for the reflection idx.
  double plane_spacing( const MillerIndex& idx, const Crystal& c );

  // Geometric structure factor of the two-atom basis, 2 cos((h+k+l) pi/4).
  // Vanishes for h+k+l = 2 mod 4 (forbidden reflections).
  double structure_factor( const MillerIndex& idx );
  bool   is_forbidden( const MillerIndex& idx );

  // Elastic scattering amplitude of the reflection idx for electrons of
  // kinetic energy E0 (J), in a Wentzel (exponentially screened) atomic
  // potential with screening length a0 / Z^(1/3):
  //   f = F * (1 + E0/me c^2) * 2 Z^(2/3) a_screen * lambda
  //       / (1 + (2 pi a_screen / d_idx)^2),   d_idx the plane spacing.
  // Units m^2 (amplitude per unit transverse momentum-transfer density).
  double scattering_amplitude( const MillerIndex& idx, const Crystal& c,
                               double kinetic_energy );

  // Column density of lattice cells projected along the beam, at transverse
  // radius r from the spheroid axis: (N/V) * 2 b sqrt(1 - r^2/R^2) for
  // r < R, else 0. Units 1/m^2. Integrates to the total cell count N.
  double projected_cell_density( double r, const Crystal& c );

  // 2D Fourier transform of the projected cell density at transverse
  // wavenumber k (1/m): 3 N j1(k R) / (k R). Dimensionless.
  double projected_density_fourier( double k, const Crystal& c );

  // 3D Fourier transform of the spheroid's mass density at wavevector with
  // transverse magnitude q_perp and axial component q_z, for total mass M:
  //   3 M j1(u)/u,  u = sqrt((q_perp R)^2 + (q_z b)^2).  Units kg.
  double mass_density_fourier( double q_perp, double q_z,
                               const Crystal& c, double mass );

}

#endif
