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

#ifndef NPDIFF_ERRORS_HPP
#define NPDIFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace npdiff {

  // Bad user input: unknown keys, malformed values, parameters outside their
  // physical domain. The CLI maps this to exit code 1.
  class config_error : public std::runtime_error {
  public:
    explicit config_error( const std::string& msg ) : std::runtime_error( msg ) {}
  };

  // A computation failed to meet its accuracy contract (non-convergent
  // quadrature, residuals above tolerance, ...). The CLI maps this to exit
  // code 2. The message carries diagnostics of the failing computation.
  class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error( const std::string& msg ) : std::runtime_error( msg ) {}
  };

}

#endif
