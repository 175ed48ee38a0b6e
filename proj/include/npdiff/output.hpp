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

#ifndef NPDIFF_OUTPUT_HPP
#define NPDIFF_OUTPUT_HPP

#include <string>
#include <vector>

#include "npdiff/config.hpp"

namespace npdiff {

  // Output policy shared by all CLI subcommands. Files are written with LF
  // line endings and fixed-precision number formatting, so identical runs
  // produce byte-identical files. Wall-clock timestamps only appear in the
  // JSON sidecar, and only when `timestamp` is set.
  struct OutputOptions {
    std::string dir = ".";
    bool json_sidecar = false; // --format csv+json
    bool timestamp = false;
  };

  // Deterministic float formatting used in all data files.
  std::string format_number( double x );

  // '#'-comment header common to every CSV: tool banner, constants snapshot
  // hash, full configuration echo (re-parseable), and a column description.
  std::vector<std::string> csv_header( const std::string& command, const RunConfig& cfg,
                                       const std::string& columns_note );

  // Generic CSV: header comments, one column-name row, then data rows.
  void write_csv( const std::string& path, const std::vector<std::string>& comments,
                  const std::vector<std::string>& column_names,
                  const std::vector<std::vector<double>>& rows );

  // Carpet CSV: after the comments, the first row holds the times (us) with
  // an empty leading cell, each further row starts with the position (pm)
  // followed by the row-max-normalised density at each time.
  void write_carpet_csv( const std::string& path, const std::vector<std::string>& comments,
                         const std::vector<double>& times,
                         const std::vector<double>& positions,
                         const std::vector<std::vector<double>>& rows );

  // JSON sidecar with full metadata for a written CSV.
  void write_sidecar( const std::string& csv_path, const std::string& command,
                      const RunConfig& cfg, const std::vector<std::string>& column_names,
                      const std::string& normalization, bool timestamp );

}

#endif
