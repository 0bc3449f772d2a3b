#pragma once

#include <array>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sqz/evolve.hpp"
#include "sqz/search.hpp"

#include <json.hpp>

namespace sqz::io {

using HeaderFields = std::vector<std::pair<std::string, std::string>>;

/// Scientific notation with `digits` significant digits (default 12).
std::string format_sig(double x, int digits = 12);

/// x rounded to `digits` significant digits (round-trips format_sig).
double round_sig(double x, int digits = 12);

/// '#'-prefixed key = value header block, one column-name row, then data
/// rows. Stripping the leading "# " from the header yields a key = value
/// config file again.
void write_timeseries_csv(std::ostream& os, const TimeSeries& series, double j,
                          const HeaderFields& header);
void write_histogram_csv(std::ostream& os, const HistogramSnapshot& snap,
                         const HeaderFields& header);
void write_coupling_scan_csv(std::ostream& os, const CouplingScanResult& scan,
                             const HeaderFields& header);
void write_surface_csv(std::ostream& os,
                       const std::vector<std::array<double, 3>>& rows,
                       const std::array<std::string, 3>& columns,
                       const HeaderFields& header);

/// JSON mirrors of the CSV schemas; numeric values pre-rounded to 12
/// significant digits so output is byte-stable.
nlohmann::json timeseries_to_json(const TimeSeries& series, double j,
                                  const HeaderFields& header);
nlohmann::json coupling_scan_to_json(const CouplingScanResult& scan,
                                     const HeaderFields& header);
nlohmann::json surface_to_json(const std::vector<std::array<double, 3>>& rows,
                               const std::array<std::string, 3>& columns,
                               const HeaderFields& header);

}  // namespace sqz::io
