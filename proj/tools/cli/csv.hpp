#pragma once

#include <string>

#include "trevi/series.hpp"

namespace trevi::cli {

/// Loads a two-column CSV (tick index or ISO timestamp, log-price) sampled on
/// strictly consecutive ticks. Timestamps must sit on the 3-minute grid. A
/// single non-numeric header row is allowed and skipped.
RegularSeries load_series_csv(const std::string& path);

/// Writes "tick,log_price" rows with 17 significant digits, so a save/load
/// round trip reproduces values bit-exactly.
void save_series_csv(const std::string& path, const RegularSeries& series);

} // namespace trevi::cli
