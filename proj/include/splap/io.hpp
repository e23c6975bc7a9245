#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "splap/analysis.hpp"
#include "splap/control.hpp"
#include "splap/grid.hpp"
#include "splap/ldp.hpp"
#include "splap/stepper.hpp"
#include "splap/tci.hpp"

// CSV and binary serialization. All floating-point text uses %.17g so that
// identical runs produce byte-identical files.

namespace splap {

std::string format_double(double x);

std::string ledger_csv(const Trajectory& traj);
std::string control_csv(const Control& h);
std::string contraction_csv(const ContractionReport& report);
std::string ldp_csv(const LdpReport& report);

struct TciContext {
    int n_cells = 0;
    int n_steps = 0;
    long n_samples = 0;
    std::string h_family;
};

// Includes a comment header recording the run context and the fact that the
// coupling distance is an upper bound, not the Wasserstein distance itself.
std::string tci_csv(const TciReport& report, const TciContext& ctx);

std::string rate_csv(const RateResult& result);

// Fine control table: two columns t,value; optional header row; a repeated
// t encodes a jump.
TimeSeries read_time_series_csv(std::istream& in);
TimeSeries read_time_series_csv_file(const std::string& path);

// Flat binary snapshots: u32 n_interior, u32 count, then count*n_interior
// little-endian 64-bit floats.
void write_field_snapshots(std::ostream& out, const std::vector<Field>& fields);
std::vector<Field> read_field_snapshots(std::istream& in);
void write_field_snapshots_file(const std::string& path, const std::vector<Field>& fields);
std::vector<Field> read_field_snapshots_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace splap
