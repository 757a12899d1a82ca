#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stlmon/monitor.hpp"

namespace stlmon {

/// A malformed input CSV row. `row` counts data rows from 1; 0 is the header.
class CsvError : public Error {
 public:
  CsvError(std::size_t row, const std::string& message)
      : Error((row == 0 ? std::string("header") : "row " + std::to_string(row)) + ": " +
              message),
        row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// Reads `time,signal,value` rows. Throws CsvError for a bad header, a
/// malformed row or a row whose time is lower than the previous row's.
std::vector<Step> read_steps_csv(std::istream& in);

inline constexpr const char* kVerdictCsvHeader = "time,kind,lo_or_value,hi,final";

/// One `time,kind,lo_or_value,hi,final` row without the line break.
std::string format_event_csv(const Event& e);

/// Full command line without the program name, e.g. {"run", "--formula", ...}.
/// Returns the process exit status: 0 on success, 2 on input errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stlmon
