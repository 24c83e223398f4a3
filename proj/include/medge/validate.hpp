#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace medge {

/// One exact-vs-asymptotic comparison. Only the values are stored; absolute
/// and relative errors are recomputed at emission so reports cannot carry
/// stale error figures.
struct ValidationRow {
  long n = 0;
  std::string quantity;
  double exact = 0.0;
  double approx = 0.0;
};

struct ValidationReport {
  std::string claim;
  bool pass = false;
  std::vector<ValidationRow> rows;
  std::vector<std::string> notes;  // thresholds used, measured extremes, ...
};

/// Names accepted by validate_claim, in presentation order.
std::vector<std::string> claim_names();

/// Runs one named validation claim. An empty grid selects the claim's
/// default n-grid; claims that ignore the grid say so in their notes.
/// Unknown names throw std::invalid_argument.
ValidationReport validate_claim(const std::string& name,
                                const std::vector<long>& grid = {});

void write_json(std::ostream& os, const ValidationReport& report);
void write_csv(std::ostream& os, const ValidationReport& report);

/// Several reports as one JSON array / one CSV table.
void write_json(std::ostream& os, const std::vector<ValidationReport>& reports);
void write_csv(std::ostream& os, const std::vector<ValidationReport>& reports);

}  // namespace medge
