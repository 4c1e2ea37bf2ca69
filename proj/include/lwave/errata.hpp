#pragma once

#include <string>
#include <vector>

namespace lwave {

/// One printed formula that disagrees with its own derivation, with the
/// reading adopted here and a live measurement deciding between them.
struct Erratum {
  std::string id;
  std::string printed;
  std::string adopted;
  std::string probe;
  double printed_deviation = 0.0;  // relative deviation of the printed form from its oracle
  double adopted_deviation = 0.0;  // same for the adopted form
  bool resolved = false;           // adopted form agrees with the oracle and the printed one does not
};

/// Recomputes every entry; takes a few seconds.
std::vector<Erratum> errata_ledger();

std::string format_errata(const std::vector<Erratum>& entries);

}  // namespace lwave
