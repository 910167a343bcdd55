#pragma once

// Error taxonomy shared across the library. The CLI maps these to exit
// codes: domain errors -> 1, inconclusive -> 2, budget -> 3.

#include <stdexcept>

namespace pairalg {

// input outside the supported exact-computation envelope
struct unsupported_error : std::domain_error {
  using std::domain_error::domain_error;
};

// a bounded search or precision budget ran out without an answer; never a
// silent wrong result
struct inconclusive_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a configured work budget would be exceeded
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pairalg
