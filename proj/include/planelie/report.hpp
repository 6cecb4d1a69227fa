#pragma once

#include <string>

namespace planelie {

enum class ClaimStatus { Pass, Fail, KnownDiscrepancy };

const char* to_string(ClaimStatus s);

/// One replayed claim. `computed` always comes from the engine; `expected`
/// from the catalog or from the printed formula being checked.
struct ClaimReport {
  std::string claim_id;
  std::string anchor;
  std::string computed;
  std::string expected;
  ClaimStatus status = ClaimStatus::Fail;
  std::string note;

  friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

}  // namespace planelie
