#pragma once

#include <string>

#include "geodissect/analysis.hpp"
#include "geodissect/json_io.hpp"

namespace geodissect {

// {"params", "dfa", "r", "threshold_n0", "finite_side",
//  "exceptional_lengths", "conclusion"} in that order.
Json certificate_json(const DissectionVerdict& verdict);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

// Re-verifies a certificate from its own contents: the threshold margin
// argument at threshold_n0, the residue-0 acceptance flag, and the exact
// exceptional list. Does not call into the verdict code path.
CertificateCheck verify_certificate(const Json& cert);

}  // namespace geodissect
