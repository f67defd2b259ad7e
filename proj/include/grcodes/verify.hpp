#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grcodes {

struct VerifyOptions {
    /// Include the long runs: exact (62,30,12) distance.
    bool extended = false;
    std::size_t threads = 1;
    std::uint64_t seed = 0;
};

struct ClaimCheck {
    std::string id;
    std::string claim;
    bool pass = false;
    /// The claim is false as printed; the detail names what does hold.
    bool erratum = false;
    std::string detail;
};

/// Re-derives each published example code and claim.
std::vector<ClaimCheck> verify_claims(const VerifyOptions& options = {});

/// Fixed-width pass/fail table.
void print_claims(std::ostream& os, const std::vector<ClaimCheck>& checks);

}  // namespace grcodes
