#pragma once

#include <string>

#include "radmom/moment_set.hpp"
#include "radmom/reconstruct.hpp"

namespace radmom {

// JSON object with keys "m{p}{q}" and decimal-string values (moments can
// exceed 2^53, so they are never emitted as JSON numbers). When central is
// non-null, keys "mu{p}{q}" follow with exact "num/den" strings.
std::string moments_to_json(const MomentSet& ms,
                            const CentralMomentSet* central = nullptr);

// CSV `p,q,value`; central rows (value as "num/den") follow the raw rows.
std::string moments_to_csv(const MomentSet& ms,
                           const CentralMomentSet* central = nullptr);

}  // namespace radmom
