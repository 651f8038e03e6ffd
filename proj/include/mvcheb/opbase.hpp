#pragma once

#include "mvcheb/ratmat.hpp"

namespace mvcheb {

/// Constant matrices of the u-domain operator pair:
/// D = u(1-u) d^2 + d (C - u U) - V and E = d (u B1 + B0) + A0.
/// B0, B1, A0 divide by l and are only defined for twoL >= 1.
struct UDomainMats {
  RatMat C, U, V, B0, B1, A0;
};

UDomainMats u_domain_mats(int twoL);

}  // namespace mvcheb
