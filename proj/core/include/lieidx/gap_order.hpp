#pragma once

// External basis numbering used by computer-algebra scripts: positive root
// vectors, then negative root vectors, then the Cartan basis, with positive
// roots generated level by level.

#include <string>
#include <vector>

#include "lieidx/root_system.hpp"

namespace lieidx {

/// Level h+1 lists, for each root of level h in order and each simple root
/// alpha_i in order, the sums beta + alpha_i that are roots and not yet listed.
std::vector<Root> generation_order(const RootSystemInfo& rs);

/// Label in chevalley_algebra of external basis vector number k (1-based).
/// Throws InputError when k is out of range.
std::string external_basis_label(const RootSystemInfo& rs, std::size_t k);

}  // namespace lieidx
