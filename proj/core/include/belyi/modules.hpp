#pragma once

#include <vector>

#include "belyi/cohomology.hpp"

namespace belyi {

// Shapes m_1 | m_2 | ... | m_k (k <= max_rank) with product <= max_order.
std::vector<std::vector<long long>> abelian_shapes(long long max_order, int max_rank);

// Every H-module structure on the given shape, one per isomorphism class.
std::vector<FiniteHModule> modules_up_to_iso(const CayleyGroup& h, const std::vector<long long>& shape);

}  // namespace belyi
