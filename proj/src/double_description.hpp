#pragma once

#include "heartfan/lattice.hpp"

#include <vector>

namespace heartfan::detail {

struct Generators {
    std::vector<LatticeVector> rays;
    std::vector<LatticeVector> lineality;
};

// Motzkin double description: generators of { x : a.x >= 0 (inequalities), e.x = 0 (equations) }.
// Rays come out extreme and primitive, modulo the returned lineality.
Generators double_description(std::size_t dim, const std::vector<LatticeVector>& inequalities,
                              const std::vector<LatticeVector>& equations);

}  // namespace heartfan::detail
