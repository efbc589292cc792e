#pragma once

#include <vector>

#include "hyperfaces/partition.hpp"

namespace hyperfaces {

// Hook lengths h(u) and contents c(u) = j - i per cell of a Young diagram,
// with the irreducible dimension f^lambda = n! / prod h(u).
struct YoungDiagramStats {
    Partition shape;
    std::vector<std::vector<int>> hooks;
    std::vector<std::vector<int>> contents;
    BigInt dimension;
};

YoungDiagramStats young_stats(const Partition& shape);

}  // namespace hyperfaces
