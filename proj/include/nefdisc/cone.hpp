#pragma once

// Double-description enumeration of the generators of a polyhedral cone
// {y : <a, y> >= 0 for every constraint row a}.

#include "nefdisc/arith.hpp"

#include <vector>

namespace nefdisc {

struct ConeGenerators {
    std::vector<IntVector> rays;      // extreme rays of the pointed part, primitive
    std::vector<IntVector> lineality; // basis of the lineality space
};

ConeGenerators cone_generators(const std::vector<IntVector> &constraints, std::size_t dim);

} // namespace nefdisc
