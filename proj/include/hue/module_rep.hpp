// A finite-dimensional module over U_chi^[r](SL2), given by the 3(r+1)
// generator matrices for e^(p^j), binom(h,p^j), f^(p^j).

#pragma once

#include <optional>
#include <vector>

#include "hue/linalg.hpp"
#include "hue/weights.hpp"

namespace hue {

struct ModuleRep {
    int64_t p = 0;
    int r = 0;
    int dim = 0;
    FieldPtr field;
    ChiForm chi;
    std::vector<Matrix> E, H, F;  // one matrix per level 0..r

    // Verma-style metadata: basis_index[b] is the index k of v_k when the
    // basis comes from a (quotient of a) higher baby Verma module.
    std::vector<int64_t> basis_index;
    std::optional<Weight> weight;

    int levels() const { return r + 1; }
    const Matrix& gen(int family, int level) const {  // family: 0 = E, 1 = H, 2 = F
        return family == 0 ? E[level] : family == 1 ? H[level] : F[level];
    }
    std::vector<const Matrix*> all_generators() const {
        std::vector<const Matrix*> out;
        for (int j = 0; j <= r; ++j) {
            out.push_back(&E[j]);
            out.push_back(&H[j]);
            out.push_back(&F[j]);
        }
        return out;
    }
};

}  // namespace hue
