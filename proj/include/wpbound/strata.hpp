#pragma once

// Coordinate strata P_J = {x_j = 0 : j in J} of P^4(w) and their stabilizer data.

#include "wpbound/rational.hpp"
#include "wpbound/weights.hpp"

#include <string>
#include <vector>

namespace wpbound {

struct Stratum {
    std::vector<int> vanishing;  // J, sorted indices of vanishing coordinates
    int dim = 0;                 // 4 - |J|
    Weight r = 1;                // gcd of the weights with index not in J
    Integer h = 1;               // r * prod_{j in J} w_j, the full stabilizer order
    bool singular = false;       // r > 1
    bool dominated = false;      // point on a singular curve stratum with the same r

    unsigned mask() const noexcept;
    bool contains(int index) const noexcept;
    /// "{0,1,2}"
    std::string label() const;
    /// For a point stratum (dim 0), the index i with P_J = P_i.
    int point_index() const;
};

/// All 30 proper nonempty J, ordered by |J| then lexicographically.
std::vector<Stratum> enumerate_strata(const WeightVector& w);

/// Strata with r > 1. Point strata lying on a positive-dimensional singular
/// stratum of the same order are flagged dominated.
std::vector<Stratum> singular_strata(const WeightVector& w);

bool is_pairwise_coprime(const WeightVector& w);

}  // namespace wpbound
