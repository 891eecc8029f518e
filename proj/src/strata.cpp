#include "wpbound/strata.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wpbound {

unsigned Stratum::mask() const noexcept {
    unsigned m = 0;
    for (int j : vanishing) m |= 1u << j;
    return m;
}

bool Stratum::contains(int index) const noexcept {
    return std::find(vanishing.begin(), vanishing.end(), index) != vanishing.end();
}

std::string Stratum::label() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vanishing.size(); ++i) {
        if (i) os << ',';
        os << vanishing[i];
    }
    os << '}';
    return os.str();
}

int Stratum::point_index() const {
    if (dim != 0) {
        throw std::logic_error("stratum " + label() + " is not a point");
    }
    for (int i = 0; i < 5; ++i) {
        if (!contains(i)) return i;
    }
    throw std::logic_error("malformed point stratum");
}

std::vector<Stratum> enumerate_strata(const WeightVector& w) {
    std::vector<Stratum> out;
    out.reserve(30);
    for (int size = 1; size <= 4; ++size) {
        // Bitmasks with `size` bits set, visited so that the index lists come out
        // lexicographically: collect, then sort.
        std::vector<std::vector<int>> subsets;
        for (unsigned m = 1; m < 31u; ++m) {
            if (std::popcount(m) != size) continue;
            std::vector<int> idx;
            for (int j = 0; j < 5; ++j) {
                if (m & (1u << j)) idx.push_back(j);
            }
            subsets.push_back(std::move(idx));
        }
        std::sort(subsets.begin(), subsets.end());
        for (auto& idx : subsets) {
            Stratum s;
            s.vanishing = std::move(idx);
            s.dim = 4 - size;
            Weight r = 0;
            Integer h = 1;
            for (int i = 0; i < 5; ++i) {
                if (s.contains(i)) {
                    h *= Integer(static_cast<long>(w[i]));
                } else {
                    r = std::gcd(r, w[i]);
                }
            }
            s.r = r;
            s.h = h * Integer(static_cast<long>(r));
            s.singular = r > 1;
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<Stratum> singular_strata(const WeightVector& w) {
    std::vector<Stratum> sing;
    for (auto& s : enumerate_strata(w)) {
        if (s.singular) sing.push_back(std::move(s));
    }
    for (auto& p : sing) {
        if (p.dim != 0) continue;
        for (const auto& c : sing) {
            // P_J lies in the closure of P_J' exactly when J' is a subset of J.
            if (c.dim > 0 && c.r == p.r && (c.mask() & p.mask()) == c.mask()) {
                p.dominated = true;
                break;
            }
        }
    }
    return sing;
}

bool is_pairwise_coprime(const WeightVector& w) {
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            if (std::gcd(w[i], w[j]) != 1) return false;
        }
    }
    return true;
}

}  // namespace wpbound
