#include "wpbound/weights.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace wpbound {

namespace {

constexpr std::array<std::array<int, 4>, 5> kFourSubsets{{
    {0, 1, 2, 3},
    {0, 1, 2, 4},
    {0, 1, 3, 4},
    {0, 2, 3, 4},
    {1, 2, 3, 4},
}};

std::string join(std::span<const Weight> w, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << sep;
        os << w[i];
    }
    return os.str();
}

}  // namespace

NotWellFormed::NotWellFormed(std::array<int, 4> indices, std::array<Weight, 4> weights, Weight gcd)
    : WeightError(Kind::not_well_formed,
                  "weights are not well-formed: subset (" + join(weights, ',') + ") has gcd " +
                      std::to_string(gcd)),
      indices_(indices),
      subset_(weights) {}

WellFormedness is_well_formed(std::span<const Weight, 5> w) {
    for (const auto& idx : kFourSubsets) {
        Weight g = 0;
        for (int i : idx) g = std::gcd(g, w[i]);
        if (g != 1) {
            return {false, idx};
        }
    }
    return {true, std::nullopt};
}

WeightVector WeightVector::from_weights(std::array<Weight, 5> raw) {
    for (Weight x : raw) {
        if (x <= 0) {
            throw WeightError(WeightError::Kind::non_positive,
                              "weights must be positive, got " + std::to_string(x));
        }
        if (x > kMaxWeight) {
            throw WeightError(WeightError::Kind::too_large,
                              "weight " + std::to_string(x) + " exceeds " + std::to_string(kMaxWeight));
        }
    }
    std::sort(raw.begin(), raw.end());
    auto wf = is_well_formed(raw);
    if (!wf.well_formed) {
        const auto& idx = *wf.offending;
        std::array<Weight, 4> sub{};
        Weight g = 0;
        for (int k = 0; k < 4; ++k) {
            sub[k] = raw[idx[k]];
            g = std::gcd(g, sub[k]);
        }
        throw NotWellFormed(idx, sub, g);
    }
    WeightVector v;
    v.w_ = raw;
    v.m_ = 1;
    for (Weight x : raw) {
        v.m_ *= Integer(static_cast<long>(x));
        v.sw_ += x;
    }
    return v;
}

std::string WeightVector::to_string(char sep) const { return join(w_, sep); }

WeightVector parse_weights(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t'; };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_sep(text[i])) ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    if (tokens.size() != 5) {
        throw WeightError(WeightError::Kind::count,
                          "expected 5 weights, got " + std::to_string(tokens.size()));
    }
    std::array<Weight, 5> raw{};
    for (std::size_t k = 0; k < 5; ++k) {
        auto tok = tokens[k];
        Weight value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec == std::errc::result_out_of_range) {
            throw WeightError(WeightError::Kind::too_large,
                              "weight '" + std::string(tok) + "' is out of range");
        }
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw WeightError(WeightError::Kind::syntax,
                              "weight '" + std::string(tok) + "' is not an integer");
        }
        raw[k] = value;
    }
    return WeightVector::from_weights(raw);
}

WellFormedEnumerator::WellFormedEnumerator(Weight max_weight)
    : max_weight_(max_weight), cur_{1, 1, 1, 1, 1} {
    if (max_weight < 1) {
        throw std::invalid_argument("max weight must be at least 1");
    }
}

// Next sorted 5-tuple with entries in [1, max_weight], lexicographically.
bool WellFormedEnumerator::advance() {
    if (!started_) {
        started_ = true;
        return true;
    }
    int k = 4;
    while (k >= 0 && cur_[k] == max_weight_) --k;
    if (k < 0) return false;
    ++cur_[k];
    for (int j = k + 1; j < 5; ++j) cur_[j] = cur_[k];
    return true;
}

std::optional<WeightVector> WellFormedEnumerator::next() {
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        if (is_well_formed(cur_).well_formed) {
            return WeightVector::from_weights(cur_);
        }
    }
    return std::nullopt;
}

std::vector<WeightVector> enumerate_well_formed(Weight max_weight) {
    std::vector<WeightVector> out;
    WellFormedEnumerator e(max_weight);
    while (auto v = e.next()) out.push_back(std::move(*v));
    return out;
}

}  // namespace wpbound
