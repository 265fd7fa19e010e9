#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lielap/io.hpp"

namespace lielap::checks {

struct Params {
    std::optional<int> m;
    std::optional<int> m_prime;
    std::optional<int> max_m;
    std::optional<long> lambda;
    std::optional<Rational> epsilon;
};

struct Result {
    std::string name;
    bool pass = false;
    Json details;
};

const std::vector<std::string>& names();

/// Throws std::invalid_argument for an unknown name or unusable parameters.
Result run(const std::string& name, const Params& params);

}  // namespace lielap::checks
