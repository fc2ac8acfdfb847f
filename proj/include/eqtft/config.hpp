#pragma once

#include <cstdint>
#include <string>

#include "error.hpp"

namespace eqtft {

enum class OutputFormat { kJson, kTable };

struct RunConfig {
    /// Upper bound on |G|^(number of generators) for tuple enumeration.
    std::uint64_t budget = 100'000'000;
    /// Worker threads for enumeration.
    unsigned width = 1;
    OutputFormat format = OutputFormat::kJson;
    std::uint64_t seed = 20240601;

    void validate() const {
        if (budget == 0) throw InvalidInput("budget > 0", "budget = 0");
        if (width == 0) throw InvalidInput("width >= 1", "width = 0");
    }
};

}  // namespace eqtft
