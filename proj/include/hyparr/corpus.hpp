#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/derivations.hpp"

namespace hyparr::corpus {

/// How an expected value was obtained: read off the definitions, or computed and
/// confirmed by an independent oracle.
enum class Provenance { Trivial, DerivedByOracle };

std::string_view to_string(Provenance p) noexcept;

template <class T>
struct Tagged {
    T value;
    Provenance provenance;
};

struct Expected {
    /// chi of the underlying simple arrangement, coefficients low to high.
    std::optional<Tagged<std::vector<std::int64_t>>> char_poly;
    std::optional<Tagged<std::int64_t>> chambers;
    std::optional<Tagged<FreenessStatus>> verdict;
    std::optional<Tagged<Exponents>> exponents;
    /// b and sigma at `h0`.
    std::optional<Tagged<std::vector<std::int64_t>>> b;
    std::optional<Tagged<std::vector<std::optional<std::int64_t>>>> sigma;
};

struct CorpusEntry {
    std::string name;
    std::string description;
    Multiarrangement arrangement;
    std::size_t h0 = 0;
    Expected expected;
};

const std::vector<CorpusEntry>& entries();

/// Throws IndexOutOfRange naming the known entries.
const CorpusEntry& get(std::string_view name);

}  // namespace hyparr::corpus
