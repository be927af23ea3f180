#include "hyparr/corpus.hpp"

#include "hyparr/error.hpp"

namespace hyparr::corpus {

namespace {

constexpr auto T = Provenance::Trivial;
constexpr auto D = Provenance::DerivedByOracle;

CentralArrangement make(std::size_t dim, std::vector<std::vector<long>> rows, std::vector<std::string> labels) {
    std::vector<RationalVector> raw;
    for (const auto& r : rows) raw.emplace_back(r.begin(), r.end());
    return canonicalize(raw, dim, std::move(labels));
}

CorpusEntry boolean(std::size_t dim) {
    std::vector<std::vector<long>> rows;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<long> r(dim, 0);
        r[i] = 1;
        rows.push_back(r);
        labels.push_back("x" + std::to_string(i + 1));
    }
    // (t - 1)^dim
    std::vector<std::int64_t> chi{1};
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<std::int64_t> next(chi.size() + 1, 0);
        for (std::size_t i = 0; i < chi.size(); ++i) {
            next[i + 1] += chi[i];
            next[i] -= chi[i];
        }
        chi = next;
    }
    CorpusEntry e;
    e.name = "boolean" + std::to_string(dim);
    e.description = "coordinate hyperplanes x_i = 0 in dimension " + std::to_string(dim);
    e.arrangement = Multiarrangement::simple(make(dim, rows, labels));
    e.expected.char_poly = {{chi, T}};
    e.expected.chambers = {{std::int64_t{1} << dim, T}};
    e.expected.verdict = {{FreenessStatus::Free, T}};
    e.expected.exponents = {{Exponents(dim, 1), T}};
    // b_i = binom(dim - 1, i), sigma likewise
    std::vector<std::int64_t> b{1};
    for (std::size_t i = 1; i < dim; ++i) b.push_back(b.back() * static_cast<std::int64_t>(dim - i) / static_cast<std::int64_t>(i));
    e.expected.b = {{b, T}};
    e.expected.sigma = {{std::vector<std::optional<std::int64_t>>(b.begin(), b.end()), D}};
    return e;
}

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> out;
    out.push_back(boolean(2));
    out.push_back(boolean(3));
    out.push_back(boolean(4));

    {
        // Braid arrangement of K4 with x4 = 0: coordinates y1, y2, y3.
        CorpusEntry e;
        e.name = "braid-ess3";
        e.description = "essentialized braid arrangement of K4: y1, y2, y3, y1-y2, y1-y3, y2-y3";
        e.arrangement = Multiarrangement::simple(make(
            3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}},
            {"y1", "y2", "y3", "y1-y2", "y1-y3", "y2-y3"}));
        e.h0 = 0;
        e.expected.char_poly = {{{-6, 11, -6, 1}, D}};
        e.expected.chambers = {{24, D}};
        e.expected.verdict = {{FreenessStatus::Free, D}};
        e.expected.exponents = {{{1, 2, 3}, D}};
        e.expected.b = {{{1, 5, 6}, D}};
        e.expected.sigma = {{{1, 5, 6}, D}};
        out.push_back(std::move(e));
    }
    {
        // Braid arrangement of K5 with x5 = 0: y1..y4 and yi - yj. h0 is y1 - y2.
        CorpusEntry e;
        e.name = "braid-ess4";
        e.description = "essentialized braid arrangement of K5: y1..y4 and yi-yj";
        e.arrangement = Multiarrangement::simple(make(4,
                                                      {{1, 0, 0, 0},
                                                       {0, 1, 0, 0},
                                                       {0, 0, 1, 0},
                                                       {0, 0, 0, 1},
                                                       {1, -1, 0, 0},
                                                       {1, 0, -1, 0},
                                                       {1, 0, 0, -1},
                                                       {0, 1, -1, 0},
                                                       {0, 1, 0, -1},
                                                       {0, 0, 1, -1}},
                                                      {"y1", "y2", "y3", "y4", "y1-y2", "y1-y3", "y1-y4", "y2-y3",
                                                       "y2-y4", "y3-y4"}));
        e.h0 = 4;
        e.expected.char_poly = {{{24, -50, 35, -10, 1}, D}};
        e.expected.chambers = {{120, D}};
        e.expected.verdict = {{FreenessStatus::Free, D}};
        e.expected.exponents = {{{1, 2, 3, 4}, D}};
        e.expected.b = {{{1, 9, 26, 24}, D}};
        e.expected.sigma = {{{1, 9, 26, 24}, D}};
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "generic34";
        e.description = "four generic planes in dimension 3: x+y+z, x, y, z";
        e.arrangement = Multiarrangement::simple(
            make(3, {{1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {"x+y+z", "x", "y", "z"}));
        e.h0 = 3;
        e.expected.char_poly = {{{-3, 6, -4, 1}, D}};
        e.expected.chambers = {{14, D}};
        e.expected.verdict = {{FreenessStatus::NotFree, D}};
        e.expected.b = {{{1, 3, 3}, D}};
        e.expected.sigma = {{{1, 3, 2}, D}};
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "generic45";
        e.description = "five generic hyperplanes in dimension 4: x1..x4, x1+x2+x3+x4";
        e.arrangement = Multiarrangement::simple(make(
            4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}},
            {"x1", "x2", "x3", "x4", "x1+x2+x3+x4"}));
        e.h0 = 4;
        e.expected.char_poly = {{{4, -10, 10, -5, 1}, D}};
        e.expected.chambers = {{30, D}};
        e.expected.verdict = {{FreenessStatus::NotFree, D}};
        e.expected.b = {{{1, 4, 6, 4}, D}};
        // sigma_3 needs the localization at the center, a generic non-free restriction
        e.expected.sigma = {{{1, 4, 6, std::nullopt}, D}};
        out.push_back(std::move(e));
    }
    {
        // Supersolvable: the line x = y = 0 is a modular flat carrying x, y, x-y, x+y.
        CorpusEntry e;
        e.name = "supersolvable3";
        e.description = "rank-3 supersolvable arrangement: x, y, z, x-y, x-z, y-z, x+y";
        e.arrangement = Multiarrangement::simple(
            make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {1, 1, 0}},
                 {"x", "y", "z", "x-y", "x-z", "y-z", "x+y"}));
        e.h0 = 2;
        e.expected.char_poly = {{{-9, 15, -7, 1}, D}};
        e.expected.chambers = {{32, D}};
        e.expected.verdict = {{FreenessStatus::Free, D}};
        e.expected.exponents = {{{1, 3, 3}, D}};
        e.expected.b = {{{1, 6, 9}, D}};
        e.expected.sigma = {{{1, 6, 9}, D}};
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "multi221";
        e.description = "three lines x, y, x+y in the plane with multiplicities (2, 2, 1)";
        e.arrangement = Multiarrangement(make(2, {{1, 0}, {0, 1}, {1, 1}}, {"x", "y", "x+y"}), {2, 2, 1});
        e.h0 = 0;
        e.expected.char_poly = {{{2, -3, 1}, T}};
        e.expected.chambers = {{6, T}};
        e.expected.verdict = {{FreenessStatus::Free, T}};
        e.expected.exponents = {{{2, 3}, D}};
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

std::string_view to_string(Provenance p) noexcept {
    return p == Provenance::Trivial ? "trivial" : "derived-by-oracle";
}

const std::vector<CorpusEntry>& entries() {
    static const std::vector<CorpusEntry> all = build();
    return all;
}

const CorpusEntry& get(std::string_view name) {
    for (const auto& e : entries()) {
        if (e.name == name) return e;
    }
    std::string known;
    for (const auto& e : entries()) known += (known.empty() ? "" : ", ") + e.name;
    throw Error(ErrorCode::IndexOutOfRange, "no corpus entry \"" + std::string(name) + "\" (known: " + known + ")");
}

}  // namespace hyparr::corpus
