#pragma once

#include <initializer_list>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/error.hpp"
#include "hyparr/multi_poly.hpp"

namespace test {

inline hyparr::CentralArrangement arr(std::size_t dim, std::vector<std::vector<long>> rows) {
    std::vector<hyparr::RationalVector> raw;
    for (const auto& r : rows) raw.emplace_back(r.begin(), r.end());
    return hyparr::canonicalize(raw, dim);
}

inline hyparr::RationalVector vec(std::initializer_list<long> v) {
    return hyparr::RationalVector(v.begin(), v.end());
}

inline hyparr::CentralArrangement boolean(std::size_t dim) {
    std::vector<std::vector<long>> rows;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<long> r(dim, 0);
        r[i] = 1;
        rows.push_back(r);
    }
    return arr(dim, rows);
}

inline hyparr::CentralArrangement braid3() {
    return arr(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
}

inline hyparr::CentralArrangement generic34() {
    return arr(3, {{1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

inline hyparr::MultiPoly x(std::size_t vars, std::size_t i) {
    return hyparr::MultiPoly::variable(vars, i);
}

}  // namespace test

#define CHECK_ERROR_CODE(expr, expected_code)                                \
    do {                                                                     \
        bool thrown_ = false;                                                \
        try {                                                                \
            (void)(expr);                                                    \
        } catch (const hyparr::Error& e_) {                                  \
            thrown_ = true;                                                  \
            CHECK_MESSAGE(e_.code() == (expected_code), e_.what());          \
        }                                                                    \
        CHECK_MESSAGE(thrown_, "expected an error from " #expr);             \
    } while (0)
