#include "hyparr/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

bool inconsistent(const Echelon& e, std::size_t dim, bool affine) {
    return affine && !e.pivots.empty() && e.pivots.back() == dim;
}

Echelon as_echelon(const Matrix& rref) {
    Echelon e;
    e.reduced = rref;
    for (std::size_t r = 0; r < rref.rows(); ++r) {
        for (std::size_t c = 0; c < rref.cols(); ++c) {
            if (sgn(rref(r, c)) != 0) {
                e.pivots.push_back(c);
                break;
            }
        }
    }
    return e;
}

Matrix stacked(const Matrix& m, std::span<const Rational> row) {
    Matrix out = m;
    out.append_row(row);
    return out;
}

}  // namespace

IntersectionLattice IntersectionLattice::build(const std::vector<RationalVector>& rows, std::size_t dim,
                                               bool affine) {
    const std::size_t width = dim + (affine ? 1 : 0);
    for (const auto& r : rows) {
        if (r.size() != width) {
            throw Error(ErrorCode::DimensionMismatch, "hyperplane row of width " + std::to_string(r.size()) +
                                                          ", expected " + std::to_string(width));
        }
    }

    IntersectionLattice lat;
    lat.dim_ = dim;
    lat.affine_ = affine;
    lat.hyperplane_count_ = rows.size();

    std::vector<Flat> current{Flat{Matrix(0, width), 0, {}}};
    while (!current.empty()) {
        std::sort(current.begin(), current.end(),
                  [](const Flat& a, const Flat& b) { return a.equations < b.equations; });
        lat.level_start_.push_back(lat.flats_.size());
        for (auto& f : current) lat.flats_.push_back(std::move(f));

        std::map<Matrix, Flat> next;
        const auto [begin, end] = std::pair{lat.level_start_.back(), lat.flats_.size()};
        for (std::size_t i = begin; i < end; ++i) {
            const Flat& x = lat.flats_[i];
            for (std::size_t h = 0; h < rows.size(); ++h) {
                if (std::binary_search(x.hyperplanes.begin(), x.hyperplanes.end(), h)) continue;
                Echelon e = row_echelon(stacked(x.equations, rows[h]));
                if (inconsistent(e, dim, affine)) continue;
                if (next.contains(e.reduced)) continue;
                Flat y;
                y.codim = e.rank();
                for (std::size_t k = 0; k < rows.size(); ++k) {
                    if (e.contains(rows[k])) y.hyperplanes.push_back(k);
                }
                y.equations = e.reduced;
                next.emplace(y.equations, std::move(y));
            }
        }
        current.clear();
        for (auto& [key, f] : next) current.push_back(std::move(f));
    }
    lat.level_start_.push_back(lat.flats_.size());

    lat.moebius_.assign(lat.flats_.size(), 0);
    lat.moebius_[0] = 1;
    for (std::size_t j = 1; j < lat.flats_.size(); ++j) {
        const std::size_t level_begin = lat.level(lat.flats_[j].codim).first;
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < level_begin; ++i) {
            if (lat.contains(i, j)) sum += lat.moebius_[i];
        }
        lat.moebius_[j] = -sum;
    }
    return lat;
}

std::pair<std::size_t, std::size_t> IntersectionLattice::level(std::size_t k) const {
    if (k + 1 >= level_start_.size()) return {flats_.size(), flats_.size()};
    return {level_start_[k], level_start_[k + 1]};
}

std::size_t IntersectionLattice::level_size(std::size_t k) const {
    const auto [b, e] = level(k);
    return e - b;
}

bool IntersectionLattice::contains(std::size_t i, std::size_t j) const {
    const auto& hi = flats_.at(i).hyperplanes;
    const auto& hj = flats_.at(j).hyperplanes;
    return std::includes(hj.begin(), hj.end(), hi.begin(), hi.end());
}

std::optional<std::size_t> IntersectionLattice::find(const Matrix& equations) const {
    const std::size_t k = equations.rows();
    const auto [b, e] = level(k);
    auto first = flats_.begin() + static_cast<std::ptrdiff_t>(b);
    auto last = flats_.begin() + static_cast<std::ptrdiff_t>(e);
    auto it = std::lower_bound(first, last, equations,
                               [](const Flat& f, const Matrix& m) { return f.equations < m; });
    if (it != last && it->equations == equations) return static_cast<std::size_t>(it - flats_.begin());
    return std::nullopt;
}

IntPolynomial IntersectionLattice::characteristic_polynomial() const {
    std::vector<std::int64_t> c(dim_ + 1, 0);
    for (std::size_t i = 0; i < flats_.size(); ++i) c[dim_ - flats_[i].codim] += moebius_[i];
    return IntPolynomial(std::move(c));
}

std::vector<RationalVector> hyperplane_rows(const CentralArrangement& a) {
    std::vector<RationalVector> rows;
    rows.reserve(a.size());
    for (const auto& f : a.forms()) rows.push_back(f.as_rationals());
    return rows;
}

std::vector<RationalVector> hyperplane_rows(const AffineArrangement& a) {
    std::vector<RationalVector> rows;
    rows.reserve(a.size());
    for (const auto& h : a.hyperplanes()) {
        RationalVector r = to_rationals(h.normal);
        r.emplace_back(h.offset);
        rows.push_back(std::move(r));
    }
    return rows;
}

IntersectionLattice intersection_lattice(const CentralArrangement& a) {
    return IntersectionLattice::build(hyperplane_rows(a), a.dim(), false);
}

IntersectionLattice intersection_lattice(const AffineArrangement& a) {
    return IntersectionLattice::build(hyperplane_rows(a), a.dim(), true);
}

IntPolynomial char_poly(const CentralArrangement& a) {
    return intersection_lattice(a).characteristic_polynomial();
}

IntPolynomial char_poly(const AffineArrangement& a) {
    return intersection_lattice(a).characteristic_polynomial();
}

IntPolynomial reduced_char_poly(const CentralArrangement& a) {
    const auto [q, r] = divide_by_linear(char_poly(a), 1);
    if (r != 0) {
        throw Error(ErrorCode::NonzeroRemainder, "chi(A, t) not divisible by t - 1 (remainder " +
                                                     std::to_string(r) + ")");
    }
    return q;
}

std::int64_t chamber_count(const CentralArrangement& a) {
    const std::int64_t v = char_poly(a).evaluate(-1);
    return a.dim() % 2 == 0 ? v : -v;
}

std::int64_t chamber_count(const AffineArrangement& a) {
    const std::int64_t v = char_poly(a).evaluate(-1);
    return a.dim() % 2 == 0 ? v : -v;
}

Multiarrangement localize_and_essentialize(const Multiarrangement& m, const Flat& x) {
    const auto& base = m.base;
    if (x.equations.cols() != base.dim()) {
        throw Error(ErrorCode::FlatNotInLattice, "flat has " + std::to_string(x.equations.cols()) +
                                                     " columns, arrangement has dimension " +
                                                     std::to_string(base.dim()));
    }
    const Echelon e = as_echelon(x.equations);
    std::vector<std::size_t> local;
    Matrix span(0, base.dim());
    for (std::size_t i = 0; i < base.size(); ++i) {
        const auto row = base.form(i).as_rationals();
        if (e.contains(row)) {
            local.push_back(i);
            span.append_row(row);
        }
    }
    if (e.rank() != x.codim || rank(span) != e.rank()) {
        throw Error(ErrorCode::FlatNotInLattice, "flat is not an intersection of hyperplanes of the arrangement");
    }

    std::vector<LinearForm> forms;
    std::vector<std::string> labels;
    std::vector<int> mult;
    for (auto i : local) {
        const auto row = base.form(i).as_rationals();
        RationalVector coords;
        coords.reserve(e.rank());
        for (auto p : e.pivots) coords.push_back(row[p]);
        forms.push_back(LinearForm::from_rationals(coords));
        if (!base.labels().empty()) labels.push_back(base.label(i));
        mult.push_back(m.mult[i]);
    }
    return {CentralArrangement(e.rank(), std::move(forms), std::move(labels)), std::move(mult)};
}

Multiarrangement essentialize(const Multiarrangement& m) {
    Matrix span(0, m.dim());
    for (const auto& f : m.base.forms()) span.append_row(f.as_rationals());
    Echelon e = row_echelon(span);
    Flat center{e.reduced, e.rank(), {}};
    return localize_and_essentialize(m, center);
}

DeconeRestriction::DeconeRestriction(const CentralArrangement& a, std::size_t h0)
    : h0_(h0),
      decone_(hyparr::decone(a, h0)),
      restriction_(ziegler_restriction(a, h0)),
      decone_lattice_(intersection_lattice(decone_)),
      restriction_lattice_(intersection_lattice(restriction_.base)) {
    rho_.reserve(decone_lattice_.size());
    for (const auto& y : decone_lattice_.flats()) {
        const std::size_t dim = decone_.dim();
        Matrix direction(y.equations.rows(), dim);
        for (std::size_t r = 0; r < y.equations.rows(); ++r) {
            for (std::size_t c = 0; c < dim; ++c) direction(r, c) = y.equations(r, c);
        }
        const auto idx = restriction_lattice_.find(row_echelon(direction).reduced);
        if (!idx) {
            throw Error(ErrorCode::InternalInconsistency, "direction space of a deconed flat is not a restriction flat");
        }
        rho_.push_back(*idx);
    }
}

std::size_t DeconeRestriction::rho(const Flat& y) const {
    const auto idx = decone_lattice_.find(y.equations);
    if (!idx) throw Error(ErrorCode::FlatNotInLattice, "flat is not in the lattice of the deconing");
    return rho_[*idx];
}

Flat rho(const CentralArrangement& a, std::size_t h0, const Flat& y) {
    DeconeRestriction dr(a, h0);
    return dr.restriction_lattice().flat(dr.rho(y));
}

BCoefficients b_coefficients(const DeconeRestriction& dr, const CentralArrangement& a) {
    if (a.dim() < 2) throw Error(ErrorCode::DimensionMismatch, "b coefficients need dim >= 2");
    const IntPolynomial chi0 = reduced_char_poly(a);
    const std::size_t l = a.dim();
    BCoefficients out;
    out.b.resize(l, 0);
    for (std::size_t i = 0; i < l; ++i) out.b[i] = std::llabs(chi0.coefficient(l - 1 - i));

    const auto& dl = dr.decone_lattice();
    out.per_flat.assign(dr.restriction_lattice().size(), 0);
    std::vector<std::int64_t> check(l, 0);
    for (std::size_t y = 0; y < dl.size(); ++y) {
        const std::size_t x = dr.rho(y);
        out.per_flat[x] += std::llabs(dl.moebius(y));
        check[dl.flat(y).codim] += std::llabs(dl.moebius(y));
    }
    if (check != out.b) {
        throw Error(ErrorCode::InternalInconsistency, "per-flat b coefficients do not sum to chi_0 coefficients");
    }
    return out;
}

BCoefficients b_coefficients(const CentralArrangement& a, std::size_t h0) {
    return b_coefficients(DeconeRestriction(a, h0), a);
}

}  // namespace hyparr
