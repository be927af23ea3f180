#include "hyparr/derivations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hyparr/error.hpp"
#include "hyparr/matrix.hpp"

namespace hyparr {

namespace {

using LowOrderKey = std::pair<int, Exponent>;
using LowOrderPart = std::map<LowOrderKey, Rational>;

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Writes f in the coordinates (y, x_k : k != j) with y = alpha and returns the
/// coefficients of the terms of y-degree below `mult`; alpha^mult | f iff empty.
class TransverseExpansion {
public:
    TransverseExpansion(const LinearForm& alpha, int mult) : alpha_(alpha.as_rationals()), mult_(mult) {
        const auto& a = alpha.coefficients();
        pivot_ = static_cast<std::size_t>(std::find_if(a.begin(), a.end(), [](const Integer& z) { return z != 0; }) -
                                          a.begin());
        RationalVector rest = alpha_;
        rest[pivot_] = 0;
        for (auto& q : rest) q = -q;
        minus_rest_ = MultiPoly::linear(rest);
    }

    void add(const Exponent& e, const Rational& c, LowOrderPart& out) {
        const int ej = e[pivot_];
        Exponent base = e;
        base[pivot_] = 0;
        Rational scale = c;
        for (int k = 0; k < ej; ++k) scale /= alpha_[pivot_];
        for (int s = 0; s < mult_ && s <= ej; ++s) {
            const MultiPoly term = power(ej - s) * MultiPoly::monomial(base, scale * Rational(binomial(ej, s)));
            for (const auto& [exp, coef] : term.terms()) {
                auto [it, inserted] = out.try_emplace(LowOrderKey{s, exp}, coef);
                if (!inserted) {
                    it->second += coef;
                }
            }
        }
    }

private:
    const MultiPoly& power(int p) {
        while (static_cast<int>(powers_.size()) <= p) {
            if (powers_.empty()) {
                powers_.push_back(MultiPoly::constant(alpha_.size(), 1));
            } else {
                powers_.push_back(powers_.back() * minus_rest_);
            }
        }
        return powers_[static_cast<std::size_t>(p)];
    }

    RationalVector alpha_;
    int mult_;
    std::size_t pivot_ = 0;
    MultiPoly minus_rest_;
    std::vector<MultiPoly> powers_;
};

bool divisible_by_power(const MultiPoly& f, const LinearForm& alpha, int mult) {
    if (mult <= 0 || f.is_zero()) return true;
    TransverseExpansion ex(alpha, mult);
    LowOrderPart part;
    for (const auto& [e, c] : f.terms()) ex.add(e, c, part);
    return std::all_of(part.begin(), part.end(), [](const auto& kv) { return sgn(kv.second) == 0; });
}

class GradedPiece {
public:
    GradedPiece(std::size_t dim, int degree) : dim_(dim), degree_(degree), monos_(monomials_of_degree(dim, degree)) {
        for (std::size_t t = 0; t < monos_.size(); ++t) index_.emplace(monos_[t], t);
    }

    std::size_t width() const noexcept { return dim_ * monos_.size(); }
    const std::vector<Exponent>& monomials() const noexcept { return monos_; }

    PolyVectorField field(std::span<const Rational> v) const {
        std::vector<MultiPoly> comps(dim_, MultiPoly(dim_));
        const std::size_t n = monos_.size();
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t t = 0; t < n; ++t) {
                if (sgn(v[i * n + t]) != 0) comps[i].add_term(monos_[t], v[i * n + t]);
            }
        }
        return PolyVectorField(std::move(comps), degree_);
    }

    RationalVector vector(const PolyVectorField& theta) const {
        RationalVector v(width());
        const std::size_t n = monos_.size();
        for (std::size_t i = 0; i < dim_; ++i) {
            for (const auto& [e, c] : theta.component(i).terms()) v[i * n + index_.at(e)] = c;
        }
        return v;
    }

    Matrix constraints(const Multiarrangement& support) const {
        std::map<std::pair<std::size_t, LowOrderKey>, std::size_t> row_of;
        struct Entry {
            std::size_t row, col;
            Rational value;
        };
        std::vector<Entry> entries;
        const std::size_t n = monos_.size();
        for (std::size_t h = 0; h < support.base.size(); ++h) {
            const LinearForm& alpha = support.base.form(h);
            const auto& a = alpha.coefficients();
            TransverseExpansion ex(alpha, support.mult[h]);
            for (std::size_t t = 0; t < n; ++t) {
                LowOrderPart part;
                ex.add(monos_[t], 1, part);
                for (const auto& [key, coef] : part) {
                    if (sgn(coef) == 0) continue;
                    auto [it, inserted] = row_of.try_emplace({h, key}, row_of.size());
                    for (std::size_t i = 0; i < dim_; ++i) {
                        if (a[i] == 0) continue;
                        entries.push_back({it->second, i * n + t, coef * Rational(a[i])});
                    }
                }
            }
        }
        Matrix m(row_of.size(), width());
        for (auto& e : entries) m(e.row, e.col) += e.value;
        return m;
    }

private:
    std::size_t dim_;
    int degree_;
    std::vector<Exponent> monos_;
    std::map<Exponent, std::size_t> index_;
};

Matrix kernel(const Multiarrangement& support, const GradedPiece& piece) {
    return nullspace(piece.constraints(support));
}

void enumerate_exponents(std::size_t parts, int total, int min_part, Exponents& current,
                         const std::function<bool(const Exponents&)>& visit, bool& stop) {
    if (stop) return;
    if (parts == 0) {
        if (total == 0 && visit(current)) stop = true;
        return;
    }
    for (int e = min_part; e * static_cast<int>(parts) <= total; ++e) {
        current.push_back(e);
        enumerate_exponents(parts - 1, total - e, e, current, visit, stop);
        current.pop_back();
        if (stop) return;
    }
}

/// Graded dimension of a free rank-`dim` module with the given exponents.
std::size_t free_graded_dim(const Exponents& exps, std::size_t dim, int degree) {
    Integer total = 0;
    for (int e : exps) total += binomial(degree - e + static_cast<long>(dim) - 1, static_cast<long>(dim) - 1);
    return total.get_ui();
}

bool some_exponents_match(const std::vector<std::size_t>& dims, std::size_t dim, int total) {
    Exponents current;
    bool found = false;
    enumerate_exponents(dim, total, 0, current,
                        [&](const Exponents& e) {
                            for (std::size_t d = 0; d < dims.size(); ++d) {
                                if (free_graded_dim(e, dim, static_cast<int>(d)) != dims[d]) return false;
                            }
                            return true;
                        },
                        found);
    return found;
}

MultiPoly polynomial_determinant(const std::vector<std::vector<MultiPoly>>& m, std::size_t vars) {
    const std::size_t n = m.size();
    std::map<std::uint64_t, MultiPoly> memo;
    // Expansion along columns; `used` marks rows already consumed.
    std::function<MultiPoly(std::size_t, std::uint64_t)> minor = [&](std::size_t col, std::uint64_t used) {
        if (col == n) return MultiPoly::constant(vars, 1);
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        MultiPoly acc(vars);
        int sign = 1;
        for (std::size_t r = 0; r < n; ++r) {
            if (used & (std::uint64_t{1} << r)) continue;
            if (!m[r][col].is_zero()) {
                MultiPoly term = m[r][col] * minor(col + 1, used | (std::uint64_t{1} << r));
                if (sign > 0) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            sign = -sign;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return minor(0, 0);
}

std::int64_t product(const Exponents& e) {
    std::int64_t p = 1;
    for (int x : e) p *= x;
    return p;
}

}  // namespace

PolyVectorField::PolyVectorField(std::vector<MultiPoly> components, int degree)
    : components_(std::move(components)), degree_(degree) {
    const std::size_t dim = components_.size();
    bool seen = false;
    for (std::size_t i = 0; i < dim; ++i) {
        auto& c = components_[i];
        if (c.vars() != dim && !(c.is_zero() && c.vars() == 0)) {
            throw Error(ErrorCode::DimensionMismatch, "vector field component " + std::to_string(i) + " has " +
                                                          std::to_string(c.vars()) + " variables, expected " +
                                                          std::to_string(dim));
        }
        if (c.vars() == 0) c = MultiPoly(dim);
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) {
            throw Error(ErrorCode::DimensionMismatch, "vector field component " + std::to_string(i) +
                                                          " is not homogeneous");
        }
        if (!seen) {
            degree_ = c.degree();
            seen = true;
        } else if (c.degree() != degree_) {
            throw Error(ErrorCode::DimensionMismatch, "vector field components have different degrees");
        }
    }
}

PolyVectorField PolyVectorField::euler(std::size_t dim) {
    std::vector<MultiPoly> comps;
    for (std::size_t i = 0; i < dim; ++i) comps.push_back(MultiPoly::variable(dim, i));
    return PolyVectorField(std::move(comps), 1);
}

bool PolyVectorField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

MultiPoly PolyVectorField::apply(const LinearForm& alpha) const {
    if (alpha.dim() != dim()) {
        throw Error(ErrorCode::DimensionMismatch, "form in " + std::to_string(alpha.dim()) +
                                                      " variables applied to vector field in " +
                                                      std::to_string(dim()));
    }
    MultiPoly out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        const auto& a = alpha.coefficients()[i];
        if (a != 0) out += components_[i] * Rational(a);
    }
    return out;
}

std::string PolyVectorField::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += ", ";
        out += components_[i].to_string();
    }
    return out + "]";
}

MultiPoly defining_polynomial(const Multiarrangement& m) {
    MultiPoly q = MultiPoly::constant(m.dim(), 1);
    for (std::size_t h = 0; h < m.base.size(); ++h) {
        if (m.mult[h] == 0) continue;
        q = q * MultiPoly::linear(m.base.form(h).as_rationals()).pow(m.mult[h]);
    }
    return q;
}

bool derivation_membership(const PolyVectorField& theta, const Multiarrangement& m) {
    if (theta.dim() != m.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "vector field in " + std::to_string(theta.dim()) +
                                                      " variables, multiarrangement in " + std::to_string(m.dim()));
    }
    for (std::size_t h = 0; h < m.base.size(); ++h) {
        if (m.mult[h] == 0) continue;
        if (!divisible_by_power(theta.apply(m.base.form(h)), m.base.form(h), m.mult[h])) return false;
    }
    return true;
}

std::vector<PolyVectorField> derivation_space_basis(const Multiarrangement& m, int degree) {
    if (degree < 0) return {};
    const Multiarrangement s = m.support();
    GradedPiece piece(m.dim(), degree);
    const Matrix k = kernel(s, piece);
    std::vector<PolyVectorField> out;
    out.reserve(k.rows());
    for (std::size_t r = 0; r < k.rows(); ++r) out.push_back(piece.field(k.row(r)));
    return out;
}

std::size_t derivation_space_dim(const Multiarrangement& m, int degree) {
    if (degree < 0) return 0;
    GradedPiece piece(m.dim(), degree);
    return kernel(m.support(), piece).rows();
}

MultiPoly coefficient_determinant(std::span<const PolyVectorField> basis) {
    const std::size_t n = basis.size();
    if (n > 63) throw Error(ErrorCode::DimensionMismatch, "determinant too large");
    std::vector<std::vector<MultiPoly>> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (basis[i].dim() != n) {
            throw Error(ErrorCode::DimensionMismatch, "need " + std::to_string(basis[i].dim()) +
                                                          " vector fields, got " + std::to_string(n));
        }
        m[i] = basis[i].components();
    }
    return polynomial_determinant(m, n);
}

bool saito_check(std::span<const PolyVectorField> basis, const Multiarrangement& m) {
    if (basis.size() != m.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "Saito criterion needs " + std::to_string(m.dim()) +
                                                      " vector fields, got " + std::to_string(basis.size()));
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!derivation_membership(basis[i], m)) {
            throw Error(ErrorCode::NotADerivation, "basis element " + std::to_string(i) + " " +
                                                       basis[i].to_string() + " is not in D(A, m)");
        }
    }
    int degree_sum = 0;
    for (const auto& b : basis) {
        if (b.is_zero()) return false;
        degree_sum += b.degree();
    }
    if (degree_sum != m.total()) return false;
    const MultiPoly det = coefficient_determinant(basis);
    const MultiPoly q = defining_polynomial(m);
    if (det.is_zero()) return false;
    const Rational c = det.leading_coefficient() / q.leading_coefficient();
    return det == q * c;
}

std::string_view to_string(FreenessStatus s) noexcept {
    switch (s) {
        case FreenessStatus::Free: return "Free";
        case FreenessStatus::NotFree: return "NotFree";
        case FreenessStatus::Unknown: return "Unknown";
    }
    return "Unknown";
}

FreenessVerdict find_free_basis(const Multiarrangement& m, int degree_bound) {
    const Multiarrangement s = m.support();
    const std::size_t dim = m.dim();
    const int total = s.total();
    FreenessVerdict v;
    v.bound = std::max(degree_bound, 0);
    v.method = "saito";
    if (dim == 0) {
        v.status = FreenessStatus::Free;
        return v;
    }

    std::vector<PolyVectorField> gens;
    std::vector<std::size_t> dims;
    int degree_sum = 0;
    for (int d = 0; d <= v.bound; ++d) {
        GradedPiece piece(dim, d);
        const Matrix k = kernel(s, piece);
        dims.push_back(k.rows());

        Echelon generated = row_echelon(Matrix(0, piece.width()));
        for (const auto& g : gens) {
            for (const auto& mono : monomials_of_degree(dim, d - g.degree())) {
                std::vector<MultiPoly> comps;
                const MultiPoly x = MultiPoly::monomial(mono);
                for (const auto& c : g.components()) comps.push_back(c * x);
                generated.insert(piece.vector(PolyVectorField(std::move(comps), d)));
            }
        }
        for (std::size_t r = 0; r < k.rows(); ++r) {
            if (generated.insert(k.row(r))) {
                gens.push_back(piece.field(k.row(r)));
                degree_sum += d;
            }
        }

        if (gens.size() > dim) {
            v.status = FreenessStatus::NotFree;
            v.witness = std::to_string(gens.size()) + " minimal generators up to degree " + std::to_string(d) +
                        " exceed the rank " + std::to_string(dim);
            return v;
        }
        if (!some_exponents_match(dims, dim, total)) {
            v.status = FreenessStatus::NotFree;
            v.witness = "graded dimensions up to degree " + std::to_string(d) +
                        " match no exponent vector summing to " + std::to_string(total);
            return v;
        }
        if (gens.size() == dim) {
            if (saito_check(gens, s)) {
                v.status = FreenessStatus::Free;
                for (const auto& g : gens) v.exponents.push_back(g.degree());
                v.basis = std::move(gens);
            } else {
                v.status = FreenessStatus::NotFree;
                v.witness = "the " + std::to_string(dim) + " minimal generators fail the Saito criterion";
            }
            return v;
        }
        const auto missing = static_cast<int>(dim - gens.size());
        if (degree_sum + missing * (d + 1) > total) {
            v.status = FreenessStatus::NotFree;
            v.witness = "generator degrees through " + std::to_string(d) + " force exponent sum above |m| = " +
                        std::to_string(total);
            return v;
        }
    }
    v.status = FreenessStatus::Unknown;
    return v;
}

FreeBasis rank2_exponents(const Multiarrangement& m) {
    const Multiarrangement s = m.support();
    if (s.total() == 0) throw Error(ErrorCode::EmptyMultiarrangement, "|m| = 0");
    if (s.dim() != 2 || s.base.rank() != 2) {
        throw Error(ErrorCode::WrongRank, "expected an essential rank-2 multiarrangement in 2 variables");
    }
    FreenessVerdict v = find_free_basis(s, s.total());
    if (!v.is_free() || v.exponents.size() != 2 || v.exponents[0] + v.exponents[1] != s.total()) {
        throw Error(ErrorCode::InternalInconsistency, "rank-2 multiarrangement not resolved as free");
    }
    return {std::move(v.exponents), std::move(v.basis)};
}

IntPolynomial multi_char_poly_free(const Exponents& e) {
    IntPolynomial p{1};
    for (int x : e) p = p * IntPolynomial{-static_cast<std::int64_t>(x), 1};
    return p;
}

std::string_view to_string(SigmaMethod m) noexcept {
    switch (m) {
        case SigmaMethod::UpToRank2: return "rank<=2";
        case SigmaMethod::FreeFactorization: return "free-factorization";
        case SigmaMethod::LocalToGlobal: return "local-to-global";
    }
    return "local-to-global";
}

SigmaDecomposition sigma_decomposition(const Multiarrangement& m, int degree_bound, std::size_t max_codim) {
    const Multiarrangement s = m.support();
    SigmaDecomposition out;
    out.lattice = intersection_lattice(s.base);
    out.per_flat.assign(out.lattice.size(), std::nullopt);
    const std::size_t top = std::min(s.dim(), max_codim);
    for (std::size_t k = 0; k <= top; ++k) {
        SigmaStatus status;
        status.method = SigmaMethod::UpToRank2;
        if (k > 2) {
            const bool center_only = out.lattice.level_size(k) == 1 && k == out.lattice.rank();
            status.method = center_only ? SigmaMethod::FreeFactorization : SigmaMethod::LocalToGlobal;
        }
        std::optional<std::int64_t> sum = 0;
        const auto [begin, end] = out.lattice.level(k);
        for (std::size_t x = begin; x < end; ++x) {
            std::optional<std::int64_t> local;
            if (k == 0) {
                local = 1;
            } else {
                const Multiarrangement loc = localize_and_essentialize(s, out.lattice.flat(x));
                if (k == 1) {
                    local = loc.mult.at(0);
                } else if (k == 2) {
                    local = product(rank2_exponents(loc).exponents);
                } else {
                    const FreenessVerdict v = find_free_basis(loc, degree_bound);
                    if (v.is_free()) local = product(v.exponents);
                }
            }
            out.per_flat[x] = local;
            if (sum && local) {
                *sum += *local;
            } else {
                sum.reset();
            }
        }
        status.value = sum;
        out.sigma.push_back(status);
    }
    return out;
}

std::vector<SigmaStatus> sigma_coefficients(const Multiarrangement& m, int degree_bound) {
    return sigma_decomposition(m, degree_bound).sigma;
}

}  // namespace hyparr
