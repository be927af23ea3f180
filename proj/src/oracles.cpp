#include "hyparr/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hyparr/error.hpp"
#include "hyparr/matrix.hpp"

namespace hyparr::oracles {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::int64_t power_or_cap(std::int64_t q, std::size_t e) {
    std::int64_t p = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (p > max_points / q + 1) return max_points + 1;
        p *= q;
    }
    return p;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::int64_t mod(const Integer& z, std::int64_t q) {
    Integer r = z % q;
    if (r < 0) r += q;
    return r.get_si();
}

// Rows (normal..., offset) scaled so the first nonzero normal entry is 1.
using Row = RationalVector;

Row normalized(Row r, std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i) {
        if (sgn(r[i]) != 0) {
            const Rational lead = r[i];
            for (auto& q : r) q /= lead;
            break;
        }
    }
    return r;
}

class RegionCounter {
public:
    std::int64_t count(std::vector<Row> rows, std::size_t dim) {
        if (rows.empty()) return 1;
        std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
        auto key = std::make_pair(dim, rows);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const Row h = rows.back();
        rows.pop_back();
        const std::int64_t deleted = count(rows, dim);
        const std::int64_t restricted = count(restrict_to(rows, h, dim), dim - 1);
        const std::int64_t r = deleted + restricted;
        memo_.emplace(std::move(key), r);
        return r;
    }

private:
    static std::vector<Row> restrict_to(const std::vector<Row>& rows, const Row& h, std::size_t dim) {
        std::size_t j = 0;
        while (sgn(h[j]) == 0) ++j;
        std::set<Row> out;
        for (const auto& k : rows) {
            const Rational ratio = k[j] / h[j];
            Row r;
            r.reserve(dim);
            bool zero_normal = true;
            for (std::size_t i = 0; i < dim; ++i) {
                if (i == j) continue;
                Rational v = k[i] - ratio * h[i];
                if (sgn(v) != 0) zero_normal = false;
                r.push_back(std::move(v));
            }
            r.push_back(k[dim] - ratio * h[dim]);
            // Parallel to h (empty trace) or containing h (no trace); both drop out.
            if (zero_normal) continue;
            out.insert(normalized(std::move(r), dim - 1));
        }
        return {out.begin(), out.end()};
    }

    std::map<std::pair<std::size_t, std::vector<Row>>, std::int64_t> memo_;
};

std::int64_t moebius_on_rows(const std::vector<Row>& rows, std::size_t dim, bool affine, const Flat& x) {
    const std::size_t width = rows.empty() ? dim + (affine ? 1 : 0) : rows.front().size();
    const std::size_t n = rows.size();
    if (n > 24) throw Error(ErrorCode::InstanceTooLarge, "subset enumeration over more than 24 hyperplanes");

    std::map<Matrix, Echelon> flats;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Matrix m(0, width);
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) m.append_row(rows[i]);
        }
        Echelon e = row_echelon(std::move(m));
        if (affine && !e.pivots.empty() && e.pivots.back() == dim) continue;
        flats.try_emplace(e.reduced, e);
    }
    if (!flats.contains(x.equations)) {
        throw Error(ErrorCode::FlatNotInLattice, "flat is not an intersection of hyperplanes");
    }

    // Y contains Z as a subspace iff every equation of Y follows from those of Z.
    auto contains = [](const Echelon& y, const Echelon& z) {
        for (std::size_t r = 0; r < y.reduced.rows(); ++r) {
            if (!z.contains(y.reduced.row(r))) return false;
        }
        return true;
    };

    std::map<Matrix, std::int64_t> memo;
    std::function<std::int64_t(const Echelon&)> mu = [&](const Echelon& z) -> std::int64_t {
        if (z.rank() == 0) return 1;
        if (auto it = memo.find(z.reduced); it != memo.end()) return it->second;
        std::int64_t s = 0;
        for (const auto& [key, y] : flats) {
            if (y.reduced == z.reduced) continue;
            if (contains(y, z)) s += mu(y);
        }
        memo.emplace(z.reduced, -s);
        return -s;
    };
    return mu(flats.at(x.equations));
}

}  // namespace

Integer bad_prime_bound(const CentralArrangement& a) {
    Integer best = 0;
    const std::size_t n = a.size();
    const std::size_t l = a.dim();
    for (std::size_t k = 1; k <= std::min(n, l); ++k) {
        for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
            for_each_subset(l, k, [&](const std::vector<std::size_t>& cols) {
                Matrix m(k, k);
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) m(i, j) = a.form(rows[i]).coefficients()[cols[j]];
                }
                const Rational d = abs(determinant(std::move(m)));
                if (d > best) best = d.get_num();
            });
        });
    }
    return best;
}

std::vector<std::int64_t> guarded_primes(const CentralArrangement& a, std::size_t count) {
    const Integer bound = bad_prime_bound(a);
    std::vector<std::int64_t> out;
    std::int64_t q = bound.fits_slong_p() ? std::max<std::int64_t>(bound.get_si() + 1, 2) : max_points;
    while (out.size() < count) {
        if (power_or_cap(q, a.dim()) > max_points) {
            throw Error(ErrorCode::InstanceTooLarge, "guarded primes need more than " + std::to_string(max_points) +
                                                         " points in dimension " + std::to_string(a.dim()));
        }
        if (is_prime(q)) out.push_back(q);
        ++q;
    }
    return out;
}

std::int64_t complement_point_count(const CentralArrangement& a, std::int64_t q) {
    const std::size_t l = a.dim();
    if (power_or_cap(q, l) > max_points) {
        throw Error(ErrorCode::InstanceTooLarge, "F_" + std::to_string(q) + "^" + std::to_string(l) +
                                                     " exceeds the point budget");
    }
    std::vector<std::vector<std::int64_t>> forms;
    for (const auto& f : a.forms()) {
        std::vector<std::int64_t> r;
        for (const auto& c : f.coefficients()) r.push_back(mod(c, q));
        forms.push_back(std::move(r));
    }
    std::vector<std::int64_t> point(l, 0);
    std::int64_t count = 0;
    while (true) {
        bool off = true;
        for (const auto& f : forms) {
            std::int64_t v = 0;
            for (std::size_t i = 0; i < l; ++i) v += f[i] * point[i];
            if (v % q == 0) {
                off = false;
                break;
            }
        }
        if (off) ++count;
        std::size_t i = 0;
        while (i < l && ++point[i] == q) point[i++] = 0;
        if (i == l) break;
    }
    return count;
}

FiniteFieldResult finite_field_char_poly(const CentralArrangement& a, std::span<const std::int64_t> primes) {
    const std::size_t l = a.dim();
    if (primes.size() < l + 1) {
        throw Error(ErrorCode::BadPrime, "need at least " + std::to_string(l + 1) + " primes, got " +
                                             std::to_string(primes.size()));
    }
    const Integer bound = bad_prime_bound(a);
    FiniteFieldResult out;
    std::set<std::int64_t> seen;
    for (auto q : primes) {
        if (!is_prime(q) || Integer(q) <= bound || !seen.insert(q).second) {
            throw Error(ErrorCode::BadPrime, std::to_string(q) + " is not a distinct prime above the minor bound " +
                                                 bound.get_str());
        }
        out.witnesses.push_back({q, complement_point_count(a, q), true});
    }

    // Vandermonde solve through the first l+1 samples.
    Matrix v(l + 1, l + 2);
    for (std::size_t r = 0; r <= l; ++r) {
        Rational p = 1;
        for (std::size_t c = 0; c <= l; ++c) {
            v(r, c) = p;
            p *= out.witnesses[r].prime;
        }
        v(r, l + 1) = out.witnesses[r].point_count;
    }
    const Echelon e = row_echelon(std::move(v));
    std::vector<std::int64_t> coeffs(l + 1);
    for (std::size_t c = 0; c <= l; ++c) {
        const Rational& q = e.reduced(c, l + 1);
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
            throw Error(ErrorCode::InconsistentCounts, "interpolated coefficient " + q.get_str() + " is not an integer");
        }
        coeffs[c] = q.get_num().get_si();
    }
    out.poly = IntPolynomial(std::move(coeffs));
    for (const auto& w : out.witnesses) {
        if (out.poly.evaluate(w.prime) != w.point_count) {
            throw Error(ErrorCode::InconsistentCounts, "count " + std::to_string(w.point_count) + " over F_" +
                                                           std::to_string(w.prime) + " does not fit " +
                                                           out.poly.to_string());
        }
    }
    return out;
}

FiniteFieldResult finite_field_char_poly(const CentralArrangement& a) {
    const auto primes = guarded_primes(a, a.dim() + 2);
    return finite_field_char_poly(a, primes);
}

std::int64_t region_count_recursion(const CentralArrangement& a) {
    std::vector<Row> rows;
    for (const auto& r : hyperplane_rows(a)) {
        Row x = r;
        x.emplace_back(0);
        rows.push_back(normalized(std::move(x), a.dim()));
    }
    return RegionCounter{}.count(std::move(rows), a.dim());
}

std::int64_t region_count_recursion(const AffineArrangement& a) {
    std::vector<Row> rows;
    for (const auto& r : hyperplane_rows(a)) rows.push_back(normalized(r, a.dim()));
    return RegionCounter{}.count(std::move(rows), a.dim());
}

std::int64_t moebius_bruteforce(const CentralArrangement& a, const Flat& x) {
    return moebius_on_rows(hyperplane_rows(a), a.dim(), false, x);
}

std::int64_t moebius_bruteforce(const AffineArrangement& a, const Flat& x) {
    return moebius_on_rows(hyperplane_rows(a), a.dim(), true, x);
}

}  // namespace hyparr::oracles
