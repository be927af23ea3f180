#include "hyparr/arrangement.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "hyparr/error.hpp"
#include "hyparr/matrix.hpp"

namespace hyparr {

namespace {

constexpr auto npos = std::numeric_limits<std::size_t>::max();

std::string format_linear(const std::vector<Integer>& coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const auto& c = coeffs[i];
        if (c == 0) continue;
        const Integer mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "x" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

std::size_t first_nonzero(const std::vector<Integer>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) return i;
    }
    return npos;
}

/// Rewrites `h` in coordinates adapted to `alpha`: entries for x_k (k != j) in
/// increasing order, then the coefficient of alpha itself.
RationalVector adapted(const LinearForm& alpha, const LinearForm& h) {
    const auto& a = alpha.coefficients();
    const auto& c = h.coefficients();
    const std::size_t j = first_nonzero(a);
    const Rational ratio(c[j], a[j]);
    RationalVector out;
    out.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k == j) continue;
        Rational v = Rational(c[k]) - ratio * a[k];
        v.canonicalize();
        out.push_back(std::move(v));
    }
    out.push_back(ratio);
    return out;
}

void check_index(const CentralArrangement& a, std::size_t h0) {
    if (h0 >= a.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "hyperplane index " + std::to_string(h0) +
                                                    " out of range for arrangement of size " +
                                                    std::to_string(a.size()));
    }
}

}  // namespace

LinearForm LinearForm::from_rationals(const RationalVector& coefficients) {
    auto v = primitive_integer_vector(coefficients);
    if (v.empty()) throw Error(ErrorCode::ZeroForm, "zero vector does not define a hyperplane");
    LinearForm f;
    f.coeffs_ = std::move(v);
    return f;
}

LinearForm LinearForm::from_integers(const std::vector<Integer>& coefficients) {
    return from_rationals(to_rationals(coefficients));
}

std::string LinearForm::to_string() const {
    return format_linear(coeffs_);
}

std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
    if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

CentralArrangement::CentralArrangement(std::size_t dim, std::vector<LinearForm> forms,
                                       std::vector<std::string> labels)
    : dim_(dim), forms_(std::move(forms)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != forms_.size()) {
        throw Error(ErrorCode::DimensionMismatch, std::to_string(labels_.size()) + " labels for " +
                                                      std::to_string(forms_.size()) + " hyperplanes");
    }
    std::map<LinearForm, std::size_t> seen;
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        if (forms_[i].dim() != dim_) {
            throw Error(ErrorCode::DimensionMismatch, "hyperplane " + std::to_string(i) + " has " +
                                                          std::to_string(forms_[i].dim()) +
                                                          " coefficients, expected " + std::to_string(dim_));
        }
        auto [it, inserted] = seen.emplace(forms_[i], i);
        if (!inserted) {
            throw Error(ErrorCode::DuplicateHyperplane, "hyperplanes " + std::to_string(it->second) + " and " +
                                                            std::to_string(i) + " coincide (" +
                                                            forms_[i].to_string() + ")");
        }
    }
}

std::string CentralArrangement::label(std::size_t i) const {
    if (!labels_.empty()) return labels_.at(i);
    return form(i).to_string();
}

std::size_t CentralArrangement::rank() const {
    Matrix m(0, dim_);
    for (const auto& f : forms_) m.append_row(f.as_rationals());
    return hyparr::rank(m);
}

AffineHyperplane AffineHyperplane::from_rationals(const RationalVector& normal, const Rational& offset) {
    RationalVector all = normal;
    all.push_back(offset);
    auto v = primitive_integer_vector(all, normal.size());
    if (v.empty() || std::all_of(v.begin(), v.end() - 1, [](const Integer& z) { return z == 0; })) {
        throw Error(ErrorCode::ZeroForm, "affine hyperplane with zero normal");
    }
    AffineHyperplane h;
    h.offset = v.back();
    v.pop_back();
    h.normal = std::move(v);
    return h;
}

std::string AffineHyperplane::to_string() const {
    return format_linear(normal) + " = " + offset.get_str();
}

AffineArrangement::AffineArrangement(std::size_t dim, std::vector<AffineHyperplane> hyperplanes,
                                     std::vector<std::string> labels)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)), labels_(std::move(labels)) {
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
        if (hyperplanes_[i].normal.size() != dim_) {
            throw Error(ErrorCode::DimensionMismatch, "affine hyperplane " + std::to_string(i) +
                                                          " has wrong dimension");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (hyperplanes_[k] == hyperplanes_[i]) {
                throw Error(ErrorCode::DuplicateHyperplane, "affine hyperplanes " + std::to_string(k) + " and " +
                                                                std::to_string(i) + " coincide");
            }
        }
    }
}

std::string AffineArrangement::label(std::size_t i) const {
    if (!labels_.empty()) return labels_.at(i);
    return hyperplane(i).to_string();
}

Multiarrangement::Multiarrangement(CentralArrangement b, std::vector<int> m) : base(std::move(b)), mult(std::move(m)) {
    if (mult.size() != base.size()) {
        throw Error(ErrorCode::DimensionMismatch, std::to_string(mult.size()) + " multiplicities for " +
                                                      std::to_string(base.size()) + " hyperplanes");
    }
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] < 0) {
            throw Error(ErrorCode::DimensionMismatch, "negative multiplicity at hyperplane " + std::to_string(i));
        }
    }
}

Multiarrangement Multiarrangement::simple(CentralArrangement b) {
    std::vector<int> m(b.size(), 1);
    return {std::move(b), std::move(m)};
}

int Multiarrangement::total() const {
    return std::accumulate(mult.begin(), mult.end(), 0);
}

bool Multiarrangement::is_simple() const {
    return std::all_of(mult.begin(), mult.end(), [](int m) { return m == 1; });
}

Multiarrangement Multiarrangement::support() const {
    std::vector<LinearForm> forms;
    std::vector<std::string> labels;
    std::vector<int> m;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] == 0) continue;
        forms.push_back(base.form(i));
        if (!base.labels().empty()) labels.push_back(base.label(i));
        m.push_back(mult[i]);
    }
    return {CentralArrangement(base.dim(), std::move(forms), std::move(labels)), std::move(m)};
}

CentralArrangement canonicalize(const std::vector<RationalVector>& raw, std::size_t dim,
                                std::vector<std::string> labels) {
    std::vector<LinearForm> forms;
    forms.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].size() != dim) {
            throw Error(ErrorCode::DimensionMismatch, "hyperplane " + std::to_string(i) + " has " +
                                                          std::to_string(raw[i].size()) +
                                                          " coefficients, expected " + std::to_string(dim));
        }
        try {
            forms.push_back(LinearForm::from_rationals(raw[i]));
        } catch (const Error& e) {
            throw Error(e.code(), "hyperplane " + std::to_string(i) + " is the zero vector");
        }
    }
    return CentralArrangement(dim, std::move(forms), std::move(labels));
}

AffineArrangement decone(const CentralArrangement& a, std::size_t h0) {
    check_index(a, h0);
    const LinearForm& alpha = a.form(h0);
    std::vector<AffineHyperplane> hyperplanes;
    std::vector<std::string> labels;
    std::vector<std::size_t> source;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == h0) continue;
        RationalVector v = adapted(alpha, a.form(i));
        const Rational constant = v.back();
        v.pop_back();
        // beta . y + constant * 1 = 0
        hyperplanes.push_back(AffineHyperplane::from_rationals(v, -constant));
        if (!a.labels().empty()) labels.push_back(a.label(i));
        source.push_back(i);
    }
    AffineArrangement out(a.dim() - 1, std::move(hyperplanes), std::move(labels));
    out.source = std::move(source);
    return out;
}

std::vector<std::size_t> ziegler_fibers(const CentralArrangement& a, std::size_t h0) {
    check_index(a, h0);
    if (a.dim() < 2) {
        throw Error(ErrorCode::DimensionMismatch, "Ziegler restriction needs dim >= 2");
    }
    const LinearForm& alpha = a.form(h0);
    std::vector<std::size_t> fibers(a.size(), npos);
    std::map<LinearForm, std::size_t> index;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == h0) continue;
        RationalVector v = adapted(alpha, a.form(i));
        v.pop_back();
        auto form = LinearForm::from_rationals(v);
        auto [it, inserted] = index.emplace(std::move(form), index.size());
        fibers[i] = it->second;
    }
    return fibers;
}

Multiarrangement ziegler_restriction(const CentralArrangement& a, std::size_t h0) {
    const auto fibers = ziegler_fibers(a, h0);
    const LinearForm& alpha = a.form(h0);
    std::vector<LinearForm> forms;
    std::vector<std::vector<std::string>> names;
    std::vector<int> mult;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (fibers[i] == npos) continue;
        if (fibers[i] == forms.size()) {
            RationalVector v = adapted(alpha, a.form(i));
            v.pop_back();
            forms.push_back(LinearForm::from_rationals(v));
            names.emplace_back();
            mult.push_back(0);
        }
        ++mult[fibers[i]];
        names[fibers[i]].push_back(a.label(i));
    }
    std::vector<std::string> labels;
    if (!a.labels().empty()) {
        for (const auto& group : names) {
            std::string joined;
            for (const auto& n : group) joined += (joined.empty() ? "" : ",") + n;
            labels.push_back(std::move(joined));
        }
    }
    return {CentralArrangement(a.dim() - 1, std::move(forms), std::move(labels)), std::move(mult)};
}

}  // namespace hyparr
