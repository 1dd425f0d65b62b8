#include "a1/transition.hpp"

#include "a1/rational_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace a1 {

std::vector<ExtBasisIndex> ext_basis(const SplitBundle& quotient, const SplitBundle& sub) {
    std::vector<ExtBasisIndex> out;
    const auto& e = sub.degrees();
    const auto& f = quotient.degrees();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
            for (long long k = -1; k >= e[i] - f[j] + 1; --k)
                out.push_back({i, j, k});
    return out;
}

ExtClass::ExtClass(SplitBundle sub, SplitBundle quotient, std::vector<Rat> coefficients)
    : sub_(std::move(sub)), quotient_(std::move(quotient)), coeffs_(std::move(coefficients)) {
    const long long want = ext1_dim(quotient_, sub_);
    if (static_cast<long long>(coeffs_.size()) != want)
        throw std::invalid_argument("extension class needs " + std::to_string(want) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
}

ExtClass ExtClass::zero(SplitBundle sub, SplitBundle quotient) {
    std::vector<Rat> c(static_cast<std::size_t>(ext1_dim(quotient, sub)));
    return ExtClass(std::move(sub), std::move(quotient), std::move(c));
}

bool ExtClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

ExtClass ExtClass::scaled(const Rat& lambda) const {
    std::vector<Rat> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * lambda;
    return ExtClass(sub_, quotient_, std::move(c));
}

LaurentMatrix build_extension(const ExtClass& c) {
    const auto& e = c.sub().degrees();
    const auto& f = c.quotient().degrees();
    const long long rs = c.sub().rank();
    const long long n = rs + c.quotient().rank();
    std::vector<LaurentPoly> entries(static_cast<std::size_t>(n * n));
    auto at = [&](long long i, long long j) -> LaurentPoly& {
        return entries[static_cast<std::size_t>(i * n + j)];
    };
    for (std::size_t i = 0; i < e.size(); ++i)
        at(static_cast<long long>(i), static_cast<long long>(i)) = LaurentPoly::monomial(1, e[i]);
    for (std::size_t j = 0; j < f.size(); ++j)
        at(rs + static_cast<long long>(j), rs + static_cast<long long>(j)) =
            LaurentPoly::monomial(1, f[j]);
    const auto basis = ext_basis(c.quotient(), c.sub());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const Rat& coeff = c.coefficients()[b];
        if (coeff == 0) continue;
        const auto& ix = basis[b];
        at(static_cast<long long>(ix.sub_pos), rs + static_cast<long long>(ix.quot_pos))
            .add_term(f[ix.quot_pos] + ix.exponent, coeff);
    }
    return LaurentMatrix(n, std::move(entries));
}

LaurentMatrix family(const ExtClass& c, const Rat& lambda) {
    return build_extension(c.scaled(lambda));
}

LaurentMatrix twist_matrix(const LaurentMatrix& m_mat, long long m) {
    const long long n = m_mat.size();
    std::vector<LaurentPoly> entries;
    entries.reserve(static_cast<std::size_t>(n * n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) entries.push_back(m_mat.at(i, j).shifted(m));
    return LaurentMatrix(n, std::move(entries));
}

long long section_dim(const LaurentMatrix& m_mat, long long m) {
    const long long n = m_mat.size();
    const long long k = m_mat.det_exponent();
    const long long lo = m_mat.min_entry_exp();
    // A section vector v over k[u], u = 1/t, satisfying M v in t^-m k[t]^n
    // has u-degree at most m + k - (n-1)*lo: v = t^-m M^-1 w with w
    // polynomial, and the adjugate entries of M have exponent >= (n-1)*lo.
    const long long big_l = std::max<long long>(0, m + k - (n - 1) * lo);
    const long long jlo = lo - big_l;
    const long long jhi = -m - 1;
    const long long unknowns = n * (big_l + 1);
    if (jlo > jhi) return unknowns;
    const long long nrows = n * (jhi - jlo + 1);
    RatMatrix a(static_cast<std::size_t>(nrows), static_cast<std::size_t>(unknowns));
    std::size_t row = 0;
    for (long long r = 0; r < n; ++r)
        for (long long j = jlo; j <= jhi; ++j, ++row)
            for (long long c = 0; c < n; ++c) {
                const LaurentPoly& p = m_mat.at(r, c);
                if (p.is_zero()) continue;
                for (long long l = 0; l <= big_l; ++l) {
                    // coefficient of t^j in p * u^l
                    Rat v = p.coeff(j + l);
                    if (v != 0) a.at(row, static_cast<std::size_t>(c * (big_l + 1) + l)) = v;
                }
            }
    return unknowns - static_cast<long long>(rank_destructive(a));
}

std::pair<long long, long long> splitting_degree_window(const LaurentMatrix& m_mat) {
    const long long n = m_mat.size();
    const long long k = m_mat.det_exponent();
    const long long hi = m_mat.max_entry_exp();
    return {k - (n - 1) * hi, hi};
}

SplitBundle splitting_type(const LaurentMatrix& m_mat) {
    const long long n = m_mat.size();
    const long long k = m_mat.det_exponent();
    const auto [dlo, dhi] = splitting_degree_window(m_mat);
    std::vector<Deg> degrees;
    degrees.reserve(static_cast<std::size_t>(n));
    long long total = 0;
    long long prev1 = 0; // s(m-1); zero below the window since every
    long long prev2 = 0; // degree is at most the max entry exponent
    for (long long m = -dhi; total < n; ++m) {
        if (m > -dlo + 1)
            throw std::logic_error("splitting sweep left the degree window");
        const long long s = section_dim(m_mat, m);
        const long long mult = s - 2 * prev1 + prev2;
        if (mult < 0 || total + mult > n)
            throw std::logic_error("section counts are not concave-consistent");
        degrees.insert(degrees.end(), static_cast<std::size_t>(mult), -m);
        total += mult;
        prev2 = prev1;
        prev1 = s;
    }
    long long sum = 0;
    for (Deg d : degrees) sum += d;
    if (sum != k) throw std::logic_error("splitting type does not match the determinant");
    return SplitBundle(std::move(degrees));
}

} // namespace a1
