#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace a1 {

using Rat = mpq_class;

// Laurent polynomial over Q with exact rational coefficients. Zero
// coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(const Rat& c, long long exp);

    bool is_zero() const { return coeffs_.empty(); }
    // Nonzero monomial c*t^k?
    bool is_monomial() const { return coeffs_.size() == 1; }
    long long min_exp() const; // pre: nonzero
    long long max_exp() const; // pre: nonzero
    Rat coeff(long long exp) const;
    const std::map<long long, Rat>& terms() const { return coeffs_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Rat& c) const;
    // Multiplies by t^m.
    LaurentPoly shifted(long long m) const;

    bool operator==(const LaurentPoly&) const = default;

    // Entry syntax like "3/2 t^-1 + 1 - 2 t^3"; see README for the grammar.
    static LaurentPoly parse(const std::string& text);
    std::string to_string() const;

    void add_term(long long exp, const Rat& c);

private:
    std::map<long long, Rat> coeffs_;
};

// Square matrix of Laurent polynomials whose determinant is a nonzero
// monomial c*t^k, so it defines a cocycle on the two-chart cover of the
// projective line. The determinant condition is checked at construction.
class LaurentMatrix {
public:
    LaurentMatrix(long long n, std::vector<LaurentPoly> entries);
    static LaurentMatrix diagonal(const std::vector<long long>& degrees);

    long long size() const { return n_; }
    const LaurentPoly& at(long long i, long long j) const;

    LaurentMatrix operator*(const LaurentMatrix& o) const;

    // Exponent of the monomial determinant; its coefficient.
    long long det_exponent() const { return det_exp_; }
    const Rat& det_coeff() const { return det_coeff_; }

    // Extremes over the nonzero entries.
    long long max_entry_exp() const;
    long long min_entry_exp() const;

    bool operator==(const LaurentMatrix&) const = default;

    // Text format: rows separated by ';', entries by ','.
    static LaurentMatrix parse(const std::string& text);
    std::string to_string() const;

private:
    long long n_ = 0;
    std::vector<LaurentPoly> entries_; // row-major
    long long det_exp_ = 0;
    Rat det_coeff_;
};

// Determinant by cofactor expansion with memoization on column subsets.
LaurentPoly laurent_det(const std::vector<LaurentPoly>& entries, long long n);

} // namespace a1
