#pragma once

#include "a1/laurent.hpp"
#include "a1/split_bundle.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace a1 {

// One coefficient slot of an extension class: sub summand, quotient
// summand, and the exponent of the Cech H^1 monomial it multiplies.
struct ExtBasisIndex {
    std::size_t sub_pos;
    std::size_t quot_pos;
    long long exponent;

    bool operator==(const ExtBasisIndex&) const = default;
};

// Coefficient slots for Ext^1(quotient, sub), in the canonical order:
// (sub, quotient) summand pairs lexicographic over the ascending degree
// lists, exponents descending from -1 within each pair.
std::vector<ExtBasisIndex> ext_basis(const SplitBundle& quotient, const SplitBundle& sub);

// Extension class in Ext^1(quotient, sub); coefficients are listed
// against ext_basis(quotient, sub).
class ExtClass {
public:
    ExtClass(SplitBundle sub, SplitBundle quotient, std::vector<Rat> coefficients);
    static ExtClass zero(SplitBundle sub, SplitBundle quotient);

    const SplitBundle& sub() const { return sub_; }
    const SplitBundle& quotient() const { return quotient_; }
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    ExtClass scaled(const Rat& lambda) const;

    bool operator==(const ExtClass&) const = default;

private:
    SplitBundle sub_;
    SplitBundle quotient_;
    std::vector<Rat> coeffs_;
};

// Cocycle of the extension 0 -> sub -> E -> quotient -> 0 with class c:
// block upper triangular, sub block first, both blocks diagonal.
LaurentMatrix build_extension(const ExtClass& c);

// Cocycle for the class lambda*c. lambda = 0 gives the split bundle
// sub + quotient; lambda != 0 all give isomorphic total spaces.
LaurentMatrix family(const ExtClass& c, const Rat& lambda);

// Cocycle of E(m): every entry multiplied by t^m.
LaurentMatrix twist_matrix(const LaurentMatrix& m_mat, long long m);

// h^0(E(m)) for the bundle E with cocycle M, by counting polynomial
// section vectors directly against the cocycle condition.
long long section_dim(const LaurentMatrix& m_mat, long long m);

// Inclusive window [lo, hi] that contains every degree of the splitting
// type of E(M), read off the entry exponents and the determinant.
std::pair<long long, long long> splitting_degree_window(const LaurentMatrix& m_mat);

// Splitting type of the bundle with cocycle M: recovered from the second
// differences of m -> h^0(E(m)).
SplitBundle splitting_type(const LaurentMatrix& m_mat);

} // namespace a1
