#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace a1 {

// Element of a finitely generated abelian group Z^r + Z/m1 + ... + Z/mk.
// Free coordinates first, then one coordinate per torsion factor, each
// stored reduced into [0, mi).
struct PicElement {
    std::vector<mpz_class> free;
    std::vector<mpz_class> torsion;

    bool operator==(const PicElement&) const = default;
};

// A Picard group presented by its invariant factors: free rank r and
// torsion orders m1 | m2 | ... | mk with every mi >= 2. The shape is
// fixed at construction; elements are plain coordinate vectors validated
// against it. No normal-form computation happens after construction.
class PicGroup {
public:
    PicGroup(long long free_rank, std::vector<mpz_class> torsion_orders);

    long long free_rank() const { return free_rank_; }
    const std::vector<mpz_class>& torsion_orders() const { return torsion_orders_; }

    PicElement identity() const;
    // Builds an element from raw coordinates (free then torsion), reducing
    // torsion coordinates mod mi. Throws std::invalid_argument on shape mismatch.
    PicElement element(const std::vector<mpz_class>& coords) const;

    PicElement add(const PicElement& a, const PicElement& b) const;
    PicElement negate(const PicElement& a) const;
    PicElement sub(const PicElement& a, const PicElement& b) const;
    PicElement scale(const mpz_class& k, const PicElement& a) const;

    // Decides whether e = k*x has a solution x for k >= 1 and returns one.
    // Free coordinates need exact divisibility; a torsion coordinate is
    // solvable iff gcd(k, mi) divides it. The returned witness uses the
    // smallest nonnegative solution in each coordinate.
    std::optional<PicElement> divisible_by(const PicElement& e, const mpz_class& k) const;

    bool operator==(const PicGroup&) const = default;

    // Descriptor text: "Z^r x Z/m1 x ... x Z/mk" (see README for the grammar).
    static PicGroup parse(const std::string& descriptor);
    std::string descriptor() const;

    // Element literal: comma-separated integers in declared component order.
    PicElement parse_element(const std::string& literal) const;
    std::string element_literal(const PicElement& e) const;

private:
    void check_shape(const PicElement& a) const;

    long long free_rank_;
    std::vector<mpz_class> torsion_orders_;
};

} // namespace a1
