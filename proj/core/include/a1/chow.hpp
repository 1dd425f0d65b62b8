#pragma once

#include "a1/pic_group.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace a1 {

// Chow ring of a projective bundle P(O^n + O(a)) over the projective
// line: Z[x, z]/(x^2, z^{n+1} + a*x*z^n) with additive basis
// {x^i z^j : i <= 1, j <= n}.
class ProjBundleRing {
public:
    ProjBundleRing(long long fiber_dim, mpz_class det_class);

    long long fiber_dim() const { return n_; }
    const mpz_class& det_class() const { return a_; }

    bool operator==(const ProjBundleRing&) const = default;

    // Descriptor text like "PB(n=2, a=1)".
    static ProjBundleRing parse(const std::string& text);
    std::string descriptor() const;

private:
    long long n_;
    mpz_class a_;
};

// Exponent pair (i, j) for the word x^i z^j.
using ChowMono = std::pair<long long, long long>;

// Integer combination of words in the two degree-1 generators, prior to
// reduction against a ring's relations.
class RingElement {
public:
    RingElement() = default;
    static RingElement monomial(mpz_class c, long long i, long long j);
    static RingElement generator_x() { return monomial(1, 1, 0); }
    static RingElement generator_z() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<ChowMono, mpz_class>& terms() const { return terms_; }

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const; // free product
    RingElement scaled(const mpz_class& c) const;
    RingElement pow(long long k) const;

    bool operator==(const RingElement&) const = default;

    std::string to_string() const;

    void add_term(ChowMono mono, const mpz_class& c);

private:
    std::map<ChowMono, mpz_class> terms_;
};

// Normal form on the basis {x^i z^j : i <= 1, j <= n}: x^2 -> 0,
// z^{n+1} -> -a*x*z^n, x*z^{n+1} -> 0, z^{n+2} -> 0.
RingElement reduce(const RingElement& e, const ProjBundleRing& ring);

// Product followed by reduction.
RingElement ring_mul(const RingElement& a, const RingElement& b, const ProjBundleRing& ring);

// Degree-1 generator images of a graded map: phi(x) = x_to_x*x + x_to_z*z,
// phi(z) = z_to_x*x + z_to_z*z.
struct GradedIsoWitness {
    mpz_class x_to_x;
    mpz_class x_to_z;
    mpz_class z_to_x;
    mpz_class z_to_z;

    bool operator==(const GradedIsoWitness&) const = default;
};

// Full isomorphism check: unimodular degree-1 matrix, both relations map
// into the opposite ideal, in both directions.
bool witness_valid(const ProjBundleRing& r1, const ProjBundleRing& r2, const GradedIsoWitness& w);

// "x -> -x, z -> x + z" style display form.
std::string to_string(const GradedIsoWitness& w);

// Weak-equivalence decision for P(O^n + O(a)) vs P(O^n + O(b)) over the
// projective line: (n+1) divides a - b.
bool weak_equivalent_p1(long long n, const mpz_class& a, const mpz_class& b);

// Abstract-curve analogue: an (n+1)-th root of L1 - L2 in the Picard
// group, when one exists.
std::optional<PicElement> weak_equivalent_curve(const PicGroup& g, const PicElement& l1,
                                                const PicElement& l2, long long n);

// Searches phi(x) = alpha*x, phi(z) = gamma*x + delta*z with alpha,
// delta in {+-1} and gamma the exact solution of
// delta*b = (n+1)*gamma + a*alpha; the witness is re-verified before it
// is returned.
std::optional<GradedIsoWitness> find_graded_iso(const ProjBundleRing& r1, const ProjBundleRing& r2);

// Exhaustive search over degree-1 matrices with entries in [-bound, bound],
// filtered by unimodularity and witness_valid.
std::vector<GradedIsoWitness> enumerate_graded_isos(const ProjBundleRing& r1,
                                                    const ProjBundleRing& r2, long long bound);

// One entry of the rigidity report.
struct RigidityCheck {
    std::string check;
    bool pass = false;
    std::vector<std::string> witnesses;
};

struct RigidityReport {
    std::vector<RigidityCheck> checks;

    bool all_pass() const;
};

// Three counting and rigidity checks: (i) no twist of {-1,0,1} is
// trivial; (ii) the only integer Chern pair with c1 in {0,1} and
// c1^2 = 4*c2 is (0,0); (iii) PB(n=2, a=0) has exactly four graded
// self-isomorphisms at bound 3, all sign-diagonal.
RigidityReport rigidity_report();

std::string rigidity_report_to_json(const RigidityReport& report);

} // namespace a1
