#pragma once

#include "a1/pic_group.hpp"
#include "a1/split_bundle.hpp"
#include "a1/transition.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace a1 {

// Asserts a direct concordance between an extension of `quotient` by
// sub = O(-m) and the split sum sub + quotient, through the line of
// extension classes. Symbolic generic class unless ext_class is set.
struct ExtensionMove {
    SplitBundle sub;
    SplitBundle quotient;
    long long m = 0;
    std::optional<ExtClass> ext_class;

    bool operator==(const ExtensionMove&) const = default;
};

// Exchanges the summand pair O(-m) + L(m) against O + L inside the
// ambient sum; every other summand rides along.
struct TwistBridgeMove {
    long long m = 0;
    Deg line = 0; // degree of L

    bool operator==(const TwistBridgeMove&) const = default;
};

// Replaces `from` by `to` under a fixed common summand; sound whenever
// from and to have equal rank and equal determinant.
struct CongruenceMove {
    std::vector<Deg> common; // may be empty; kept sorted ascending
    SplitBundle from;
    SplitBundle to;

    bool operator==(const CongruenceMove&) const = default;
};

using Move = std::variant<ExtensionMove, TwistBridgeMove, CongruenceMove>;

struct ConcordanceCertificate {
    SplitBundle from;
    SplitBundle to;
    std::vector<Move> moves;

    bool operator==(const ConcordanceCertificate&) const = default;
};

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;     // empty when ok
    std::size_t move_index = 0; // offending move; moves.size() for endpoint failure

    explicit operator bool() const { return ok; }
};

// rank-1 zeros replaced: (rank - 1) copies of O plus the determinant.
SplitBundle canonical_form(const SplitBundle& e);

// Complete invariant: equal rank and equal determinant.
bool concordant(const SplitBundle& e, const SplitBundle& f);

// Splitting type of the quotient of e by a generic nowhere-vanishing
// section. pre: e globally generated, rank >= 2.
SplitBundle generic_section_quotient(const SplitBundle& e);

// Certificate from e to canonical_form(e): split off O(-m) with the
// minimal twist m, normalize the rank-(n-1) quotient recursively under a
// congruence, then bridge O(-m) + L(m) back to O + L.
ConcordanceCertificate generate_certificate(const SplitBundle& e);

// Replays the chain: every move must preserve rank and determinant, every
// extension move must be legal for the current bundle, explicit classes
// must reproduce the claimed fibers, and the final bundle must equal the
// `to` endpoint. Reports the first violation.
VerifyResult verify_certificate(const ConcordanceCertificate& c);

// JSON round trip, format tag "a1cert/1".
std::string certificate_to_json(const ConcordanceCertificate& c);
ConcordanceCertificate certificate_from_json(const std::string& text);

// Concordance class of a bundle: rank plus determinant class. The
// determinant is an integer degree on the projective line and a Picard
// group element on an abstract curve.
struct BundleClass {
    long long rank = 1;
    std::variant<Deg, PicElement> determinant;

    bool operator==(const BundleClass&) const = default;
};

BundleClass bundle_class(const SplitBundle& e);
BundleClass bundle_class(long long rank, PicElement determinant);
bool concordant(const BundleClass& a, const BundleClass& b);

} // namespace a1
