#pragma once

#include <string>
#include <vector>

namespace a1 {

using Deg = long long;

// Splitting type of a vector bundle on the projective line: the multiset of
// line-bundle degrees, stored sorted ascending. Rank is at least 1.
class SplitBundle {
public:
    explicit SplitBundle(std::vector<Deg> degrees);
    SplitBundle(std::initializer_list<Deg> degrees);

    const std::vector<Deg>& degrees() const { return degrees_; }
    long long rank() const { return static_cast<long long>(degrees_.size()); }

    bool operator==(const SplitBundle&) const = default;
    auto operator<=>(const SplitBundle&) const = default;

private:
    std::vector<Deg> degrees_;
};

SplitBundle direct_sum(const SplitBundle& a, const SplitBundle& b);
SplitBundle tensor(const SplitBundle& a, const SplitBundle& b);
SplitBundle dual(const SplitBundle& e);
SplitBundle twist(const SplitBundle& e, Deg m);
Deg det(const SplitBundle& e);
long long h0(const SplitBundle& e);
long long h1(const SplitBundle& e);

// dim Ext^1(quotient, sub) = h^1(sub tensor dual(quotient)).
long long ext1_dim(const SplitBundle& quotient, const SplitBundle& sub);

bool globally_generated(const SplitBundle& e);

// Least m >= 0 such that both e(m) and the determinant line bundle twisted
// by m are globally generated: max(0, -min degree, -det).
Deg min_gg_twist(const SplitBundle& e);

std::string to_string(const SplitBundle& e);

} // namespace a1
