#include "a1/split_bundle.hpp"

#include <algorithm>
#include <stdexcept>

namespace a1 {

SplitBundle::SplitBundle(std::vector<Deg> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw std::invalid_argument("splitting type must have rank >= 1");
    std::sort(degrees_.begin(), degrees_.end());
}

SplitBundle::SplitBundle(std::initializer_list<Deg> degrees)
    : SplitBundle(std::vector<Deg>(degrees)) {}

SplitBundle direct_sum(const SplitBundle& a, const SplitBundle& b) {
    std::vector<Deg> d = a.degrees();
    d.insert(d.end(), b.degrees().begin(), b.degrees().end());
    return SplitBundle(std::move(d));
}

SplitBundle tensor(const SplitBundle& a, const SplitBundle& b) {
    std::vector<Deg> d;
    d.reserve(a.degrees().size() * b.degrees().size());
    for (Deg x : a.degrees())
        for (Deg y : b.degrees()) d.push_back(x + y);
    return SplitBundle(std::move(d));
}

SplitBundle dual(const SplitBundle& e) {
    std::vector<Deg> d;
    d.reserve(e.degrees().size());
    for (Deg x : e.degrees()) d.push_back(-x);
    return SplitBundle(std::move(d));
}

SplitBundle twist(const SplitBundle& e, Deg m) {
    std::vector<Deg> d;
    d.reserve(e.degrees().size());
    for (Deg x : e.degrees()) d.push_back(x + m);
    return SplitBundle(std::move(d));
}

Deg det(const SplitBundle& e) {
    Deg s = 0;
    for (Deg x : e.degrees()) s += x;
    return s;
}

long long h0(const SplitBundle& e) {
    long long s = 0;
    for (Deg x : e.degrees())
        if (x >= 0) s += x + 1;
    return s;
}

long long h1(const SplitBundle& e) {
    long long s = 0;
    for (Deg x : e.degrees())
        if (x <= -2) s += -x - 1;
    return s;
}

long long ext1_dim(const SplitBundle& quotient, const SplitBundle& sub) {
    return h1(tensor(sub, dual(quotient)));
}

bool globally_generated(const SplitBundle& e) {
    return e.degrees().front() >= 0;
}

Deg min_gg_twist(const SplitBundle& e) {
    return std::max<Deg>(0, std::max(-e.degrees().front(), -det(e)));
}

std::string to_string(const SplitBundle& e) {
    std::string out;
    for (Deg x : e.degrees()) {
        if (!out.empty()) out += "+";
        out += (x == 0) ? "O" : "O(" + std::to_string(x) + ")";
    }
    return out;
}

} // namespace a1
