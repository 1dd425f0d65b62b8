#include "a1/pic_group.hpp"

#include "a1/parse_error.hpp"

#include <cctype>
#include <stdexcept>

namespace a1 {

namespace {

// Euclidean remainder in [0, m).
mpz_class mod_reduce(const mpz_class& v, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

PicGroup::PicGroup(long long free_rank, std::vector<mpz_class> torsion_orders)
    : free_rank_(free_rank), torsion_orders_(std::move(torsion_orders)) {
    if (free_rank_ < 0) throw std::invalid_argument("free rank must be nonnegative");
    for (std::size_t i = 0; i < torsion_orders_.size(); ++i) {
        if (torsion_orders_[i] < 2)
            throw std::invalid_argument("torsion orders must be at least 2");
        if (i > 0 && torsion_orders_[i] % torsion_orders_[i - 1] != 0)
            throw std::invalid_argument("torsion orders must be in divisibility order");
    }
}

PicElement PicGroup::identity() const {
    PicElement e;
    e.free.assign(static_cast<std::size_t>(free_rank_), mpz_class(0));
    e.torsion.assign(torsion_orders_.size(), mpz_class(0));
    return e;
}

PicElement PicGroup::element(const std::vector<mpz_class>& coords) const {
    if (coords.size() != static_cast<std::size_t>(free_rank_) + torsion_orders_.size())
        throw std::invalid_argument("coordinate count does not match group shape");
    PicElement e;
    e.free.assign(coords.begin(), coords.begin() + free_rank_);
    for (std::size_t i = 0; i < torsion_orders_.size(); ++i)
        e.torsion.push_back(mod_reduce(coords[static_cast<std::size_t>(free_rank_) + i], torsion_orders_[i]));
    return e;
}

void PicGroup::check_shape(const PicElement& a) const {
    if (a.free.size() != static_cast<std::size_t>(free_rank_) ||
        a.torsion.size() != torsion_orders_.size())
        throw std::invalid_argument("element does not belong to this group (shape mismatch)");
}

PicElement PicGroup::add(const PicElement& a, const PicElement& b) const {
    check_shape(a);
    check_shape(b);
    PicElement r;
    r.free.reserve(a.free.size());
    for (std::size_t i = 0; i < a.free.size(); ++i) r.free.push_back(a.free[i] + b.free[i]);
    r.torsion.reserve(a.torsion.size());
    for (std::size_t i = 0; i < a.torsion.size(); ++i)
        r.torsion.push_back(mod_reduce(a.torsion[i] + b.torsion[i], torsion_orders_[i]));
    return r;
}

PicElement PicGroup::negate(const PicElement& a) const {
    check_shape(a);
    PicElement r;
    for (const auto& v : a.free) r.free.push_back(-v);
    for (std::size_t i = 0; i < a.torsion.size(); ++i)
        r.torsion.push_back(mod_reduce(-a.torsion[i], torsion_orders_[i]));
    return r;
}

PicElement PicGroup::sub(const PicElement& a, const PicElement& b) const {
    return add(a, negate(b));
}

PicElement PicGroup::scale(const mpz_class& k, const PicElement& a) const {
    check_shape(a);
    PicElement r;
    for (const auto& v : a.free) r.free.push_back(k * v);
    for (std::size_t i = 0; i < a.torsion.size(); ++i)
        r.torsion.push_back(mod_reduce(k * a.torsion[i], torsion_orders_[i]));
    return r;
}

std::optional<PicElement> PicGroup::divisible_by(const PicElement& e, const mpz_class& k) const {
    check_shape(e);
    if (k < 1) throw std::invalid_argument("divisible_by requires k >= 1");
    PicElement x;
    for (const auto& v : e.free) {
        if (v % k != 0) return std::nullopt;
        x.free.push_back(v / k);
    }
    for (std::size_t i = 0; i < e.torsion.size(); ++i) {
        const mpz_class& m = torsion_orders_[i];
        // k*x = e (mod m) is solvable iff gcd(k, m) | e; the solutions form a
        // coset of (m/g)Z, so the smallest nonnegative one lies in [0, m/g).
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
        if (e.torsion[i] % g != 0) return std::nullopt;
        mpz_class mg = m / g;
        mpz_class kg = mod_reduce(k / g, mg);
        mpz_class sol;
        if (mg == 1) {
            sol = 0;
        } else {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), kg.get_mpz_t(), mg.get_mpz_t()) == 0)
                throw std::logic_error("k/g must be invertible mod m/g");
            sol = mod_reduce((e.torsion[i] / g) * inv, mg);
        }
        x.torsion.push_back(sol);
    }
    return x;
}

PicGroup PicGroup::parse(const std::string& descriptor) {
    // Components separated by 'x'; each is Z, Z^r, or Z/m. Free components
    // must precede torsion ones so the descriptor matches the stored shape.
    std::size_t pos = 0;
    long long free_rank = 0;
    std::vector<mpz_class> torsion;
    bool seen_torsion = false;
    bool expect_component = true;
    auto skip_ws = [&] { while (pos < descriptor.size() && std::isspace(static_cast<unsigned char>(descriptor[pos]))) ++pos; };
    auto read_uint = [&]() -> mpz_class {
        std::size_t start = pos;
        while (pos < descriptor.size() && std::isdigit(static_cast<unsigned char>(descriptor[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", start);
        return mpz_class(descriptor.substr(start, pos - start));
    };
    while (true) {
        skip_ws();
        if (pos >= descriptor.size()) {
            if (expect_component) throw ParseError("expected group component", pos);
            break;
        }
        if (!expect_component) {
            if (descriptor[pos] != 'x') throw ParseError("expected 'x' between components", pos);
            ++pos;
            expect_component = true;
            continue;
        }
        if (descriptor[pos] != 'Z') throw ParseError("expected 'Z'", pos);
        ++pos;
        if (pos < descriptor.size() && descriptor[pos] == '^') {
            ++pos;
            mpz_class r = read_uint();
            if (!r.fits_slong_p()) throw ParseError("free rank too large", pos);
            if (seen_torsion) throw ParseError("free components must precede torsion components", pos);
            free_rank += r.get_si();
        } else if (pos < descriptor.size() && descriptor[pos] == '/') {
            ++pos;
            std::size_t at = pos;
            mpz_class m = read_uint();
            if (m < 2) throw ParseError("torsion order must be at least 2", at);
            if (!torsion.empty() && m % torsion.back() != 0)
                throw ParseError("torsion orders must be in divisibility order", at);
            torsion.push_back(m);
            seen_torsion = true;
        } else {
            if (seen_torsion) throw ParseError("free components must precede torsion components", pos);
            free_rank += 1;
        }
        expect_component = false;
    }
    return PicGroup(free_rank, std::move(torsion));
}

std::string PicGroup::descriptor() const {
    std::string out;
    if (free_rank_ == 1) out = "Z";
    else if (free_rank_ > 1 || torsion_orders_.empty()) out = "Z^" + std::to_string(free_rank_);
    for (const auto& m : torsion_orders_) {
        if (!out.empty()) out += " x ";
        out += "Z/" + m.get_str();
    }
    return out;
}

PicElement PicGroup::parse_element(const std::string& literal) const {
    std::vector<mpz_class> coords;
    std::size_t pos = 0;
    const std::size_t want = static_cast<std::size_t>(free_rank_) + torsion_orders_.size();
    auto skip_ws = [&] { while (pos < literal.size() && std::isspace(static_cast<unsigned char>(literal[pos]))) ++pos; };
    skip_ws();
    if (want == 0) {
        if (pos != literal.size()) throw ParseError("trivial group takes an empty literal", pos);
        return identity();
    }
    while (true) {
        skip_ws();
        std::size_t start = pos;
        if (pos < literal.size() && (literal[pos] == '-' || literal[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < literal.size() && std::isdigit(static_cast<unsigned char>(literal[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer coordinate", start);
        coords.emplace_back(literal.substr(start, pos - start));
        skip_ws();
        if (pos >= literal.size()) break;
        if (literal[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    if (coords.size() != want)
        throw ParseError("expected " + std::to_string(want) + " coordinates, got " + std::to_string(coords.size()), pos);
    return element(coords);
}

std::string PicGroup::element_literal(const PicElement& e) const {
    check_shape(e);
    std::string out;
    auto append = [&](const mpz_class& v) {
        if (!out.empty()) out += ",";
        out += v.get_str();
    };
    for (const auto& v : e.free) append(v);
    for (const auto& v : e.torsion) append(v);
    return out;
}

} // namespace a1
