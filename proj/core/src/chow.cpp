#include "a1/chow.hpp"

#include "a1/parse_error.hpp"
#include "a1/split_bundle.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

namespace a1 {

ProjBundleRing::ProjBundleRing(long long fiber_dim, mpz_class det_class)
    : n_(fiber_dim), a_(std::move(det_class)) {
    if (n_ < 1) throw std::invalid_argument("fiber dimension must be >= 1");
}

namespace {

void skip_spaces(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

void expect(const std::string& s, std::size_t& pos, const std::string& token) {
    skip_spaces(s, pos);
    if (s.compare(pos, token.size(), token) != 0)
        throw ParseError("expected '" + token + "'", pos);
    pos += token.size();
}

mpz_class read_integer(const std::string& s, std::size_t& pos) {
    skip_spaces(s, pos);
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected integer", start);
    return mpz_class(s.substr(start, pos - start));
}

} // namespace

ProjBundleRing ProjBundleRing::parse(const std::string& text) {
    std::size_t pos = 0;
    expect(text, pos, "PB");
    expect(text, pos, "(");
    expect(text, pos, "n");
    expect(text, pos, "=");
    mpz_class n = read_integer(text, pos);
    expect(text, pos, ",");
    expect(text, pos, "a");
    expect(text, pos, "=");
    mpz_class a = read_integer(text, pos);
    expect(text, pos, ")");
    skip_spaces(text, pos);
    if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
    if (n < 1 || !n.fits_slong_p()) throw ParseError("fiber dimension must be a positive integer", 0);
    return ProjBundleRing(n.get_si(), std::move(a));
}

std::string ProjBundleRing::descriptor() const {
    return "PB(n=" + std::to_string(n_) + ", a=" + a_.get_str() + ")";
}

RingElement RingElement::monomial(mpz_class c, long long i, long long j) {
    if (i < 0 || j < 0) throw std::invalid_argument("generator exponents must be nonnegative");
    RingElement e;
    e.add_term({i, j}, c);
    return e;
}

void RingElement::add_term(ChowMono mono, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RingElement RingElement::operator+(const RingElement& o) const {
    RingElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
    RingElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

RingElement RingElement::operator*(const RingElement& o) const {
    RingElement r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term({m1.first + m2.first, m1.second + m2.second}, c1 * c2);
    return r;
}

RingElement RingElement::scaled(const mpz_class& c) const {
    RingElement r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

RingElement RingElement::pow(long long k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    RingElement r = monomial(1, 0, 0);
    for (long long i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    // Ascending total degree, x-words before z-words within a degree.
    std::vector<std::pair<ChowMono, mpz_class>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
        const long long dl = l.first.first + l.first.second;
        const long long dr = r.first.first + r.first.second;
        if (dl != dr) return dl < dr;
        return l.first.first > r.first.first;
    });
    std::string out;
    for (const auto& [m, c] : ordered) {
        mpz_class mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string word;
        if (m.first >= 1) word += (m.first == 1) ? "x" : "x^" + std::to_string(m.first);
        if (m.second >= 1) {
            if (!word.empty()) word += " ";
            word += (m.second == 1) ? "z" : "z^" + std::to_string(m.second);
        }
        if (word.empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + " ";
            out += word;
        }
    }
    return out;
}

RingElement reduce(const RingElement& e, const ProjBundleRing& ring) {
    const long long n = ring.fiber_dim();
    RingElement r;
    for (const auto& [m, c] : e.terms()) {
        const auto [i, j] = m;
        if (i >= 2) continue;            // x^2 = 0
        if (j >= n + 2) continue;        // z^{n+2} = a^2 x^2 z^n = 0
        if (j == n + 1) {
            if (i >= 1) continue;        // x z^{n+1} = -a x^2 z^n = 0
            r.add_term({1, n}, -ring.det_class() * c);
        } else {
            r.add_term({i, j}, c);
        }
    }
    return r;
}

RingElement ring_mul(const RingElement& a, const RingElement& b, const ProjBundleRing& ring) {
    return reduce(a * b, ring);
}

bool weak_equivalent_p1(long long n, const mpz_class& a, const mpz_class& b) {
    if (n < 1) throw std::invalid_argument("fiber dimension must be >= 1");
    mpz_class diff = a - b;
    return mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(n + 1)) != 0;
}

std::optional<PicElement> weak_equivalent_curve(const PicGroup& g, const PicElement& l1,
                                                const PicElement& l2, long long n) {
    if (n < 1) throw std::invalid_argument("fiber dimension must be >= 1");
    return g.divisible_by(g.sub(l1, l2), mpz_class(static_cast<long>(n) + 1));
}

namespace {

RingElement linear(const mpz_class& cx, const mpz_class& cz) {
    RingElement e;
    e.add_term({1, 0}, cx);
    e.add_term({0, 1}, cz);
    return e;
}

// Image of the defining relation z^{n+1} + a x z^n under the linear map.
RingElement relation_image(const RingElement& phi_x, const RingElement& phi_z, long long n,
                           const mpz_class& a) {
    return phi_z.pow(n + 1) + (phi_x * phi_z.pow(n)).scaled(a);
}

} // namespace

bool witness_valid(const ProjBundleRing& r1, const ProjBundleRing& r2, const GradedIsoWitness& w) {
    if (r1.fiber_dim() != r2.fiber_dim()) return false;
    const long long n = r1.fiber_dim();
    const mpz_class det = w.x_to_x * w.z_to_z - w.x_to_z * w.z_to_x;
    if (det != 1 && det != -1) return false;
    const RingElement phi_x = linear(w.x_to_x, w.x_to_z);
    const RingElement phi_z = linear(w.z_to_x, w.z_to_z);
    if (!reduce(phi_x * phi_x, r2).is_zero()) return false;
    if (!reduce(relation_image(phi_x, phi_z, n, r1.det_class()), r2).is_zero()) return false;
    // Inverse matrix is the adjugate over a unit determinant.
    const RingElement psi_x = linear(det * w.z_to_z, det * -w.x_to_z);
    const RingElement psi_z = linear(det * -w.z_to_x, det * w.x_to_x);
    if (!reduce(psi_x * psi_x, r1).is_zero()) return false;
    if (!reduce(relation_image(psi_x, psi_z, n, r2.det_class()), r1).is_zero()) return false;
    return true;
}

std::optional<GradedIsoWitness> find_graded_iso(const ProjBundleRing& r1, const ProjBundleRing& r2) {
    if (r1.fiber_dim() != r2.fiber_dim())
        throw std::invalid_argument("graded iso search needs equal fiber dimensions");
    const long long n = r1.fiber_dim();
    const mpz_class& a = r1.det_class();
    const mpz_class& b = r2.det_class();
    constexpr int signs[4][2] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
    for (const auto& [alpha, delta] : signs) {
        mpz_class num = delta * b - a * alpha;
        if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(n + 1))) continue;
        GradedIsoWitness w{alpha, 0, num / mpz_class(static_cast<long>(n) + 1), delta};
        if (!witness_valid(r1, r2, w))
            throw std::logic_error("graded iso candidate failed re-verification");
        return w;
    }
    return std::nullopt;
}

std::vector<GradedIsoWitness> enumerate_graded_isos(const ProjBundleRing& r1,
                                                    const ProjBundleRing& r2, long long bound) {
    if (bound < 0) throw std::invalid_argument("coefficient bound must be >= 0");
    std::vector<GradedIsoWitness> out;
    if (r1.fiber_dim() != r2.fiber_dim()) return out;
    for (long long p = -bound; p <= bound; ++p)
        for (long long q = -bound; q <= bound; ++q)
            for (long long r = -bound; r <= bound; ++r)
                for (long long s = -bound; s <= bound; ++s) {
                    const long long det = p * s - q * r;
                    if (det != 1 && det != -1) continue;
                    GradedIsoWitness w{static_cast<long>(p), static_cast<long>(q),
                                       static_cast<long>(r), static_cast<long>(s)};
                    if (witness_valid(r1, r2, w)) out.push_back(std::move(w));
                }
    return out;
}

bool RigidityReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

std::string to_string(const GradedIsoWitness& w) {
    return "x -> " + linear(w.x_to_x, w.x_to_z).to_string() +
           ", z -> " + linear(w.z_to_x, w.z_to_z).to_string();
}

namespace {

RigidityCheck check_no_trivializing_twist() {
    RigidityCheck c{"no-trivializing-twist", true, {}};
    // {a-1, a, a+1} can only be {0,0,0} when the middle entry vanishes,
    // so a = 0 is the single candidate; scan a window around it anyway.
    const SplitBundle probe{-1, 0, 1};
    const SplitBundle trivial{0, 0, 0};
    for (Deg a = -20; a <= 20; ++a)
        if (tensor(probe, SplitBundle{a}) == trivial) c.pass = false;
    c.witnesses.push_back("middle summand forces a = 0");
    c.witnesses.push_back("twist by 0 leaves {-1,0,1}, which differs from {0,0,0}");
    return c;
}

RigidityCheck check_chern_vanishing() {
    RigidityCheck c{"chern-vanishing", false, {}};
    // Solve c1^2 = 4*c2 over the integers with c1 restricted to {0,1}.
    std::vector<std::pair<long long, long long>> solutions;
    for (long long c1 = 0; c1 <= 1; ++c1)
        if ((c1 * c1) % 4 == 0) solutions.push_back({c1, c1 * c1 / 4});
    c.pass = solutions.size() == 1 && solutions.front() == std::pair<long long, long long>{0, 0};
    for (const auto& [c1, c2] : solutions)
        c.witnesses.push_back("c1 = " + std::to_string(c1) + ", c2 = " + std::to_string(c2));
    return c;
}

RigidityCheck check_iso_rigidity() {
    RigidityCheck c{"iso-rigidity", false, {}};
    const ProjBundleRing ring(2, 0);
    const auto isos = enumerate_graded_isos(ring, ring, 3);
    bool all_diagonal = true;
    for (const auto& w : isos) {
        if (w.x_to_z != 0 || w.z_to_x != 0 || abs(w.x_to_x) != 1 || abs(w.z_to_z) != 1)
            all_diagonal = false;
        c.witnesses.push_back(to_string(w));
    }
    c.pass = isos.size() == 4 && all_diagonal;
    return c;
}

} // namespace

RigidityReport rigidity_report() {
    return RigidityReport{{check_no_trivializing_twist(), check_chern_vanishing(), check_iso_rigidity()}};
}

std::string rigidity_report_to_json(const RigidityReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"check", c.check}, {"pass", c.pass}, {"witnesses", c.witnesses}});
    nlohmann::json j{{"checks", std::move(checks)}, {"pass", report.all_pass()}};
    return j.dump(2);
}

} // namespace a1
