#include "a1/laurent.hpp"

#include "a1/parse_error.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace a1 {

LaurentPoly LaurentPoly::monomial(const Rat& c, long long exp) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
}

void LaurentPoly::add_term(long long exp, const Rat& c) {
    if (c == 0) return;
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
        coeffs_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

long long LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long long LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

Rat LaurentPoly::coeff(long long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(long long m) const {
    LaurentPoly r;
    for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e + m, v);
    return r;
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, std::size_t base) : text_(text), base_(base) {}

    // Parses up to (not consuming) `stop1`/`stop2` or end of input.
    LaurentPoly run(char stop1, char stop2, std::size_t& pos) {
        pos_ = pos;
        LaurentPoly p;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] == stop1 || text_[pos_] == stop2) {
                if (first) throw err("expected Laurent polynomial");
                break;
            }
            int sign = 1;
            if (text_[pos_] == '+' || text_[pos_] == '-') {
                if (text_[pos_] == '-') sign = -1;
                ++pos_;
            } else if (!first) {
                throw err("expected '+' or '-'");
            }
            auto [coeff, exp] = term();
            p.add_term(exp, sign * coeff);
            first = false;
        }
        pos = pos_;
        return p;
    }

private:
    std::pair<Rat, long long> term() {
        skip_ws();
        Rat coeff(1);
        bool have_coeff = false;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            mpz_class num = read_uint();
            mpz_class den(1);
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::size_t at = pos_;
                den = read_uint();
                if (den == 0) throw ParseError("zero denominator", base_ + at);
            }
            coeff = Rat(num, den);
            coeff.canonicalize();
            have_coeff = true;
        }
        skip_ws();
        long long exp = 0;
        if (pos_ < text_.size() && text_[pos_] == 't') {
            ++pos_;
            exp = 1;
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                exp = read_int();
            }
        } else if (!have_coeff) {
            throw err("expected coefficient or 't'");
        }
        return {coeff, exp};
    }

    mpz_class read_uint() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw err("expected integer");
        return mpz_class(text_.substr(start, pos_ - start));
    }

    long long read_int() {
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError("expected integer exponent", base_ + start);
        mpz_class v(text_.substr(start, pos_ - start));
        if (!v.fits_slong_p()) throw ParseError("exponent out of range", base_ + start);
        return v.get_si();
    }

    ParseError err(const std::string& msg) const { return ParseError(msg, base_ + pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

std::string format_rat(const Rat& c) {
    return c.get_str();
}

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    std::size_t pos = 0;
    LaurentPoly p = PolyParser(text, 0).run('\0', '\0', pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
    return p;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : coeffs_) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (e == 0) {
            out += format_rat(mag);
        } else {
            if (mag != 1) out += format_rat(mag) + " ";
            out += (e == 1) ? "t" : "t^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly laurent_det(const std::vector<LaurentPoly>& entries, long long n) {
    if (n == 0) return LaurentPoly::monomial(1, 0);
    // Expands along the first remaining row, memoized on the set of
    // remaining columns (all suffixes of rows have the same index).
    std::unordered_map<unsigned long long, LaurentPoly> memo;
    auto rec = [&](auto&& self, unsigned long long cols, long long row) -> LaurentPoly {
        if (cols == 0) return LaurentPoly::monomial(1, 0);
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        LaurentPoly acc;
        int sign = 1;
        for (long long j = 0; j < n; ++j) {
            if (!(cols & (1ull << j))) continue; // sign tracks position within the minor
            const LaurentPoly& a = entries[static_cast<std::size_t>(row * n + j)];
            if (!a.is_zero()) {
                LaurentPoly minor = self(self, cols & ~(1ull << j), row + 1);
                LaurentPoly contrib = a * minor;
                acc = (sign > 0) ? acc + contrib : acc - contrib;
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    if (n > 62) throw std::invalid_argument("matrix too large");
    return rec(rec, (n == 62) ? ~0ull >> 2 : (1ull << n) - 1, 0);
}

LaurentMatrix::LaurentMatrix(long long n, std::vector<LaurentPoly> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ < 1) throw std::invalid_argument("matrix size must be >= 1");
    if (entries_.size() != static_cast<std::size_t>(n_ * n_))
        throw std::invalid_argument("entry count does not match matrix size");
    LaurentPoly d = laurent_det(entries_, n_);
    if (!d.is_monomial())
        throw std::invalid_argument("determinant is not a nonzero monomial (not a valid cocycle)");
    det_exp_ = d.min_exp();
    det_coeff_ = d.coeff(det_exp_);
}

LaurentMatrix LaurentMatrix::diagonal(const std::vector<long long>& degrees) {
    long long n = static_cast<long long>(degrees.size());
    std::vector<LaurentPoly> e(static_cast<std::size_t>(n * n));
    for (long long i = 0; i < n; ++i)
        e[static_cast<std::size_t>(i * n + i)] = LaurentPoly::monomial(1, degrees[static_cast<std::size_t>(i)]);
    return LaurentMatrix(n, std::move(e));
}

const LaurentPoly& LaurentMatrix::at(long long i, long long j) const {
    return entries_[static_cast<std::size_t>(i * n_ + j)];
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("size mismatch in matrix product");
    std::vector<LaurentPoly> e(static_cast<std::size_t>(n_ * n_));
    for (long long i = 0; i < n_; ++i)
        for (long long k = 0; k < n_; ++k) {
            const LaurentPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (long long j = 0; j < n_; ++j) {
                const LaurentPoly& b = o.at(k, j);
                if (b.is_zero()) continue;
                e[static_cast<std::size_t>(i * n_ + j)] = e[static_cast<std::size_t>(i * n_ + j)] + a * b;
            }
        }
    return LaurentMatrix(n_, std::move(e));
}

long long LaurentMatrix::max_entry_exp() const {
    bool any = false;
    long long m = 0;
    for (const auto& p : entries_) {
        if (p.is_zero()) continue;
        m = any ? std::max(m, p.max_exp()) : p.max_exp();
        any = true;
    }
    if (!any) throw std::logic_error("zero matrix");
    return m;
}

long long LaurentMatrix::min_entry_exp() const {
    bool any = false;
    long long m = 0;
    for (const auto& p : entries_) {
        if (p.is_zero()) continue;
        m = any ? std::min(m, p.min_exp()) : p.min_exp();
        any = true;
    }
    if (!any) throw std::logic_error("zero matrix");
    return m;
}

LaurentMatrix LaurentMatrix::parse(const std::string& text) {
    std::vector<std::vector<LaurentPoly>> rows;
    std::size_t pos = 0;
    std::vector<LaurentPoly> row;
    while (true) {
        LaurentPoly p = PolyParser(text, 0).run(',', ';', pos);
        row.push_back(std::move(p));
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) {
            rows.push_back(std::move(row));
            break;
        }
        if (text[pos] == ',') {
            ++pos;
        } else if (text[pos] == ';') {
            ++pos;
            rows.push_back(std::move(row));
            row.clear();
        } else {
            throw ParseError("expected ',' or ';'", pos);
        }
    }
    const std::size_t n = rows.size();
    std::vector<LaurentPoly> entries;
    for (auto& r : rows) {
        if (r.size() != n) throw ParseError("matrix is not square", pos);
        for (auto& p : r) entries.push_back(std::move(p));
    }
    return LaurentMatrix(static_cast<long long>(n), std::move(entries));
}

std::string LaurentMatrix::to_string() const {
    std::string out;
    for (long long i = 0; i < n_; ++i) {
        if (i) out += "; ";
        for (long long j = 0; j < n_; ++j) {
            if (j) out += ", ";
            out += at(i, j).to_string();
        }
    }
    return out;
}

} // namespace a1
