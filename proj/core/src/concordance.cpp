#include "a1/concordance.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace a1 {

SplitBundle canonical_form(const SplitBundle& e) {
    std::vector<Deg> d(static_cast<std::size_t>(e.rank() - 1), 0);
    d.push_back(det(e));
    return SplitBundle(std::move(d));
}

bool concordant(const SplitBundle& e, const SplitBundle& f) {
    return e.rank() == f.rank() && det(e) == det(f);
}

SplitBundle generic_section_quotient(const SplitBundle& e) {
    if (!globally_generated(e) || e.rank() < 2)
        throw std::invalid_argument("generic section quotient needs a globally generated bundle of rank >= 2");
    const auto& c = e.degrees();
    // h^0 of the k-th twist of the dual syzygy bundle, for a section with
    // generic components: the multiplication maps between binary-form
    // spaces all have maximal rank.
    auto g = [&](long long k) -> long long {
        long long s = 0;
        for (Deg ci : c) s += std::max<long long>(0, k - ci + 1);
        return std::max<long long>(0, s - std::max<long long>(0, k + 1));
    };
    const Deg total = det(e);
    std::vector<Deg> out;
    for (long long q = 0; static_cast<long long>(out.size()) < e.rank() - 1; ++q) {
        if (q > total + 1) throw std::logic_error("generic quotient sweep left the degree range");
        const long long mult = g(q) - 2 * g(q - 1) + g(q - 2);
        if (mult < 0) throw std::logic_error("generic quotient multiplicities are inconsistent");
        out.insert(out.end(), static_cast<std::size_t>(mult), q);
    }
    SplitBundle quotient(std::move(out));
    if (det(quotient) != total) throw std::logic_error("generic quotient does not match the determinant");
    return quotient;
}

namespace {

struct ApplyOutcome {
    std::optional<SplitBundle> out;
    std::string diagnostic; // set when !out
};

ApplyOutcome fail(std::string diag) { return {std::nullopt, std::move(diag)}; }

// Removes one occurrence each of x and y; nullopt when not present.
std::optional<std::vector<Deg>> remove_pair(std::vector<Deg> degs, Deg x, Deg y) {
    auto remove_one = [](std::vector<Deg>& v, Deg val) {
        auto it = std::find(v.begin(), v.end(), val);
        if (it == v.end()) return false;
        v.erase(it);
        return true;
    };
    if (!remove_one(degs, x) || !remove_one(degs, y)) return std::nullopt;
    return degs;
}

SplitBundle sum_under(const std::vector<Deg>& common, const SplitBundle& s) {
    std::vector<Deg> d = common;
    d.insert(d.end(), s.degrees().begin(), s.degrees().end());
    return SplitBundle(std::move(d));
}

ApplyOutcome apply_extension(const SplitBundle& current, const ExtensionMove& mv) {
    const SplitBundle split = direct_sum(mv.sub, mv.quotient);
    if (current.rank() != split.rank()) return fail("rank mismatch");
    if (det(current) != det(split)) return fail("determinant mismatch");
    // The sub-line-bundle must be O(-m) and both sides must be globally
    // generated after the twist, so the section sequence exists.
    if (twist(split, mv.m).degrees().front() < 0) return fail("sub-bundle legality");
    if (mv.sub != SplitBundle{-mv.m}) return fail("sub-bundle legality");
    if (twist(current, mv.m).degrees().front() < 0) return fail("sub-bundle legality");
    if (!mv.ext_class) return {split, {}}; // generic class degenerates to the split sum
    if (mv.ext_class->sub() != mv.sub || mv.ext_class->quotient() != mv.quotient)
        return fail("extension class mismatch");
    const SplitBundle at0 = splitting_type(family(*mv.ext_class, 0));
    const SplitBundle at1 = splitting_type(family(*mv.ext_class, 1));
    if (at0 != split) return fail("fiber mismatch");
    if (current == split) return {at1, {}};
    if (current == at1) return {split, {}};
    return fail("fiber mismatch");
}

ApplyOutcome apply_bridge(const SplitBundle& current, const TwistBridgeMove& mv) {
    if (mv.m < 0 || mv.line + mv.m < 0) return fail("bridge legality");
    if (auto rest = remove_pair(current.degrees(), -mv.m, mv.line + mv.m)) {
        rest->push_back(0);
        rest->push_back(mv.line);
        return {SplitBundle(std::move(*rest)), {}};
    }
    if (auto rest = remove_pair(current.degrees(), 0, mv.line)) {
        rest->push_back(-mv.m);
        rest->push_back(mv.line + mv.m);
        return {SplitBundle(std::move(*rest)), {}};
    }
    return fail("move does not apply");
}

ApplyOutcome apply_congruence(const SplitBundle& current, const CongruenceMove& mv) {
    if (mv.from.rank() != mv.to.rank() || det(mv.from) != det(mv.to))
        return fail("congruence class mismatch");
    const SplitBundle a = sum_under(mv.common, mv.from);
    const SplitBundle b = sum_under(mv.common, mv.to);
    if (current == a) return {b, {}};
    if (current == b) return {a, {}};
    return fail("move does not apply");
}

ApplyOutcome apply_move(const SplitBundle& current, const Move& mv) {
    return std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ExtensionMove>) return apply_extension(current, m);
            else if constexpr (std::is_same_v<T, TwistBridgeMove>) return apply_bridge(current, m);
            else return apply_congruence(current, m);
        },
        mv);
}

} // namespace

VerifyResult verify_certificate(const ConcordanceCertificate& c) {
    SplitBundle current = c.from;
    for (std::size_t i = 0; i < c.moves.size(); ++i) {
        ApplyOutcome step = apply_move(current, c.moves[i]);
        if (!step.out) return {false, step.diagnostic, i};
        current = std::move(*step.out);
    }
    if (current != c.to) return {false, "endpoint mismatch", c.moves.size()};
    return {true, {}, c.moves.size()};
}

ConcordanceCertificate generate_certificate(const SplitBundle& e) {
    ConcordanceCertificate cert{e, canonical_form(e), {}};
    if (e.rank() == 1 || e == cert.to) return cert;

    const long long m = min_gg_twist(e);
    const Deg line = det(e);
    const SplitBundle sub{-m};
    const SplitBundle quotient = twist(generic_section_quotient(twist(e, m)), -m);
    const SplitBundle split = direct_sum(sub, quotient);

    std::optional<ExtClass> cls;
    if (e.rank() == 2) {
        if (e == split) {
            cls = ExtClass::zero(sub, quotient);
        } else {
            // A single Cech monomial at exponent j builds exactly the type
            // {-m - j, quotient_degree + j}; solve for the top degree of e.
            std::vector<Rat> coeffs(static_cast<std::size_t>(ext1_dim(quotient, sub)));
            const long long j = -m - e.degrees().back();
            coeffs.at(static_cast<std::size_t>(-1 - j)) = 1;
            cls = ExtClass(sub, quotient, std::move(coeffs));
        }
    }
    cert.moves.push_back(ExtensionMove{sub, quotient, m, std::move(cls)});

    // Normalize the quotient recursively; its moves act under the fixed
    // O(-m) summand, so extension steps become class-level congruences.
    const ConcordanceCertificate inner = generate_certificate(quotient);
    SplitBundle inner_cur = quotient;
    for (const Move& imv : inner.moves) {
        ApplyOutcome step = apply_move(inner_cur, imv);
        if (!step.out) throw std::logic_error("generated move failed to replay: " + step.diagnostic);
        if (std::holds_alternative<ExtensionMove>(imv)) {
            if (inner_cur != *step.out)
                cert.moves.push_back(CongruenceMove{{-m}, inner_cur, *step.out});
        } else if (const auto* cg = std::get_if<CongruenceMove>(&imv)) {
            std::vector<Deg> common = cg->common;
            common.push_back(-m);
            std::sort(common.begin(), common.end());
            cert.moves.push_back(CongruenceMove{std::move(common), cg->from, cg->to});
        } else {
            cert.moves.push_back(imv);
        }
        inner_cur = std::move(*step.out);
    }

    if (m > 0) cert.moves.push_back(TwistBridgeMove{m, line});

    VerifyResult check = verify_certificate(cert);
    if (!check.ok)
        throw std::logic_error("generated certificate failed to verify: " + check.diagnostic);
    return cert;
}

namespace {

using nlohmann::json;

json degrees_json(const SplitBundle& e) { return json(e.degrees()); }

SplitBundle bundle_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("certificate: expected a nonempty degree array");
    std::vector<Deg> d;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument("certificate: degrees must be integers");
        d.push_back(v.get<Deg>());
    }
    return SplitBundle(std::move(d));
}

std::vector<Deg> degree_list_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("certificate: expected a degree array");
    std::vector<Deg> d;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument("certificate: degrees must be integers");
        d.push_back(v.get<Deg>());
    }
    std::sort(d.begin(), d.end());
    return d;
}

Rat rat_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("certificate: bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("certificate: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

json move_to_json(const Move& mv) {
    json j;
    if (const auto* em = std::get_if<ExtensionMove>(&mv)) {
        j["kind"] = "extension";
        j["sub"] = degrees_json(em->sub);
        j["quotient"] = degrees_json(em->quotient);
        j["m"] = em->m;
        if (em->ext_class) {
            json coeffs = json::array();
            for (const Rat& c : em->ext_class->coefficients()) coeffs.push_back(c.get_str());
            j["extClass"] = json{{"coefficients", std::move(coeffs)}};
        }
    } else if (const auto* bm = std::get_if<TwistBridgeMove>(&mv)) {
        j["kind"] = "twist-bridge";
        j["m"] = bm->m;
        j["line"] = bm->line;
    } else {
        const auto& cm = std::get<CongruenceMove>(mv);
        j["kind"] = "congruence";
        j["commonSummand"] = json(cm.common);
        j["from"] = degrees_json(cm.from);
        j["to"] = degrees_json(cm.to);
    }
    return j;
}

Move move_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("certificate: move needs a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    auto integer_field = [&](const char* name) -> long long {
        if (!j.contains(name) || !j[name].is_number_integer())
            throw std::invalid_argument(std::string("certificate: move needs integer '") + name + "'");
        return j[name].get<long long>();
    };
    if (kind == "extension") {
        if (!j.contains("sub") || !j.contains("quotient"))
            throw std::invalid_argument("certificate: extension move needs 'sub' and 'quotient'");
        ExtensionMove mv{bundle_from_json(j["sub"]), bundle_from_json(j["quotient"]),
                         integer_field("m"), std::nullopt};
        if (j.contains("extClass")) {
            const json& ec = j["extClass"];
            if (!ec.is_object() || !ec.contains("coefficients") || !ec["coefficients"].is_array())
                throw std::invalid_argument("certificate: extClass needs a coefficient array");
            std::vector<Rat> coeffs;
            for (const auto& c : ec["coefficients"]) {
                if (!c.is_string()) throw std::invalid_argument("certificate: coefficients are strings");
                coeffs.push_back(rat_from_string(c.get<std::string>()));
            }
            mv.ext_class = ExtClass(mv.sub, mv.quotient, std::move(coeffs));
        }
        return mv;
    }
    if (kind == "twist-bridge") return TwistBridgeMove{integer_field("m"), integer_field("line")};
    if (kind == "congruence") {
        if (!j.contains("commonSummand") || !j.contains("from") || !j.contains("to"))
            throw std::invalid_argument("certificate: congruence move needs 'commonSummand', 'from', 'to'");
        return CongruenceMove{degree_list_from_json(j["commonSummand"]), bundle_from_json(j["from"]),
                              bundle_from_json(j["to"])};
    }
    throw std::invalid_argument("certificate: unknown move kind '" + kind + "'");
}

} // namespace

std::string certificate_to_json(const ConcordanceCertificate& c) {
    json j;
    j["format"] = "a1cert/1";
    j["endpoints"] = json::array({degrees_json(c.from), degrees_json(c.to)});
    json moves = json::array();
    for (const Move& mv : c.moves) moves.push_back(move_to_json(mv));
    j["moves"] = std::move(moves);
    return j.dump(2);
}

ConcordanceCertificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("certificate: ") + e.what());
    }
    if (!j.is_object() || j.value("format", std::string()) != "a1cert/1")
        throw std::invalid_argument("certificate: missing format tag a1cert/1");
    if (!j.contains("endpoints") || !j["endpoints"].is_array() || j["endpoints"].size() != 2)
        throw std::invalid_argument("certificate: endpoints must be a pair");
    if (!j.contains("moves") || !j["moves"].is_array())
        throw std::invalid_argument("certificate: moves must be an array");
    ConcordanceCertificate cert{bundle_from_json(j["endpoints"][0]), bundle_from_json(j["endpoints"][1]), {}};
    for (const auto& mj : j["moves"]) cert.moves.push_back(move_from_json(mj));
    return cert;
}

BundleClass bundle_class(const SplitBundle& e) { return {e.rank(), det(e)}; }

BundleClass bundle_class(long long rank, PicElement determinant) {
    if (rank < 1) throw std::invalid_argument("bundle class rank must be >= 1");
    return {rank, std::move(determinant)};
}

bool concordant(const BundleClass& a, const BundleClass& b) {
    return a.rank == b.rank && a.determinant == b.determinant;
}

} // namespace a1
