#include "a1/concordance.hpp"
#include "a1/pic_group.hpp"
#include "a1/split_bundle.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

using namespace a1;

TEST_CASE("canonical form is rank-1 zeros plus the determinant") {
    CHECK(canonical_form(SplitBundle{-1, 0, 1}) == SplitBundle{0, 0, 0});
    CHECK(canonical_form(SplitBundle{7}) == SplitBundle{7});
    CHECK(canonical_form(SplitBundle{2, 3}) == SplitBundle{0, 5});
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i) {
        const SplitBundle e = oracles::random_bundle(rng, 5, -6, 6);
        const SplitBundle c = canonical_form(e);
        CHECK(c.rank() == e.rank());
        CHECK(det(c) == det(e));
        CHECK(canonical_form(c) == c);
    }
}

TEST_CASE("concordance is rank plus determinant equality") {
    CHECK(concordant(SplitBundle{2, -2}, SplitBundle{0, 0}));
    CHECK_FALSE(concordant(SplitBundle{1, 0}, SplitBundle{0, 0}));
    CHECK_FALSE(concordant(SplitBundle{1}, SplitBundle{1, 0}));

    const auto range = oracles::all_degree_multisets(3, -3, 3);
    for (const auto& da : range)
        for (const auto& db : range) {
            const SplitBundle a(da), b(db);
            CHECK(concordant(a, b) == (canonical_form(a) == canonical_form(b)));
        }
}

TEST_CASE("concordance is an equivalence relation") {
    std::vector<SplitBundle> pool;
    for (long long r = 1; r <= 3; ++r)
        for (const auto& d : oracles::all_degree_multisets(r, -2, 2)) pool.emplace_back(d);
    for (const auto& a : pool) {
        CHECK(concordant(a, a));
        for (const auto& b : pool) {
            CHECK(concordant(a, b) == concordant(b, a));
            if (!concordant(a, b)) continue;
            for (const auto& c : pool)
                if (concordant(b, c)) CHECK(concordant(a, c));
        }
    }
}

TEST_CASE("generic section quotient on globally generated bundles") {
    CHECK(generic_section_quotient(SplitBundle{0, 0, 4}) == SplitBundle{0, 4});
    CHECK(generic_section_quotient(SplitBundle{1, 1, 1}) == SplitBundle{1, 2});
    CHECK(generic_section_quotient(SplitBundle{1, 3}) == SplitBundle{4});
    CHECK(generic_section_quotient(SplitBundle{0, 1, 2}) == SplitBundle{1, 2});
    CHECK(generic_section_quotient(SplitBundle{2, 3}) == SplitBundle{5});
    CHECK(generic_section_quotient(SplitBundle{0, 0}) == SplitBundle{0});
    CHECK_THROWS_AS(generic_section_quotient(SplitBundle{-1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generic_section_quotient(SplitBundle{3}), std::invalid_argument);

    std::mt19937_64 rng(103);
    for (int i = 0; i < 100; ++i) {
        SplitBundle e = oracles::random_bundle(rng, 4, 0, 4);
        if (e.rank() < 2) continue;
        const SplitBundle q = generic_section_quotient(e);
        CHECK(q.rank() == e.rank() - 1);
        CHECK(det(q) == det(e));
        CHECK(q.degrees().front() >= 0);
    }
}

TEST_CASE("generated certificates on the pinned examples") {
    CHECK(generate_certificate(SplitBundle{5}).moves.empty());
    CHECK(generate_certificate(SplitBundle{0, 0, 3}).moves.empty());

    const ConcordanceCertificate c = generate_certificate(SplitBundle{-1, 1});
    CHECK(c.from == SplitBundle{-1, 1});
    CHECK(c.to == SplitBundle{0, 0});
    REQUIRE(c.moves.size() == 2);
    const auto* ext = std::get_if<ExtensionMove>(&c.moves[0]);
    REQUIRE(ext != nullptr);
    CHECK(ext->sub == SplitBundle{-1});
    CHECK(ext->quotient == SplitBundle{1});
    CHECK(ext->m == 1);
    REQUIRE(ext->ext_class.has_value());
    CHECK(ext->ext_class->is_zero()); // {-1,1} is the split side; the bridge does the work
    const auto* bridge = std::get_if<TwistBridgeMove>(&c.moves[1]);
    REQUIRE(bridge != nullptr);
    CHECK(bridge->m == 1);
    CHECK(bridge->line == 0);
    CHECK(verify_certificate(c).ok);

    const ConcordanceCertificate c3 = generate_certificate(SplitBundle{-1, 0, 1});
    CHECK(c3.to == SplitBundle{0, 0, 0});
    CHECK(verify_certificate(c3).ok);

    // Positive rank-2 case: no twist, and the class is a nonzero witness
    // carrying {1,1} to the split side {0,2} directly.
    const ConcordanceCertificate c2 = generate_certificate(SplitBundle{1, 1});
    CHECK(c2.to == SplitBundle{0, 2});
    REQUIRE(c2.moves.size() == 1);
    const auto* ext2 = std::get_if<ExtensionMove>(&c2.moves[0]);
    REQUIRE(ext2 != nullptr);
    CHECK(ext2->m == 0);
    REQUIRE(ext2->ext_class.has_value());
    CHECK_FALSE(ext2->ext_class->is_zero());
    CHECK(verify_certificate(c2).ok);
}

TEST_CASE("generated certificates verify across an exhaustive range") {
    for (long long rank = 1; rank <= 3; ++rank)
        for (const auto& degs : oracles::all_degree_multisets(rank, -3, 3)) {
            const SplitBundle e(degs);
            const ConcordanceCertificate c = generate_certificate(e);
            CHECK(c.from == e);
            CHECK(c.to == canonical_form(e));
            const VerifyResult res = verify_certificate(c);
            CHECK(res.ok);
        }
}

TEST_CASE("verification rejects a determinant-violating extension move") {
    ConcordanceCertificate cert{SplitBundle{0, 1}, SplitBundle{0, 0}, {}};
    cert.moves.push_back(ExtensionMove{SplitBundle{0}, SplitBundle{0}, 0, std::nullopt});
    const VerifyResult res = verify_certificate(cert);
    CHECK_FALSE(res.ok);
    CHECK(res.diagnostic == "determinant mismatch");
    CHECK(res.move_index == 0);
}

TEST_CASE("verification rejects an illegal sub-line-bundle") {
    // Splitting off O(-2) from {-1,1} with m = 1: the twisted split side
    // {-1, 3} is not globally generated.
    ConcordanceCertificate cert{SplitBundle{-1, 1}, SplitBundle{0, 0}, {}};
    cert.moves.push_back(ExtensionMove{SplitBundle{-2}, SplitBundle{2}, 1, std::nullopt});
    const VerifyResult res = verify_certificate(cert);
    CHECK_FALSE(res.ok);
    CHECK(res.diagnostic == "sub-bundle legality");
    CHECK(res.move_index == 0);
}

TEST_CASE("verification rejects a sub that does not match the twist") {
    ConcordanceCertificate cert{SplitBundle{0, 2}, SplitBundle{0, 2}, {}};
    cert.moves.push_back(ExtensionMove{SplitBundle{0}, SplitBundle{2}, 1, std::nullopt});
    const VerifyResult res = verify_certificate(cert);
    CHECK_FALSE(res.ok);
    CHECK(res.diagnostic == "sub-bundle legality");
}

TEST_CASE("verification rejects rank mismatches") {
    ConcordanceCertificate cert{SplitBundle{0, 0, 0}, SplitBundle{0, 0, 0}, {}};
    cert.moves.push_back(ExtensionMove{SplitBundle{0}, SplitBundle{0}, 0, std::nullopt});
    const VerifyResult res = verify_certificate(cert);
    CHECK_FALSE(res.ok);
    CHECK(res.diagnostic == "rank mismatch");
}

TEST_CASE("verification rejects endpoint mismatches") {
    ConcordanceCertificate good = generate_certificate(SplitBundle{-1, 1});
    good.to = SplitBundle{-1, 1};
    const VerifyResult res = verify_certificate(good);
    CHECK_FALSE(res.ok);
    CHECK(res.diagnostic == "endpoint mismatch");
    CHECK(res.move_index == good.moves.size());
}

TEST_CASE("verification checks explicit fibers") {
    // The zero class degenerates both fibers to the split type, so a
    // balanced current bundle cannot ride this move.
    ConcordanceCertificate cert{SplitBundle{0, 0}, SplitBundle{-1, 1}, {}};
    cert.moves.push_back(ExtensionMove{SplitBundle{-1}, SplitBundle{1}, 1,
                                       ExtClass::zero(SplitBundle{-1}, SplitBundle{1})});
    const VerifyResult res = verify_certificate(cert);
    CHECK_FALSE(res.ok);
    CHECK(res.diagnostic == "fiber mismatch");
}

TEST_CASE("verification rejects a class attached to the wrong summands") {
    ConcordanceCertificate cert{SplitBundle{-1, 1}, SplitBundle{0, 0}, {}};
    cert.moves.push_back(ExtensionMove{SplitBundle{-1}, SplitBundle{1}, 1,
                                       ExtClass::zero(SplitBundle{-2}, SplitBundle{2})});
    const VerifyResult res = verify_certificate(cert);
    CHECK_FALSE(res.ok);
    CHECK(res.diagnostic == "extension class mismatch");
}

TEST_CASE("explicit extension moves run in both directions") {
    const ExtClass c(SplitBundle{-1}, SplitBundle{1}, {Rat(1)});
    ConcordanceCertificate down{SplitBundle{0, 0}, SplitBundle{-1, 1}, {}};
    down.moves.push_back(ExtensionMove{SplitBundle{-1}, SplitBundle{1}, 1, c});
    CHECK(verify_certificate(down).ok);

    ConcordanceCertificate up{SplitBundle{-1, 1}, SplitBundle{0, 0}, {}};
    up.moves.push_back(ExtensionMove{SplitBundle{-1}, SplitBundle{1}, 1, c});
    CHECK(verify_certificate(up).ok);
}

TEST_CASE("twist bridge legality and application") {
    ConcordanceCertificate bad{SplitBundle{0, 0}, SplitBundle{0, 0}, {}};
    bad.moves.push_back(TwistBridgeMove{-1, 1});
    CHECK(verify_certificate(bad).diagnostic == "bridge legality");

    ConcordanceCertificate neg{SplitBundle{0, 0}, SplitBundle{0, 0}, {}};
    neg.moves.push_back(TwistBridgeMove{1, -3});
    CHECK(verify_certificate(neg).diagnostic == "bridge legality");

    // Contract {-m, line+m} to {0, line} under a bystander summand.
    ConcordanceCertificate fwd{SplitBundle{-2, 1, 5}, SplitBundle{0, 1, 3}, {}};
    fwd.moves.push_back(TwistBridgeMove{2, 3});
    CHECK(verify_certificate(fwd).ok);

    // Expand {0, line} to {-m, line+m}.
    ConcordanceCertificate back{SplitBundle{0, 1, 3}, SplitBundle{-2, 1, 5}, {}};
    back.moves.push_back(TwistBridgeMove{2, 3});
    CHECK(verify_certificate(back).ok);

    ConcordanceCertificate absent{SplitBundle{1, 1}, SplitBundle{1, 1}, {}};
    absent.moves.push_back(TwistBridgeMove{2, 3});
    CHECK(verify_certificate(absent).diagnostic == "move does not apply");
}

TEST_CASE("congruence moves swap concordant pieces under a common summand") {
    ConcordanceCertificate ok{SplitBundle{-1, 2, 3}, SplitBundle{-1, 0, 5}, {}};
    ok.moves.push_back(CongruenceMove{{-1}, SplitBundle{2, 3}, SplitBundle{0, 5}});
    CHECK(verify_certificate(ok).ok);

    ConcordanceCertificate empty_common{SplitBundle{2, 3}, SplitBundle{0, 5}, {}};
    empty_common.moves.push_back(CongruenceMove{{}, SplitBundle{2, 3}, SplitBundle{0, 5}});
    CHECK(verify_certificate(empty_common).ok);

    ConcordanceCertificate bad{SplitBundle{-1, 2, 3}, SplitBundle{-1, 0, 4}, {}};
    bad.moves.push_back(CongruenceMove{{-1}, SplitBundle{2, 3}, SplitBundle{0, 4}});
    CHECK(verify_certificate(bad).diagnostic == "congruence class mismatch");

    ConcordanceCertificate off{SplitBundle{0, 2, 3}, SplitBundle{0, 0, 5}, {}};
    off.moves.push_back(CongruenceMove{{-1}, SplitBundle{2, 3}, SplitBundle{0, 5}});
    CHECK(verify_certificate(off).diagnostic == "move does not apply");
}

TEST_CASE("certificate JSON round trip") {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 60; ++i) {
        const SplitBundle e = oracles::random_bundle(rng, 4, -3, 3);
        const ConcordanceCertificate c = generate_certificate(e);
        const std::string doc = certificate_to_json(c);
        const ConcordanceCertificate back = certificate_from_json(doc);
        CHECK(back == c);
        CHECK(verify_certificate(back).ok);
    }
}

TEST_CASE("certificate JSON carries the format tag") {
    const std::string doc = certificate_to_json(generate_certificate(SplitBundle{-1, 1}));
    CHECK(doc.find("\"a1cert/1\"") != std::string::npos);
    CHECK(doc.find("\"extension\"") != std::string::npos);
    CHECK(doc.find("\"twist-bridge\"") != std::string::npos);
}

TEST_CASE("certificate deserialization rejects malformed documents") {
    auto rejects = [](const std::string& text) {
        CHECK_THROWS_AS(certificate_from_json(text), std::invalid_argument);
    };
    rejects("not json");
    rejects("{}");
    rejects(R"({"format":"a1cert/2","endpoints":[[0],[0]],"moves":[]})");
    rejects(R"({"format":"a1cert/1","endpoints":[[0]],"moves":[]})");
    rejects(R"({"format":"a1cert/1","endpoints":[[0],[]],"moves":[]})");
    rejects(R"({"format":"a1cert/1","endpoints":[[0],[0.5]],"moves":[]})");
    rejects(R"({"format":"a1cert/1","endpoints":[[0],[0]],"moves":[{"kind":"warp"}]})");
    rejects(R"({"format":"a1cert/1","endpoints":[[0],[0]],"moves":[{"kind":"twist-bridge","m":1}]})");
    rejects(R"({"format":"a1cert/1","endpoints":[[0],[0]],"moves":[{"kind":"extension","sub":[-1],"quotient":[1],"m":1,"extClass":{"coefficients":["x"]}}]})");
    CHECK_NOTHROW(certificate_from_json(
        R"({"format":"a1cert/1","endpoints":[[0],[0]],"moves":[]})"));
}

TEST_CASE("bundle classes compare rank and determinant") {
    CHECK(concordant(bundle_class(SplitBundle{2, -2}), bundle_class(SplitBundle{0, 0})));
    CHECK_FALSE(concordant(bundle_class(SplitBundle{1, 0}), bundle_class(SplitBundle{0, 0})));

    const PicGroup g = PicGroup::parse("Z x Z/5");
    const BundleClass a = bundle_class(3, g.parse_element("1,2"));
    const BundleClass b = bundle_class(3, g.parse_element("1,7"));
    const BundleClass c = bundle_class(3, g.parse_element("1,3"));
    const BundleClass d = bundle_class(2, g.parse_element("1,2"));
    CHECK(concordant(a, b));
    CHECK_FALSE(concordant(a, c));
    CHECK_FALSE(concordant(a, d));
    CHECK_THROWS_AS(bundle_class(0, g.identity()), std::invalid_argument);

    // Degree mode and curve mode never compare equal.
    CHECK_FALSE(concordant(bundle_class(SplitBundle{0}), bundle_class(1, PicGroup::parse("Z").parse_element("0"))));
}
