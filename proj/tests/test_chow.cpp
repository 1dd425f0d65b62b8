#include "a1/chow.hpp"
#include "a1/parse_error.hpp"
#include "a1/pic_group.hpp"

#include <doctest.h>
#include <json.hpp>

#include <optional>
#include <vector>

using namespace a1;

namespace {

RingElement x() { return RingElement::generator_x(); }
RingElement z() { return RingElement::generator_z(); }

GradedIsoWitness compose(const GradedIsoWitness& f, const GradedIsoWitness& g) {
    // g after f: the images under f, pushed through g.
    return {f.x_to_x * g.x_to_x + f.x_to_z * g.z_to_x,
            f.x_to_x * g.x_to_z + f.x_to_z * g.z_to_z,
            f.z_to_x * g.x_to_x + f.z_to_z * g.z_to_x,
            f.z_to_x * g.x_to_z + f.z_to_z * g.z_to_z};
}

GradedIsoWitness inverse(const GradedIsoWitness& w) {
    const mpz_class det = w.x_to_x * w.z_to_z - w.x_to_z * w.z_to_x;
    return {det * w.z_to_z, det * -w.x_to_z, det * -w.z_to_x, det * w.x_to_x};
}

bool contains(const std::vector<GradedIsoWitness>& v, const GradedIsoWitness& w) {
    for (const auto& u : v)
        if (u == w) return true;
    return false;
}

} // namespace

TEST_CASE("ring descriptor round trip") {
    const ProjBundleRing r(2, 1);
    CHECK(r.descriptor() == "PB(n=2, a=1)");
    CHECK(ProjBundleRing::parse("PB(n=2, a=1)") == r);
    CHECK(ProjBundleRing::parse(" PB( n = 3 , a = -17 ) ") == ProjBundleRing(3, -17));
    CHECK_THROWS_AS(ProjBundleRing::parse("PB(n=0, a=1)"), ParseError);
    CHECK_THROWS_AS(ProjBundleRing::parse("PB(n=2 a=1)"), ParseError);
    CHECK_THROWS_AS(ProjBundleRing::parse("PB(n=2, a=1) extra"), ParseError);
    CHECK_THROWS_AS(ProjBundleRing(0, 1), std::invalid_argument);
}

TEST_CASE("reduce implements the defining relations") {
    const ProjBundleRing r5(2, 5);
    CHECK(reduce(z().pow(3), r5) == RingElement::monomial(-5, 1, 2));
    CHECK(reduce(x() * z().pow(3), r5).is_zero());
    CHECK(reduce(z().pow(4), r5).is_zero());
    CHECK(reduce(x() * x(), r5).is_zero());

    const ProjBundleRing r0(2, 0);
    const RingElement sq = (x() + z()) * (x() + z());
    CHECK(reduce(sq, r0) == z() * z() + (x() * z()).scaled(2));

    // Reduction is idempotent and linear on a basis sweep.
    const ProjBundleRing r(3, -2);
    for (long i = 0; i <= 3; ++i)
        for (long j = 0; j <= 5; ++j) {
            const RingElement m = RingElement::monomial(1, i, j);
            const RingElement red = reduce(m, r);
            CHECK(reduce(red, r) == red);
        }
}

TEST_CASE("ring_mul reduces products") {
    const ProjBundleRing r(1, 3);
    // z * z = -3 x z in P(O + O(3)) over the line.
    CHECK(ring_mul(z(), z(), r) == RingElement::monomial(-3, 1, 1));
    CHECK(ring_mul(x(), x(), r).is_zero());
}

TEST_CASE("element display form") {
    CHECK((x() * z() * z()).scaled(2).to_string() == "2 x z^2");
    CHECK(((x() * z() * z()).scaled(2) - z()).to_string() == "-z + 2 x z^2");
    CHECK(RingElement().to_string() == "0");
    CHECK(RingElement::monomial(1, 0, 0).to_string() == "1");
    CHECK((x() + z()).to_string() == "x + z");
}

TEST_CASE("weak equivalence over the projective line") {
    CHECK(weak_equivalent_p1(1, 0, 2));
    CHECK_FALSE(weak_equivalent_p1(2, 1, 2));
    for (long n = 1; n <= 3; ++n)
        for (long a = -6; a <= 6; ++a) CHECK(weak_equivalent_p1(n, a, a));
}

TEST_CASE("weak equivalence is an equivalence relation") {
    for (long n = 1; n <= 3; ++n)
        for (long a = -6; a <= 6; ++a)
            for (long b = -6; b <= 6; ++b) {
                CHECK(weak_equivalent_p1(n, a, b) == weak_equivalent_p1(n, b, a));
                if (!weak_equivalent_p1(n, a, b)) continue;
                for (long c = -6; c <= 6; ++c)
                    if (weak_equivalent_p1(n, b, c)) CHECK(weak_equivalent_p1(n, a, c));
            }
}

TEST_CASE("weak equivalence on abstract curves") {
    const PicGroup z = PicGroup::parse("Z");
    const auto w = weak_equivalent_curve(z, z.parse_element("0"), z.parse_element("3"), 2);
    REQUIRE(w.has_value());
    CHECK(*w == z.parse_element("-1"));

    const PicGroup z4 = PicGroup::parse("Z/4");
    CHECK_FALSE(weak_equivalent_curve(z4, z4.parse_element("1"), z4.parse_element("0"), 1).has_value());

    const PicGroup zz5 = PicGroup::parse("Z x Z/5");
    const auto v = weak_equivalent_curve(zz5, zz5.parse_element("5,0"), zz5.identity(), 4);
    REQUIRE(v.has_value());
    CHECK(zz5.scale(5, *v) == zz5.parse_element("5,0"));
}

TEST_CASE("find_graded_iso on pinned rings") {
    const auto w = find_graded_iso(ProjBundleRing(2, 1), ProjBundleRing(2, 2));
    REQUIRE(w.has_value());
    CHECK(w->x_to_x == -1);
    CHECK(w->z_to_z == 1);
    CHECK(w->z_to_x == 1);
    CHECK(w->x_to_z == 0);
    CHECK(witness_valid(ProjBundleRing(2, 1), ProjBundleRing(2, 2), *w));

    CHECK_FALSE(find_graded_iso(ProjBundleRing(2, 0), ProjBundleRing(2, 1)).has_value());

    const auto id = find_graded_iso(ProjBundleRing(3, 4), ProjBundleRing(3, 4));
    REQUIRE(id.has_value());
    CHECK(*id == GradedIsoWitness{1, 0, 0, 1});

    CHECK_THROWS_AS(find_graded_iso(ProjBundleRing(1, 0), ProjBundleRing(2, 0)), std::invalid_argument);
}

TEST_CASE("find_graded_iso agrees with an exhaustive forced-form search") {
    // Independent check: scan all four sign pairs and every |gamma| <= 10
    // against witness_valid directly.
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            const ProjBundleRing r1(2, a), r2(2, b);
            std::optional<GradedIsoWitness> brute;
            for (long alpha : {1L, -1L})
                for (long delta : {1L, -1L})
                    for (long gamma = -10; gamma <= 10 && !brute; ++gamma) {
                        const GradedIsoWitness w{alpha, 0, gamma, delta};
                        if (witness_valid(r1, r2, w)) brute = w;
                    }
            const auto found = find_graded_iso(r1, r2);
            CHECK(found.has_value() == brute.has_value());
            if (found) CHECK(witness_valid(r1, r2, *found));
        }
}

TEST_CASE("weak equivalence implies a verified graded iso") {
    for (long n = 1; n <= 3; ++n)
        for (long a = -6; a <= 6; ++a)
            for (long b = -6; b <= 6; ++b) {
                if (!weak_equivalent_p1(n, a, b)) continue;
                const auto w = find_graded_iso(ProjBundleRing(n, a), ProjBundleRing(n, b));
                REQUIRE(w.has_value());
                // The first sign case already divides, so the witness is
                // the translation by (b - a)/(n + 1).
                CHECK(w->x_to_x == 1);
                CHECK(w->z_to_z == 1);
                CHECK(w->z_to_x == mpz_class(b - a) / (n + 1));
            }
}

TEST_CASE("the iso search can succeed where the divisibility criterion fails") {
    CHECK_FALSE(weak_equivalent_p1(2, 1, -1));
    const auto w = find_graded_iso(ProjBundleRing(2, 1), ProjBundleRing(2, -1));
    REQUIRE(w.has_value());
    CHECK(w->x_to_x == -1);
    CHECK(w->z_to_z == 1);
    CHECK(w->z_to_x == 0);
}

TEST_CASE("twist consistency: a and -n*a present isomorphic rings") {
    for (long n = 1; n <= 3; ++n)
        for (long a = -6; a <= 6; ++a) {
            CHECK(weak_equivalent_p1(n, a, -n * a));
            const auto w = find_graded_iso(ProjBundleRing(n, a), ProjBundleRing(n, -n * a));
            CHECK(w.has_value());
        }
}

TEST_CASE("witness_valid rejects non-isomorphisms") {
    const ProjBundleRing r(2, 0);
    CHECK_FALSE(witness_valid(r, r, GradedIsoWitness{2, 0, 0, 1}));
    CHECK_FALSE(witness_valid(r, r, GradedIsoWitness{0, 0, 0, 0}));
    CHECK_FALSE(witness_valid(r, ProjBundleRing(3, 0), GradedIsoWitness{1, 0, 0, 1}));
    // Sending x into z breaks x^2 = 0 in the image.
    CHECK_FALSE(witness_valid(r, r, GradedIsoWitness{0, 1, 1, 0}));
    // Relation image fails even though the matrix is unimodular.
    CHECK_FALSE(witness_valid(ProjBundleRing(2, 0), ProjBundleRing(2, 1), GradedIsoWitness{1, 0, 0, 1}));
}

TEST_CASE("enumeration of graded isomorphisms") {
    const ProjBundleRing r(2, 0);
    const auto isos = enumerate_graded_isos(r, r, 3);
    CHECK(isos.size() == 4);
    for (const auto& w : isos) {
        CHECK(w.x_to_z == 0);
        CHECK(w.z_to_x == 0);
        CHECK(abs(w.x_to_x) == 1);
        CHECK(abs(w.z_to_z) == 1);
    }
    CHECK(contains(isos, GradedIsoWitness{1, 0, 0, 1}));

    // Closed under inverse and composition within the bound.
    for (const auto& w : isos) {
        CHECK(contains(isos, inverse(w)));
        for (const auto& u : isos) CHECK(contains(isos, compose(w, u)));
    }

    CHECK_FALSE(enumerate_graded_isos(ProjBundleRing(2, 1), ProjBundleRing(2, -1), 3).empty());
    CHECK(enumerate_graded_isos(r, ProjBundleRing(3, 0), 3).empty());
}

TEST_CASE("empty find means empty enumeration") {
    for (const auto& [a, b] : std::vector<std::pair<long, long>>{{0, 1}, {1, 3}, {-2, 0}}) {
        const ProjBundleRing r1(2, a), r2(2, b);
        REQUIRE_FALSE(find_graded_iso(r1, r2).has_value());
        CHECK(enumerate_graded_isos(r1, r2, 10).empty());
    }
}

TEST_CASE("witness display form") {
    CHECK(to_string(GradedIsoWitness{-1, 0, 1, 1}) == "x -> -x, z -> x + z");
    CHECK(to_string(GradedIsoWitness{1, 0, 0, 1}) == "x -> x, z -> z");
}

TEST_CASE("rigidity report") {
    const RigidityReport r = rigidity_report();
    REQUIRE(r.checks.size() == 3);
    CHECK(r.all_pass());

    CHECK(r.checks[0].check == "no-trivializing-twist");
    CHECK(r.checks[0].pass);
    REQUIRE(r.checks[0].witnesses.size() == 2);
    CHECK(r.checks[0].witnesses[0] == "middle summand forces a = 0");

    CHECK(r.checks[1].check == "chern-vanishing");
    CHECK(r.checks[1].pass);
    REQUIRE(r.checks[1].witnesses.size() == 1);
    CHECK(r.checks[1].witnesses[0] == "c1 = 0, c2 = 0");

    CHECK(r.checks[2].check == "iso-rigidity");
    CHECK(r.checks[2].pass);
    CHECK(r.checks[2].witnesses.size() == 4);
}

TEST_CASE("rigidity report JSON shape") {
    const auto doc = nlohmann::json::parse(rigidity_report_to_json(rigidity_report()));
    CHECK(doc["pass"] == true);
    REQUIRE(doc["checks"].is_array());
    REQUIRE(doc["checks"].size() == 3);
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("check"));
        CHECK(c.contains("pass"));
        CHECK(c["witnesses"].is_array());
    }
}
