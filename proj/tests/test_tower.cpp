#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldprg/tower.hpp"

using namespace ldprg;

namespace {

// reference check for degree <= 3: irreducible over F iff monic, degree >= 1,
// and (for degree 2 or 3) rootless
bool irreducible_by_roots(const UniPoly& f) {
    if (f.degree() == 1) return true;
    for (const auto& a : field_enumerate(f.field()))
        if (f.eval(a).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("irreducibility test agrees with root search on low degrees") {
    auto f7 = FieldDesc::make_prime(7);
    for (int deg = 1; deg <= 3; ++deg) {
        u64 count = 1;
        for (int i = 0; i < deg; ++i) count *= 7;
        for (u64 code = 0; code < count; ++code) {
            std::vector<Fe> c;
            u64 rest = code;
            for (int i = 0; i < deg; ++i) {
                c.emplace_back(f7, rest % 7);
                rest /= 7;
            }
            c.push_back(fe_one(f7));
            UniPoly f(f7, std::move(c));
            CHECK(is_irreducible_univariate(f) == irreducible_by_roots(f));
        }
    }
    CHECK_THROWS_AS(is_irreducible_univariate(UniPoly(f7)), NonMonic);
}

TEST_CASE("Euler fast path matches the generic test over F_13 and F_169") {
    for (auto f : {FieldDesc::make_prime(13), FieldDesc::make_tower(13, {{2}})}) {
        for (const auto& h : field_enumerate(f)) {
            if (h.is_zero()) {
                CHECK_FALSE(quadratic_irreducible_fast(h));
                continue;
            }
            UniPoly quad(f, {neg(h), fe_zero(f), fe_one(f)});  // w^2 - h
            CHECK(quadratic_irreducible_fast(h) == is_irreducible_univariate(quad));
        }
    }
}

TEST_CASE("lift/reduce: pi o phi is the identity") {
    TowerSpec t = tower_from_descriptor(FieldDesc::make_prime(3),
                                        FieldDesc::make_tower(3, {{2}, {1, 1}}));
    REQUIRE(t.ell == 2);
    for (const auto& a : field_enumerate(t.full)) {
        MultiPoly lifted = tower_lift(t, a);
        CHECK(lifted.total_degree() <= t.ell);
        for (int v = 0; v < t.ell; ++v) CHECK(lifted.degree_in(v) <= 1);
        CHECK(tower_reduce(t, lifted) == a);
    }
}

TEST_CASE("pi is a ring homomorphism") {
    TowerSpec t = tower_from_descriptor(FieldDesc::make_prime(3),
                                        FieldDesc::make_tower(3, {{2}, {1, 1}}));
    // w1^2 reduces to the defining constant
    MultiPoly w1sq(t.base, 2);
    w1sq.add_term({2, 0}, fe_one(t.base));
    CHECK(tower_reduce(t, w1sq) == tower_embed(t, Fe(t.base, 2)));
    for (u128 i = 0; i < 30; ++i) {
        MultiPoly a = tower_lift(t, fe_from_index(t.full, i * 2 + 1));
        MultiPoly b = tower_lift(t, fe_from_index(t.full, 80 - i * 2));
        CHECK(tower_reduce(t, mul(a, b)) ==
              mul(tower_reduce(t, a), tower_reduce(t, b)));
        CHECK(tower_reduce(t, add(a, b)) ==
              add(tower_reduce(t, a), tower_reduce(t, b)));
    }
}

TEST_CASE("embed and restrict round trip") {
    TowerSpec t = tower_from_descriptor(FieldDesc::make_tower(13, {{2}}),
                                        FieldDesc::make_tower(13, {{2}, {0, 1}}));
    REQUIRE(t.ell == 1);
    for (u128 i = 0; i < 169; ++i) {
        Fe a = fe_from_index(t.base, i);
        auto back = tower_restrict(t, tower_embed(t, a));
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
    // a genuine extension element does not restrict
    Fe w2 = fe_from_index(t.full, u128{13} * 13);
    CHECK_FALSE(tower_restrict(t, w2).has_value());
}

TEST_CASE("build_tower produces verified towers") {
    auto f13 = FieldDesc::make_prime(13);
    BitStream bits(u64{42});
    TowerBuildStats stats;
    auto t = build_tower(f13, 2, bits, TowerStrategy::sampler, 64, &stats);
    REQUIRE(t.has_value());
    CHECK(t->ell == 2);
    CHECK(t->full->size() == u128{13} * 13 * 13 * 13);
    for (int i = 1; i <= 2; ++i) CHECK(quadratic_irreducible_fast(t->defining_constant(i)));
    CHECK(stats.tuples_tried >= 1);
    CHECK(stats.bits_consumed == bits.bits_consumed());
}

TEST_CASE("build_tower fails cleanly on adversarial bits") {
    // uniform_below(5) reads 3 bits; 001 = 1 every time, and 1 is a square,
    // so every tuple is reducible at the first level
    auto f5 = FieldDesc::make_prime(5);
    std::vector<bool> fixed;
    for (int i = 0; i < 2 * 3; ++i) {
        fixed.push_back(false);
        fixed.push_back(false);
        fixed.push_back(true);
    }
    BitStream bits(fixed);
    auto t = build_tower(f5, 1, bits, TowerStrategy::sampler, 2);
    CHECK_FALSE(t.has_value());
}

TEST_CASE("rejection strategy also builds valid towers") {
    auto f13 = FieldDesc::make_prime(13);
    BitStream bits(u64{9});
    auto t = build_tower(f13, 3, bits, TowerStrategy::rejection, 64);
    REQUIRE(t.has_value());
    for (int i = 1; i <= 3; ++i) CHECK(quadratic_irreducible_fast(t->defining_constant(i)));
}

TEST_CASE("tower_tries_for") {
    CHECK(tower_tries_for(4, 0.5) == 3);     // (3/4)^3 < 1/2 <= (3/4)^2
    CHECK(tower_tries_for(2, 0.26) == 2);
    CHECK(tower_tries_for(4, 0.01) >= 16);
}

TEST_CASE("JSON round trip") {
    auto f13 = FieldDesc::make_prime(13);
    BitStream bits(u64{1});
    auto t = build_tower(f13, 2, bits);
    REQUIRE(t.has_value());
    std::string js = tower_to_json(*t);
    TowerSpec back = tower_from_json(js);
    CHECK(*back.full == *t->full);
    CHECK(back.ell == 2);
    CHECK_THROWS_AS(tower_from_json(R"({"p": 13, "ell": 1, "h": [[1]]})"), Error);
}

TEST_CASE("defining_poly matches the stored constants") {
    TowerSpec t = tower_from_descriptor(FieldDesc::make_prime(3),
                                        FieldDesc::make_tower(3, {{2}, {1, 1}}));
    CHECK(t.defining_poly(1) == MultiPoly::constant(FieldDesc::make_prime(3), 2, Fe(t.base, 2)));
    MultiPoly h2(t.base, 2);  // 1 + w1
    h2.add_term({0, 0}, fe_one(t.base));
    h2.add_term({1, 0}, fe_one(t.base));
    CHECK(t.defining_poly(2) == h2);
}

TEST_CASE("trivial tower") {
    auto f13 = FieldDesc::make_prime(13);
    TowerSpec t = trivial_tower(f13);
    CHECK(t.ell == 0);
    Fe a(f13, 5);
    CHECK(tower_embed(t, a) == a);
    CHECK(tower_reduce(t, tower_lift(t, a)) == a);
}
