#include "doctest.h"

#include "qpb/group.hpp"
#include "test_support.hpp"

using namespace qpb;

namespace {
const ExactC one = ExactC::one();
const GroupForm u0 = GroupForm::delta(0);
const GroupForm u1 = GroupForm::delta(1);
const GroupForm g01 = GroupForm::one_form(one, ExactC::zero());
const GroupForm g10 = GroupForm::one_form(ExactC::zero(), one);
const GroupForm g010 = GroupForm::two_form(one, ExactC::zero());
const GroupForm g101 = GroupForm::two_form(ExactC::zero(), one);
const GroupForm vin = GroupForm::invariant_one_form(); // g01 + g10
const GroupForm alt = GroupForm::sign_character();     // u0 - u1

GroupForm rand_group(std::mt19937_64& rng, int degree) {
    return GroupForm(degree, rand_scalar(rng), rand_scalar(rng));
}
} // namespace

TEST_CASE("group algebra basis products") {
    CHECK(u0 + u1 == GroupForm::unit());
    CHECK(u0 * u0 == u0);
    CHECK((u0 * u1).is_zero());
    CHECK(u0 * vin == g01);
    CHECK(u1 * vin == g10);
    CHECK(g01 * u1 == g01);
    CHECK((g01 * u0).is_zero());
    CHECK(g01 * g10 == g010);
    CHECK(g10 * g01 == g101);
    CHECK((g01 * g01).is_zero());
    CHECK((g010 * g01).is_zero()); // truncation past top degree
    CHECK(alt * vin == d(u1));
}

TEST_CASE("group differential") {
    CHECK(d(u1) == GroupForm::one_form(one, -one));
    CHECK(d(u0) == GroupForm::one_form(-one, one));
    CHECK(d(alt) == ExactC(-2) * d(u1));
    // the invariant one-form squares to half its own differential
    CHECK(d(vin) == ExactC(2) * (vin * vin));
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 40; ++trial)
        for (int deg : {0, 1})
            CHECK(d(d(rand_group(rng, deg))).is_zero());
}

TEST_CASE("group Leibniz rule and star structure") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        for (int p : {0, 1, 2}) {
            for (int q : {0, 1, 2}) {
                GroupForm a = rand_group(rng, p);
                GroupForm b = rand_group(rng, q);
                ExactC sign = p % 2 == 0 ? one : -one;
                CHECK(d(a * b) == d(a) * b + sign * (a * d(b)));
                ExactC ssign = (p * q) % 2 == 0 ? one : -one;
                CHECK(star(a * b) == ssign * (star(b) * star(a)));
            }
            GroupForm a = rand_group(rng, p);
            CHECK(star(star(a)) == a);
            CHECK(star(d(a)) == d(star(a)));
        }
    }
    CHECK(star(vin) == -vin);
    CHECK(star(g01) == -g10);
    CHECK(star(g010) == -g010);
}

TEST_CASE("Hopf structure on functions") {
    // group-likes: coproduct of a character is its tensor square
    CHECK(coproduct(GroupForm::unit()) == tensor(GroupForm::unit(), GroupForm::unit()));
    CHECK(coproduct(alt) == tensor(alt, alt));
    CHECK(coproduct(u0) == tensor(u0, u0) + tensor(u1, u1));
    CHECK(coproduct(u1) == tensor(u0, u1) + tensor(u1, u0));

    CHECK(counit(GroupForm::unit()) == one);
    CHECK(counit(u1) == ExactC::zero());
    CHECK(antipode(u1) == u1);

    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        GroupForm a = rand_group(rng, 0);
        GroupForm b = rand_group(rng, 0);
        // coproduct is an algebra map on functions
        CHECK(coproduct(a * b) == coproduct(a) * coproduct(b));
        // counit laws: contract either tensor leg with the counit
        GroupTensor cp = coproduct(a);
        GroupForm left = GroupForm::zero(0), right = GroupForm::zero(0);
        GroupForm antip = GroupForm::zero(0);
        for (int g1 = 0; g1 < 2; ++g1)
            for (int g2 = 0; g2 < 2; ++g2) {
                const ExactC& cz = cp.coeff[0][0][g1][g2];
                left = left + cz * counit(GroupForm::delta(g1)) * GroupForm::delta(g2);
                right = right + cz * counit(GroupForm::delta(g2)) * GroupForm::delta(g1);
                // antipode law: m(antipode x id)coproduct = counit * unit
                antip = antip + cz * (antipode(GroupForm::delta(g1)) * GroupForm::delta(g2));
            }
        CHECK(left == a);
        CHECK(right == a);
        CHECK(antip == counit(a) * GroupForm::unit());
    }
}

TEST_CASE("extended coproduct") {
    // restriction to degree 0 is the coproduct
    for (const GroupForm& a : {u0, u1})
        CHECK(coproduct_ext(a) == coproduct(a));

    // the invariant one-form is primitive
    CHECK(coproduct_ext(vin) ==
          tensor(vin, GroupForm::unit()) + tensor(GroupForm::unit(), vin));

    // frozen structure table on the degree-1 and degree-2 basis
    CHECK(coproduct_ext(g01) ==
          tensor(u0, g01) + tensor(g01, u0) + tensor(g10, u1) + tensor(u1, g10));
    CHECK(coproduct_ext(g10) ==
          tensor(u0, g10) + tensor(g10, u0) + tensor(g01, u1) + tensor(u1, g01));
    CHECK(coproduct_ext(g010) ==
          tensor(u0, g010) + tensor(g010, u0) + tensor(g101, u1) + tensor(u1, g101));
    CHECK(coproduct_ext(g101) ==
          tensor(u0, g101) + tensor(g101, u0) + tensor(g010, u1) + tensor(u1, g010));

    // graded multiplicativity over all basis pairs
    const GroupForm basis[] = {u0, u1, g01, g10, g010, g101};
    for (const GroupForm& a : basis)
        for (const GroupForm& b : basis)
            CHECK(coproduct_ext(a * b) == coproduct_ext(a) * coproduct_ext(b));

    // compatibility with the differential
    for (const GroupForm& a : basis)
        CHECK(coproduct_ext(d(a)) == d(coproduct_ext(a)));

    // contracting the first leg with the (degree-0) counit gives the identity
    for (const GroupForm& a : basis) {
        GroupTensor cp = coproduct_ext(a);
        GroupForm contracted = GroupForm::zero(a.degree);
        for (int g1 = 0; g1 < 2; ++g1)
            for (int g2 = 0; g2 < 2; ++g2) {
                GroupForm leg = GroupForm::zero(a.degree);
                leg.c[g2] = cp.coeff[0][a.degree][g1][g2];
                contracted = contracted + counit(GroupForm::delta(g1)) * leg;
            }
        CHECK(contracted == a);
    }
}

TEST_CASE("germ map") {
    CHECK(germ(u1) == vin);
    CHECK(germ(u0) == -vin);
    CHECK(germ(GroupForm::unit()).is_zero());
    CHECK(germ(alt) == ExactC(-2) * vin);

    CHECK(germ_compose(vin, u0).is_zero());
    CHECK(germ_compose(vin, u1) == vin);

    // germ is a cocycle: germ(ab) = counit(a) germ(b) + germ(a) o b
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        GroupForm a = rand_group(rng, 0);
        GroupForm b = rand_group(rng, 0);
        CHECK(germ(a * b) == counit(a) * germ(b) + germ_compose(germ(a), b));
    }
}

TEST_CASE("corepresentations") {
    CHECK(corep_element(Corep::trivial) == GroupForm::unit());
    CHECK(corep_element(Corep::alternating) == alt);
    CHECK(corep_sign(Corep::trivial) == 1);
    CHECK(corep_sign(Corep::alternating) == -1);
    for (Corep r : {Corep::trivial, Corep::alternating}) {
        GroupForm u = corep_element(r);
        CHECK(coproduct(u) == tensor(u, u));
        CHECK(counit(u) == one);
        CHECK(star(u) * u == GroupForm::unit()); // unitary
        CHECK(germ(u) == ExactC((corep_sign(r) - 1)) * vin);
    }
}
