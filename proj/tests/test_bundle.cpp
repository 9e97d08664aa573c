#include "doctest.h"

#include "qpb/connection.hpp"
#include "qpb/total_form.hpp"
#include "test_support.hpp"

using namespace qpb;

namespace {
const ExactC one = ExactC::one();
const ExactC I = ExactC::i_unit();

GroupForm rand_group(std::mt19937_64& rng, int degree) {
    return GroupForm(degree, rand_scalar(rng), rand_scalar(rng));
}

TotalForm rand_total(std::mt19937_64& rng) {
    TotalForm w;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; i + j < 3; ++j)
            for (int b = 0; b < 2; ++b)
                for (int g = 0; g < 2; ++g) w.at(i, j, b, g) = rand_scalar(rng);
    return w;
}

TotalForm rand_total_homogeneous(std::mt19937_64& rng, int n) {
    TotalForm w;
    for (int i = 0; i <= n; ++i) {
        int j = n - i;
        if (i > 2 || j > 2) continue;
        for (int b = 0; b < 2; ++b)
            for (int g = 0; g < 2; ++g) w.at(i, j, b, g) = rand_scalar(rng);
    }
    return w;
}

TotalForm rand_horizontal(std::mt19937_64& rng) {
    TotalForm w;
    for (int i = 0; i < 3; ++i)
        for (int b = 0; b < 2; ++b)
            for (int g = 0; g < 2; ++g) w.at(i, 0, b, g) = rand_scalar(rng);
    return w;
}

Connection rand_connection(std::mt19937_64& rng) {
    return Connection(rand_scalar(rng), rand_scalar(rng));
}
} // namespace

TEST_CASE("total algebra structure") {
    std::mt19937_64 rng(71);
    TotalForm u = TotalForm::unit();
    for (int trial = 0; trial < 20; ++trial) {
        TotalForm a = rand_total(rng);
        TotalForm b = rand_total(rng);
        TotalForm c = rand_total(rng);
        CHECK(u * a == a);
        CHECK(a * u == a);
        CHECK((a * b) * c == a * (b * c));
    }
    // pure tensors multiply with the graded interchange sign
    for (int trial = 0; trial < 20; ++trial) {
        for (int i1 : {0, 1, 2})
            for (int j1 : {0, 1, 2})
                for (int i2 : {0, 1, 2})
                    for (int j2 : {0, 1, 2}) {
                        if (i1 + j1 > 2 || i2 + j2 > 2) continue;
                        BaseForm a = rand_base(rng, i1);
                        GroupForm t = rand_group(rng, j1);
                        BaseForm b = rand_base(rng, i2);
                        GroupForm s = rand_group(rng, j2);
                        ExactC sign = (j1 * i2) % 2 == 0 ? one : -one;
                        CHECK(tensor_embed(a, t) * tensor_embed(b, s) ==
                              sign * tensor_embed(a * b, t * s));
                    }
    }
}

TEST_CASE("total differential and star") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        TotalForm a = rand_total(rng);
        CHECK(d(d(a)).is_zero());
        CHECK(star(star(a)) == a);
        CHECK(star(d(a)) == d(star(a)));
        for (int n = 0; n <= 2; ++n) {
            TotalForm h = rand_total_homogeneous(rng, n);
            TotalForm b = rand_total(rng);
            ExactC sign = n % 2 == 0 ? one : -one;
            CHECK(d(h * b) == d(h) * b + sign * (h * d(b)));
            for (int m = 0; m + n <= 4; ++m) {
                if (m > 2) continue;
                TotalForm k = rand_total_homogeneous(rng, m);
                ExactC ssign = (n * m) % 2 == 0 ? one : -one;
                CHECK(star(h * k) == ssign * (star(k) * star(h)));
            }
        }
    }
    // mixed-degree tensor factors: d and star against the embedding
    for (int trial = 0; trial < 20; ++trial) {
        for (int i : {0, 1, 2})
            for (int j : {0, 1, 2}) {
                if (i + j > 2) continue;
                BaseForm a = rand_base(rng, i);
                GroupForm t = rand_group(rng, j);
                ExactC sign = i % 2 == 0 ? one : -one;
                CHECK(d(tensor_embed(a, t)) ==
                      tensor_embed(d(a), t) + sign * tensor_embed(a, d(t)));
                CHECK(star(tensor_embed(a, t)) ==
                      tensor_embed(star(a), star(t)));
            }
    }
}

TEST_CASE("translation map") {
    std::mt19937_64 rng(79);
    // on horizontal forms the translation only coacts through functions
    BaseForm p = rand_base(rng, 0);
    TotalForm w = tensor_embed(p, GroupForm::delta(1));
    PsiImage img = psi(w);
    PsiImage expected;
    for (int b = 0; b < 2; ++b) {
        expected.at(0, 0, 0, b, 0, 1) = p.c[b];
        expected.at(0, 0, 0, b, 1, 0) = p.c[b];
    }
    CHECK(img == expected);

    // forms of the shape w (x) unit coact trivially
    for (int trial = 0; trial < 10; ++trial) {
        BaseForm a = rand_base(rng, trial % 3);
        TotalForm v = tensor_embed(a, GroupForm::unit());
        CHECK(psi(v) == tensor_unit(v));
    }
}

TEST_CASE("connections and their curvature") {
    std::mt19937_64 rng(83);

    CHECK(curvature(Connection::trivial()).is_zero());
    CHECK(Connection::trivial().is_flat());

    // the distinguished critical connection has curvature -i/2 on both legs
    Connection ym = Connection::yang_mills();
    ExactC mhalf_i(Rat(0), make_rat(Int(-1), Int(2)));
    CHECK(curvature(ym) == BaseForm::two_form(mhalf_i, mhalf_i));
    CHECK(curvature_scalar(ym) == mhalf_i);
    CHECK(!ym.is_flat());

    for (int trial = 0; trial < 40; ++trial) {
        Connection conn = rand_connection(rng);
        // the calculus route and the closed polynomial agree
        ExactC u = curvature_scalar(conn);
        CHECK(curvature(conn) == BaseForm::two_form(u, u));
        // affine chart: u = i (ab - 1)/2
        ExactC ab = conn.chart_a() * conn.chart_b();
        CHECK(u == ExactC(Rat(0), make_rat(Int(1), Int(2))) * (ab - one));
    }
}

TEST_CASE("flat locus") {
    CHECK(flat_completion(ExactC::zero()) == ExactC::zero());
    // lambda0 = 1 completes to (-1+2i)/5
    CHECK(flat_completion(one) ==
          ExactC(make_rat(Int(-1), Int(5)), make_rat(Int(2), Int(5))));
    CHECK_THROWS_AS(flat_completion(ExactC(Rat(0), make_rat(Int(1), Int(2)))),
                    NumericError);
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 40; ++trial) {
        ExactC l0 = rand_scalar(rng);
        if ((one + ExactC(0, 2) * l0).is_zero()) continue;
        Connection conn(l0, flat_completion(l0));
        CHECK(conn.is_flat());
        CHECK(curvature(conn).is_zero());
    }
}

TEST_CASE("covariant derivative") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 25; ++trial) {
        Connection conn = rand_connection(rng);
        BaseForm mu = conn.mu();

        // not defined on non-horizontal forms
        TotalForm vert = tensor_embed(BaseForm::unit(), GroupForm::invariant_one_form());
        CHECK_THROWS_AS(cov_deriv(conn, vert), DomainError);

        // trivially coacting forms just differentiate
        for (int deg : {0, 1, 2}) {
            BaseForm a = rand_base(rng, deg);
            TotalForm w = tensor_embed(a, GroupForm::unit());
            CHECK(cov_deriv(conn, w) == tensor_embed(d(a), GroupForm::unit()));
        }

        // sign-character sections: d + 2 (-1)^deg (.) mu
        GroupForm alt = GroupForm::sign_character();
        for (int deg : {0, 1, 2}) {
            BaseForm a = rand_base(rng, deg);
            ExactC sign = deg % 2 == 0 ? ExactC(2) : ExactC(-2);
            CHECK(cov_deriv(conn, tensor_embed(a, alt)) ==
                  tensor_embed(d(a) + sign * (a * mu), alt));
        }

        // a frozen mixed example: p (x) delta_1
        BaseForm p = rand_base(rng, 0);
        TotalForm w = tensor_embed(p, GroupForm::delta(1));
        TotalForm expect = tensor_embed(d(p), GroupForm::delta(1)) +
                           tensor_embed(p * mu, GroupForm::delta(1)) -
                           tensor_embed(p * mu, GroupForm::delta(0));
        CHECK(cov_deriv(conn, w) == expect);

        // horizontality is preserved on arbitrary horizontal input
        TotalForm h = rand_horizontal(rng);
        CHECK(cov_deriv(conn, h).is_horizontal());

        // first-order Leibniz over trivially-coacting factors
        for (int deg : {0, 1}) {
            BaseForm a = rand_base(rng, deg);
            TotalForm fa = tensor_embed(a, GroupForm::unit());
            TotalForm hh = rand_horizontal(rng);
            ExactC sign = deg % 2 == 0 ? one : -one;
            CHECK(cov_deriv(conn, fa * hh) ==
                  tensor_embed(d(a), GroupForm::unit()) * hh + sign * (fa * cov_deriv(conn, hh)));
        }
    }
}

TEST_CASE("connection equivariance under translation") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        Connection conn = rand_connection(rng);
        TotalForm omega = conn.form();
        PsiImage expected;
        for (int b = 0; b < 2; ++b)
            for (int g1 = 0; g1 < 2; ++g1)
                for (int g2 = 0; g2 < 2; ++g2)
                    expected.at(0, 0, 1, b, g1, g2) = one;
        CHECK(psi(omega) - tensor_unit(omega) == expected);
    }
}

TEST_CASE("derivative of connection-direction fields") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 25; ++trial) {
        Connection conn = rand_connection(rng);
        const ExactC& l0 = conn.lambda0;
        const ExactC& l1 = conn.lambda1;

        BaseForm nu0 = rand_base(rng, 0);
        CHECK(s_op(conn, nu0) ==
              BaseForm::one_form(ExactC(2) * l0 * (nu0.c[1] - nu0.c[0]),
                                 ExactC(2) * l1 * (nu0.c[0] - nu0.c[1])));

        BaseForm nu1 = rand_base(rng, 1);
        ExactC v = ExactC(0, 2) * (l1 * nu1.c[0] + l0 * nu1.c[1]);
        CHECK(s_op(conn, nu1) == BaseForm::two_form(v, v));

        // top degree: everything multiplies to zero
        CHECK(s_op(conn, rand_base(rng, 2)).is_zero());
    }
}
