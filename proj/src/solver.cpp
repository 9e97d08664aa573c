#include "qpb/solver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <utility>

#include "qpb/error.hpp"
#include "qpb/gauge.hpp"

namespace qpb {
namespace {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;
using C = std::complex<double>;

double norm2(const Vec& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return s;
}

/// Solve the square system a x = b by Gaussian elimination with partial
/// pivoting. Throws NumericError on a numerically singular pivot.
Vec solve_dense(Mat a, Vec b) {
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::fabs(a[r][k]) > std::fabs(a[piv][k])) piv = r;
        if (std::fabs(a[piv][k]) < 1e-300) throw NumericError("singular normal equations");
        std::swap(a[piv], a[k]);
        std::swap(b[piv], b[k]);
        for (std::size_t r = k + 1; r < n; ++r) {
            double f = a[r][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
            b[r] -= f * b[k];
        }
    }
    Vec x(n);
    for (std::size_t k = n; k-- > 0;) {
        double s = b[k];
        for (std::size_t c = k + 1; c < n; ++c) s -= a[k][c] * x[c];
        x[k] = s / a[k][k];
    }
    return x;
}

using ResidFn = std::function<Vec(const Vec&)>;
using JacFn = std::function<Mat(const Vec&)>;

Mat fd_jacobian(const ResidFn& resid, const Vec& x, std::size_t m) {
    const std::size_t n = x.size();
    Mat j(m, Vec(n, 0.0));
    Vec xp = x;
    for (std::size_t c = 0; c < n; ++c) {
        double h = 1e-6 * std::max(1.0, std::fabs(x[c]));
        xp[c] = x[c] + h;
        Vec rp = resid(xp);
        xp[c] = x[c] - h;
        Vec rm = resid(xp);
        xp[c] = x[c];
        for (std::size_t r = 0; r < m; ++r) j[r][c] = (rp[r] - rm[r]) / (2 * h);
    }
    return j;
}

struct LmEnd {
    Vec x;
    double f = 0;
    bool step_converged = false;
};

/// Damped Newton (Levenberg-Marquardt) on |resid|^2. Accepted steps are
/// strictly decreasing; rejected trials escalate the damping. Every trial
/// counts against the shared iteration budget.
LmEnd lm_minimize(const ResidFn& resid, const JacFn& jac, Vec x,
                  const SolveOptions& opts, int& iters_used) {
    LmEnd out;
    Vec r = resid(x);
    double f = norm2(r);
    const std::size_t n = x.size();
    double mu = opts.damping;
    while (iters_used < opts.max_iter) {
        if (f < 1e-26) {
            out.step_converged = true;
            break;
        }
        Mat j = jac ? jac(x) : fd_jacobian(resid, x, r.size());
        Mat jtj(n, Vec(n, 0.0));
        Vec jtr(n, 0.0);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t k = 0; k < r.size(); ++k) jtj[a][b] += j[k][a] * j[k][b];
            for (std::size_t k = 0; k < r.size(); ++k) jtr[a] += j[k][a] * r[k];
        }
        bool accepted = false;
        while (iters_used < opts.max_iter) {
            ++iters_used;
            Mat a = jtj;
            for (std::size_t d = 0; d < n; ++d) a[d][d] += mu;
            Vec step;
            try {
                Vec rhs(n);
                for (std::size_t d = 0; d < n; ++d) rhs[d] = -jtr[d];
                step = solve_dense(std::move(a), std::move(rhs));
            } catch (const NumericError&) {
                mu *= 10;
                continue;
            }
            Vec trial = x;
            for (std::size_t d = 0; d < n; ++d) trial[d] += step[d];
            Vec rt = resid(trial);
            double ft = norm2(rt);
            if (ft < f) {
                x = std::move(trial);
                r = std::move(rt);
                f = ft;
                mu = std::max(mu * 0.25, 1e-14);
                accepted = true;
                if (norm2(step) < opts.step_tol * opts.step_tol) out.step_converged = true;
                break;
            }
            mu *= 10;
            if (mu > 1e12) break;
        }
        if (out.step_converged || !accepted) break;
    }
    out.x = std::move(x);
    out.f = f;
    return out;
}

Residual base_to_residual(const BaseForm& b) {
    Residual r;
    r.add("x0", b.c[0]);
    r.add("x1", b.c[1]);
    return r;
}

/// Finest rational snap available under the denominator bound: tighten
/// the tolerance first and relax only as far as needed, so exact landings
/// keep their tiny denominators and generic floats still snap to their
/// best bounded approximation.
ExactC snap_progressive(const ApproxC& z) {
    for (double tol : {1e-9, 1e-7, 1e-5, 1e-3, 1e-1}) {
        try {
            return from_approx(z, tol);
        } catch (const NumericError&) {
        }
    }
    return from_approx(z, 1.0);
}

C chart(const C& lambda) { return C(1.0, 0.0) + C(0.0, 2.0) * lambda; }

Vec ym_residual_float(const Vec& x) {
    C l0(x[0], x[1]), l1(x[2], x[3]);
    C a = chart(l0), b = chart(l1);
    C u = C(0.0, 0.5) * (a * b - C(1.0, 0.0));
    C g0 = 0.5 * u * std::conj(b);
    C g1 = 0.5 * u * std::conj(a);
    return {g0.real(), g0.imag(), g1.real(), g1.imag()};
}

Mat ym_jacobian_float(const Vec& x) {
    C l0(x[0], x[1]), l1(x[2], x[3]);
    C a = chart(l0), b = chart(l1);
    C u = C(0.0, 0.5) * (a * b - C(1.0, 0.0));
    // Holomorphic/antiholomorphic derivative pairs of (g0, g1) in (l0, l1).
    C hol[2][2] = {{-0.5 * b * std::conj(b), -0.5 * a * std::conj(b)},
                   {-0.5 * b * std::conj(a), -0.5 * a * std::conj(a)}};
    C anti[2][2] = {{C(0, 0), C(0, -1) * u}, {C(0, -1) * u, C(0, 0)}};
    Mat j(4, Vec(4, 0.0));
    for (int g = 0; g < 2; ++g)
        for (int k = 0; k < 2; ++k) {
            C dre = hol[g][k] + anti[g][k];
            C dim = C(0, 1) * (hol[g][k] - anti[g][k]);
            j[2 * g][2 * k] = dre.real();
            j[2 * g + 1][2 * k] = dre.imag();
            j[2 * g][2 * k + 1] = dim.real();
            j[2 * g + 1][2 * k + 1] = dim.imag();
        }
    return j;
}

double dist_to_distinguished(const C& l0, const C& l1) {
    C ihalf(0.0, 0.5);
    return std::sqrt(std::norm(l0 - ihalf) + std::norm(l1 - ihalf));
}

double dist_to_flat(const C& l0, const C& l1) {
    double best = 1e300;
    C a = chart(l0), b = chart(l1);
    if (std::abs(a) > 1e-8) best = std::min(best, std::abs(l1 + l0 / a));
    if (std::abs(b) > 1e-8) best = std::min(best, std::abs(l0 + l1 / b));
    return best;
}

/// Exact flat connection nearest the floating pair: snap one parameter
/// and complete the other exactly, choosing the parametrization whose
/// completion lands closer to the floating endpoint.
std::optional<Connection> snap_flat(const C& l0, const C& l1) {
    std::optional<Connection> best;
    double best_d = 1e300;
    auto consider = [&](const C& param, const C& other, bool param_is_first) {
        ExactC p;
        try {
            p = snap_progressive(param);
        } catch (const NumericError&) {
            return;
        }
        ExactC q;
        try {
            q = flat_completion(p);
        } catch (const Error&) {
            return;
        }
        double d = std::abs(to_approx(q) - other);
        if (d < best_d) {
            best_d = d;
            best = param_is_first ? Connection(p, q) : Connection(q, p);
        }
    };
    consider(l0, l1, true);
    consider(l1, l0, false);
    if (best && best_d > 1e-2) return std::nullopt;
    return best;
}

/// Structured section snap: the dominant component carries the overall
/// scale, snapped at the given tolerance, while the other component is
/// pinned by a tightly snapped ratio. Linear section equations admit
/// whole rays of solutions, so any exact scale on the ray qualifies;
/// coarse tolerances yield the simplest representative on the ray.
BaseForm ray_snap(const BaseForm& w, double scale_tol) {
    ApproxC a[2] = {to_approx(w.c[0]), to_approx(w.c[1])};
    int m = std::abs(a[1]) > std::abs(a[0]) ? 1 : 0;
    if (std::abs(a[m]) < 1e-9) return BaseForm::zero(0);
    ExactC ratio = from_approx(a[1 - m] / a[m]); // tight; may throw
    ExactC scale = from_approx(a[m], scale_tol);
    BaseForm out = BaseForm::zero(0);
    out.c[m] = scale;
    out.c[1 - m] = scale * ratio;
    return out;
}

} // namespace

std::string kind_name(CriticalPoint::Kind k) {
    switch (k) {
        case CriticalPoint::Kind::flat: return "flat";
        case CriticalPoint::Kind::ym_nonflat: return "ym-nonflat";
        case CriticalPoint::Kind::matter: return "matter";
        default: return "unclassified";
    }
}

std::vector<FlatEntry> enumerate_flat(const std::vector<ExactC>& samples) {
    std::vector<FlatEntry> out;
    out.reserve(samples.size());
    for (const ExactC& l0 : samples) {
        FlatEntry e;
        e.lambda0 = l0;
        try {
            e.conn = Connection(l0, flat_completion(l0));
        } catch (const Error& err) {
            e.error = err.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

CriticalPoint find_critical_ym(const ApproxC& seed0, const ApproxC& seed1,
                               const SolveOptions& opts) {
    CriticalPoint out;
    Vec x = {seed0.real(), seed0.imag(), seed1.real(), seed1.imag()};
    int iters = 0;
    LmEnd end;
    bool located = false;
    for (int attempt = 0; attempt <= opts.max_restarts && iters < opts.max_iter; ++attempt) {
        end = lm_minimize(ym_residual_float, ym_jacobian_float, x, opts, iters);
        if (end.step_converged && end.f < 1e-20) {
            located = true;
            break;
        }
        // Converged to a spurious residual-norm minimum (or stalled):
        // deterministic jitter and continue within the same budget.
        x = end.x;
        for (std::size_t j = 0; j < x.size(); ++j)
            x[j] += 0.45 * std::sin(2.7 * static_cast<double>(j) +
                                    1.9 * static_cast<double>(attempt) + 0.6);
    }
    out.iterations = iters;
    out.residual_norm = end.f;
    C l0(end.x[0], end.x[1]), l1(end.x[2], end.x[3]);
    out.lambda0_float = l0;
    out.lambda1_float = l1;
    if (!located) {
        out.diagnostic = "no stationary point located within the iteration budget";
        return out;
    }

    double d_ym = dist_to_distinguished(l0, l1);
    double d_flat = dist_to_flat(l0, l1);
    if (d_ym < opts.match_tol && d_ym <= d_flat) {
        out.kind = CriticalPoint::Kind::ym_nonflat;
        out.omega = Connection::yang_mills();
        out.exactified = true;
        out.certificate.emplace_back("stationarity", ym_residual(out.omega));
    } else if (d_flat < opts.match_tol) {
        std::optional<Connection> snapped = snap_flat(l0, l1);
        if (!snapped) {
            out.kind = CriticalPoint::Kind::flat;
            out.diagnostic = "flat endpoint did not snap under the denominator bound";
            return out;
        }
        out.kind = CriticalPoint::Kind::flat;
        out.omega = *snapped;
        out.exactified = true;
        out.certificate.emplace_back("stationarity", ym_residual(out.omega));
        out.certificate.emplace_back("curvature", base_to_residual(curvature(out.omega)));
    } else {
        out.diagnostic = "endpoint matches no known stationary family";
        return out;
    }
    out.certified = true;
    for (const auto& [name, res] : out.certificate)
        if (!res.is_zero()) out.certified = false;
    return out;
}

namespace {

struct MatterLayout {
    bool vary_omega = true;
    bool vary_sections = true;
    Connection omega0;
    BaseForm t10 = BaseForm::zero(0);
    BaseForm t20 = BaseForm::zero(0);

    std::size_t size() const {
        return (vary_omega ? 4 : 0) + (vary_sections ? 8 : 0);
    }

    Vec pack() const {
        Vec x;
        auto push = [&x](const ExactC& z) {
            ApproxC a = to_approx(z);
            x.push_back(a.real());
            x.push_back(a.imag());
        };
        if (vary_omega) {
            push(omega0.lambda0);
            push(omega0.lambda1);
        }
        if (vary_sections)
            for (const BaseForm* s : {&t10, &t20}) {
                push(s->c[0]);
                push(s->c[1]);
            }
        return x;
    }

    void unpack(const Vec& x, Connection& conn, BaseForm& v1, BaseForm& v2) const {
        std::size_t i = 0;
        auto take = [&]() {
            ExactC z = exact_from_components(x[i], x[i + 1]);
            i += 2;
            return z;
        };
        if (vary_omega) {
            ExactC a = take(), b = take();
            conn = Connection(a, b);
        } else {
            conn = omega0;
        }
        if (vary_sections) {
            v1 = BaseForm(0, take(), take());
            v2 = BaseForm(0, take(), take());
        } else {
            v1 = t10;
            v2 = t20;
        }
    }
};

void push_comps(Vec& out, const Residual& r) {
    for (const auto& [name, v] : r.comps) {
        ApproxC a = to_approx(v);
        out.push_back(a.real());
        out.push_back(a.imag());
    }
}

std::vector<std::pair<std::string, Residual>> matter_certificate(
    Corep corep, const Potential& v, const Connection& conn, const Section& t1,
    const Section& t2) {
    std::vector<std::pair<std::string, Residual>> cert;
    if (corep == Corep::trivial) {
        YmsmResiduals r = ymsm_residuals(conn, t1, t2, v);
        cert.emplace_back("connection stationarity", std::move(r.connection_direction));
        cert.emplace_back("left section equation", std::move(r.left_section));
        cert.emplace_back("right section equation", std::move(r.right_section));
    } else {
        AltSystem sys = alt_component_equations(conn, t1, t2);
        cert.emplace_back("component stationarity", std::move(sys.stationarity));
        BaseForm id_l = laplacian(conn, t1, Side::left).comp - t1.value;
        BaseForm id_r = laplacian(conn, t2, Side::right).comp - t2.value;
        cert.emplace_back("left laplacian identity", base_to_residual(id_l));
        cert.emplace_back("right laplacian identity", base_to_residual(id_r));
    }
    return cert;
}

} // namespace

CriticalPoint find_critical_ymsm(Corep corep, const Potential& v,
                                 const Connection& omega_seed,
                                 const BaseForm& t1_seed, const BaseForm& t2_seed,
                                 const SolveOptions& opts) {
    if (t1_seed.degree != 0 || t2_seed.degree != 0)
        throw DomainError("section seeds must have degree 0");
    MatterLayout layout;
    layout.vary_omega = !opts.freeze_omega;
    layout.vary_sections = !opts.freeze_sections;
    layout.omega0 = omega_seed;
    layout.t10 = t1_seed;
    layout.t20 = t2_seed;

    auto resid = [&](const Vec& x) {
        Connection conn;
        BaseForm v1 = BaseForm::zero(0), v2 = BaseForm::zero(0);
        layout.unpack(x, conn, v1, v2);
        Section t1{corep, v1}, t2{corep, v2};
        Vec r;
        if (corep == Corep::trivial) {
            YmsmResiduals rr = ymsm_residuals(conn, t1, t2, v);
            push_comps(r, rr.connection_direction);
            push_comps(r, rr.left_section);
            push_comps(r, rr.right_section);
        } else {
            AltSystem sys = alt_component_equations(conn, t1, t2);
            push_comps(r, sys.stationarity);
            push_comps(r, base_to_residual(laplacian(conn, t1, Side::left).comp - v1));
            push_comps(r, base_to_residual(laplacian(conn, t2, Side::right).comp - v2));
        }
        return r;
    };

    CriticalPoint out;
    out.potential = v;
    int iters = 0;
    LmEnd end;
    if (layout.size() == 0) {
        // Everything frozen: plain evaluation at the seed.
        end.x = {};
        end.f = norm2(resid({}));
        end.step_converged = true;
        out.iterations = 0;
    } else {
        end = lm_minimize(resid, JacFn{}, layout.pack(), opts, iters);
        out.iterations = iters;
    }
    out.residual_norm = end.f;

    Connection conn;
    BaseForm v1 = BaseForm::zero(0), v2 = BaseForm::zero(0);
    layout.unpack(end.x, conn, v1, v2);
    out.lambda0_float = to_approx(conn.lambda0);
    out.lambda1_float = to_approx(conn.lambda1);
    if (!end.step_converged && end.f > 1e-20) {
        out.diagnostic = "no stationary point located within the iteration budget";
        return out;
    }

    // Exactify. Located solution families can be positive-dimensional
    // (flat connection families; section rays under linear section
    // equations), so besides the tight componentwise snap each leg gets a
    // structured candidate: the connection snaps onto the flat family by
    // exact completion, a section snaps its direction tightly and its
    // overall scale as finely as the denominator bound allows. Every
    // combination is re-verified by the exact certificate; the first one
    // that certifies wins.
    out.kind = CriticalPoint::Kind::matter;
    std::vector<std::pair<BaseForm, BaseForm>> section_cands;
    if (!layout.vary_sections) {
        section_cands.emplace_back(t1_seed, t2_seed);
    } else {
        // Ray candidates: the search is free to wander along scale-free
        // solution rays, so restore the seed's scale (the intended
        // representative) before snapping, coarsest scales first.
        auto rescale = [](const BaseForm& w, const BaseForm& ref) {
            double wn = std::sqrt(std::norm(to_approx(w.c[0])) + std::norm(to_approx(w.c[1])));
            double rn =
                std::sqrt(std::norm(to_approx(ref.c[0])) + std::norm(to_approx(ref.c[1])));
            if (wn < 1e-12 || rn < 1e-12) return w;
            ExactC f = exact_from_components(rn / wn, 0.0);
            return BaseForm(0, f * w.c[0], f * w.c[1]);
        };
        BaseForm r1 = rescale(v1, t1_seed), r2 = rescale(v2, t2_seed);
        for (double tol : {1e-1, 1e-3, 1e-5, 1e-7, 1e-9}) {
            try {
                std::pair<BaseForm, BaseForm> cand(ray_snap(r1, tol), ray_snap(r2, tol));
                if (std::find(section_cands.begin(), section_cands.end(), cand) ==
                    section_cands.end())
                    section_cands.push_back(std::move(cand));
            } catch (const NumericError&) {
            }
        }
        try {
            std::pair<BaseForm, BaseForm> tight(
                BaseForm(0, from_approx(to_approx(v1.c[0])), from_approx(to_approx(v1.c[1]))),
                BaseForm(0, from_approx(to_approx(v2.c[0])), from_approx(to_approx(v2.c[1]))));
            if (std::find(section_cands.begin(), section_cands.end(), tight) ==
                section_cands.end())
                section_cands.push_back(std::move(tight));
        } catch (const NumericError&) {
        }
    }
    std::vector<Connection> omega_cands;
    if (!layout.vary_omega) {
        omega_cands.push_back(omega_seed);
    } else {
        try {
            omega_cands.emplace_back(from_approx(out.lambda0_float), from_approx(out.lambda1_float));
        } catch (const NumericError&) {
        }
        if (auto fl = snap_flat(out.lambda0_float, out.lambda1_float)) omega_cands.push_back(*fl);
    }
    if (omega_cands.empty() || section_cands.empty()) {
        out.diagnostic = "endpoint did not snap under the denominator bound";
        return out;
    }
    bool placed = false;
    for (const Connection& oc : omega_cands) {
        for (const auto& [s1, s2] : section_cands) {
            Section c1{corep, s1}, c2{corep, s2};
            auto cert = matter_certificate(corep, v, oc, c1, c2);
            bool ok = true;
            for (const auto& [name, res] : cert)
                if (!res.is_zero()) ok = false;
            if (ok || !placed) {
                out.omega = oc;
                out.t1 = c1;
                out.t2 = c2;
                out.exactified = true;
                out.certificate = std::move(cert);
                out.certified = ok;
                placed = true;
            }
            if (ok) return out;
        }
    }
    out.diagnostic = "snapped endpoint fails the exact equations";
    return out;
}

ClassifyReport classify(const CriticalPoint& p) {
    ClassifyReport r;
    r.kind = p.kind;
    r.name = kind_name(p.kind);
    if (!p.exactified) return r;
    if (p.t1 && p.t2 && p.potential)
        r.action = action_ymsm(p.omega, *p.t1, *p.t2, *p.potential);
    else
        r.action = action_ym(p.omega);
    r.flat_point = curvature(p.omega).is_zero();
    r.orbit_fixed = gauge_action(gauge_unit(), p.omega) == p.omega &&
                    gauge_action(gauge_involution(), p.omega) == p.omega;
    return r;
}

} // namespace qpb
