#include "hadamat/tau.hpp"

#include <cmath>
#include <functional>

#include "hadamat/classes.hpp"
#include "hadamat/errors.hpp"
#include "hadamat/linalg.hpp"
#include "hadamat/structure.hpp"

namespace hadamat {

namespace {

// Bisection on a predicate that holds on an initial interval [0, t*).
TauResult bisect(const Matrix& u, double t_max, TauMethod method,
                 const std::function<bool(double)>& inside,
                 const std::function<std::string(double)>& describe) {
    TauResult res;
    res.method = method;
    if (inside(t_max)) return res;   // still inside at the cap: report infinity
    double lo = 0.0, hi = t_max;
    for (int it = 0; it < 100 && hi - lo > 1e-9; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (inside(mid)) lo = mid; else hi = mid;
    }
    res.value = 0.5 * (lo + hi);
    res.witness_t = hi;
    res.certificate = describe(hi);
    return res;
}

Matrix shift(const Matrix& u, double t) { return Matrix::identity(u.size()) + t * u; }

} // namespace

// Sign tests inside the bisection predicates are exact (tolerance zero).
// Near the threshold the crossing quantities have slopes that scale with the
// same powers of t as the floating-point noise, so exact tests keep the two
// detection methods within ~1e-9 of each other; a fixed slack would shift
// each method by slack/slope, which differs per method.
static const Tolerance kExact{0.0, 0.0};

TauResult tau_bisection(const Matrix& u, double t_max, const Tolerance& tol) {
    if (!is_nonnegative(u, tol).ok) throw PreconditionFailed("matrix must be nonnegative");
    auto inside = [&](double t) { return is_bipotential(shift(u, t), kExact).ok; };
    auto describe = [&](double t) { return is_bipotential(shift(u, t), kExact).detail; };
    return bisect(u, t_max, TauMethod::bisection, inside, describe);
}

TauResult tau_equilibrium_failure(const Matrix& u, double t_max, const Tolerance& tol) {
    if (!is_nonnegative(u, tol).ok) throw PreconditionFailed("matrix must be nonnegative");
    auto state = [&](double t) -> std::pair<bool, std::string> {
        try {
            const EquilibriumPotentials eq = equilibrium_potentials(shift(u, t));
            if (min_entry(eq.mu) < 0.0) return {false, "right equilibrium potential has a negative entry"};
            if (min_entry(eq.nu) < 0.0) return {false, "left equilibrium potential has a negative entry"};
            return {true, ""};
        } catch (const SingularError&) {
            return {false, "singular"};
        }
    };
    auto inside = [&](double t) { return state(t).first; };
    auto describe = [&](double t) { return state(t).second; };
    return bisect(u, t_max, TauMethod::equilibrium_failure, inside, describe);
}

TauAgreementReport check_tau_agreement(const Matrix& u, double t_max, const Tolerance& tol) {
    TauAgreementReport rep;
    rep.tau_membership = tau_bisection(u, t_max, tol);
    rep.tau_equilibrium = tau_equilibrium_failure(u, t_max, tol);
    rep.both_infinite = !rep.tau_membership.value && !rep.tau_equilibrium.value;
    if (rep.both_infinite) {
        rep.agree = true;
    } else if (rep.tau_membership.value && rep.tau_equilibrium.value) {
        rep.gap = std::fabs(*rep.tau_membership.value - *rep.tau_equilibrium.value);
        rep.agree = rep.gap <= 1e-6;
    }
    if (rep.tau_membership.value)
        rep.nonsingular_at_tau = !is_singular(shift(u, *rep.tau_membership.value));
    return rep;
}

CbfConvexReport check_cbf_convex(const Matrix& u, const ScalarFunction& f,
                                 const Tolerance& tol) {
    if (!f.is_strictly_increasing || !f.is_convex)
        throw PreconditionFailed("f must be strictly increasing and convex");
    if (!is_bipotential(u, tol).ok)
        throw PreconditionFailed("U must be a doubly dominant potential");
    if (is_increasing_cbf_permutation(u, tol).status == Trilean::no)
        throw PreconditionFailed("U is not a permutation of an increasing constant block form");
    CbfConvexReport rep;
    const Matrix fu = apply(f, u);
    rep.fu_bipotential = is_bipotential(fu, tol).ok;
    rep.tau_fu = tau_bisection(fu, 1e6, tol);
    return rep;
}

} // namespace hadamat
