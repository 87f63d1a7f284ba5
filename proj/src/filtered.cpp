#include "hadamat/filtered.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hadamat/errors.hpp"

namespace hadamat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool any_negative(const Vector& v, double eps) {
    return std::any_of(v.begin(), v.end(), [eps](double x) { return x < -eps; });
}

bool is_indicator(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0 || x == 1.0; });
}

} // namespace

void FilteredRep::validate() const {
    if (partitions.empty() || partitions.size() != layers.size())
        throw PreconditionFailed("filtered rep needs one (a,b) pair per partition");
    if (!partitions.back().is_discrete())
        throw PreconditionFailed("last partition must be the discrete one");
    const std::size_t nn = n();
    for (std::size_t s = 0; s < partitions.size(); ++s) {
        if (partitions[s].n() != nn) throw PreconditionFailed("partition size mismatch");
        if (layers[s].a.size() != nn || layers[s].b.size() != nn)
            throw PreconditionFailed("layer vector size mismatch");
        if (s + 1 < partitions.size()) {
            if (!refines(partitions[s], partitions[s + 1]))
                throw PreconditionFailed("partitions are not increasing");
            if (!is_measurable(layers[s].a, partitions[s + 1]) ||
                !is_measurable(layers[s].b, partitions[s + 1]))
                throw PreconditionFailed("layer factors must be measurable w.r.t. the next partition");
        }
    }
}

Matrix FilteredRep::materialize() const {
    Matrix u(n());
    for (std::size_t s = 0; s < layers.size(); ++s) {
        const Matrix e = conditional_expectation(partitions[s]);
        for (std::size_t i = 0; i < n(); ++i)
            for (std::size_t j = 0; j < n(); ++j)
                u(i, j) += layers[s].a[i] * e(i, j) * layers[s].b[j];
    }
    return u;
}

FilteredRep FilteredRep::truncated(std::size_t p) const {
    FilteredRep r = *this;
    for (std::size_t s = 0; s < p && s < r.layers.size(); ++s) {
        std::fill(r.layers[s].a.begin(), r.layers[s].a.end(), 0.0);
        std::fill(r.layers[s].b.begin(), r.layers[s].b.end(), 0.0);
    }
    return r;
}

void SfmRep::validate() const {
    if (partitions.empty() || partitions.size() != layers.size())
        throw PreconditionFailed("SFM rep needs one layer per partition");
    if (!partitions.front().is_trivial() || !partitions.back().is_discrete())
        throw PreconditionFailed("filtration must run from the trivial partition to singletons");
    const std::size_t nn = n();
    const std::size_t k = layers.size() - 1;
    for (std::size_t s = 0; s <= k; ++s) {
        const auto& ly = layers[s];
        if (ly.C.size() != nn || ly.Gamma.size() != nn || ly.p.size() != nn || ly.q.size() != nn)
            throw PreconditionFailed("layer vector size mismatch");
        if (s + 1 <= k && !refines(partitions[s], partitions[s + 1]))
            throw PreconditionFailed("partitions are not increasing");
        if (!is_measurable(ly.C, partitions[s]) || !is_measurable(ly.Gamma, partitions[s]))
            throw PreconditionFailed("C, Gamma must be measurable at their own level");
        if (!is_indicator(ly.p) || !is_indicator(ly.q))
            throw PreconditionFailed("p, q must be 0/1 vectors");
        for (std::size_t i = 0; i < nn; ++i)
            if (ly.p[i] + ly.q[i] != 1.0)
                throw PreconditionFailed("{p,q} must partition the index set");
        const Partition& fine = partitions[std::min(s + 1, k)];
        if (!is_measurable(ly.p, fine))
            throw PreconditionFailed("p must be measurable w.r.t. the next partition");
    }
    if (any_negative(layers[k].Gamma, 0.0) || max_norm(diagonal(layers[k].Gamma)) != 0.0)
        throw PreconditionFailed("Gamma_k must vanish");
}

Matrix SfmRep::materialize() const {
    Matrix u(n());
    for (std::size_t s = 0; s < layers.size(); ++s) {
        const Matrix f = incidence_matrix(partitions[s]);
        const auto& ly = layers[s];
        for (std::size_t i = 0; i < n(); ++i)
            for (std::size_t j = 0; j < n(); ++j)
                u(i, j) += ly.C[i] * f(i, j) + ly.Gamma[i] * ly.p[i] * f(i, j) * ly.q[j];
    }
    return u;
}

Vector SfmRep::c(std::size_t s) const {
    return hadamard(layers[s].C, partitions[s].atom_sizes());
}

Vector SfmRep::gamma(std::size_t s) const {
    return hadamard(layers[s].Gamma, partitions[s].atom_sizes());
}

FilteredRep SfmRep::to_filtered() const {
    FilteredRep rep;
    const std::size_t k = layers.size() - 1;
    for (std::size_t s = 0; s <= k; ++s) {
        rep.partitions.push_back(partitions[s]);
        rep.layers.push_back({c(s), ones(n())});
        if (s < k) {
            rep.partitions.push_back(partitions[s]);
            rep.layers.push_back({hadamard(gamma(s), layers[s].p), layers[s].q});
        }
    }
    return rep;
}

AlgoTrace invert_filtered(const FilteredRep& rep, double t, const Tolerance& tol) {
    rep.validate();
    if (t < 0.0) throw PreconditionFailed("t must be nonnegative");
    const std::size_t nn = rep.n();
    const std::size_t lcount = rep.levels();
    const int top = static_cast<int>(lcount) - 1;

    AlgoTrace tr;
    tr.t = t;
    tr.lambda.assign(lcount, {});
    tr.mu.assign(lcount, {});
    tr.kappa.assign(lcount, {});
    tr.sigma.assign(lcount, {});

    auto a = [&](int s) { return rep.layers[s].a; };
    auto b = [&](int s) { return rep.layers[s].b; };
    auto expectv = [&](int s, const Vector& v) { return expect(rep.partitions[s], v); };

    tr.lambda[top] = ones(nn);
    tr.mu[top] = ones(nn);
    tr.kappa[top] = ones(nn);
    {
        Vector sig(nn);
        for (std::size_t i = 0; i < nn; ++i)
            sig[i] = 1.0 / (1.0 + t * a(top)[i] * b(top)[i]);
        tr.sigma[top] = sig;
    }

    // one update "layer s+1 acts on lambda/mu"; also used for s = -1
    auto step_down = [&](int s) {
        const int up = s + 1;
        const Vector eb = expectv(up, hadamard(tr.kappa[up], b(up)));
        const Vector ea = expectv(up, hadamard(tr.kappa[up], a(up)));
        Vector lam(nn), mu(nn);
        for (std::size_t i = 0; i < nn; ++i) {
            lam[i] = tr.lambda[up][i] * (1.0 - tr.sigma[up][i] * t * a(up)[i] * eb[i]);
            mu[i] = tr.mu[up][i] * (1.0 - tr.sigma[up][i] * t * b(up)[i] * ea[i]);
        }
        return std::pair{lam, mu};
    };

    for (int s = top - 1; s >= 0; --s) {
        auto [lam, mu] = step_down(s);
        tr.lambda[s] = lam;
        tr.mu[s] = mu;
        if (any_negative(lam, tol.abs_eps) || any_negative(mu, tol.abs_eps)) {
            tr.stop_index = s;
            return tr;
        }
        tr.kappa[s] = expectv(s + 1, lam);
        const Vector kab = expectv(s, hadamard(tr.kappa[s], hadamard(a(s), b(s))));
        Vector sig(nn);
        for (std::size_t i = 0; i < nn; ++i) sig[i] = 1.0 / (1.0 + t * kab[i]);
        tr.sigma[s] = sig;
    }

    {
        // virtual s = -1 step to obtain the equilibrium potentials of I + tU
        const int up = 0;
        const Vector eb = expectv(up, hadamard(tr.kappa[up], b(up)));
        const Vector ea = expectv(up, hadamard(tr.kappa[up], a(up)));
        tr.lambda_final.resize(nn);
        tr.mu_final.resize(nn);
        for (std::size_t i = 0; i < nn; ++i) {
            tr.lambda_final[i] = tr.lambda[up][i] * (1.0 - tr.sigma[up][i] * t * a(up)[i] * eb[i]);
            tr.mu_final[i] = tr.mu[up][i] * (1.0 - tr.sigma[up][i] * t * b(up)[i] * ea[i]);
        }
    }
    if (any_negative(tr.lambda_final, tol.abs_eps) || any_negative(tr.mu_final, tol.abs_eps)) {
        tr.stop_index = -1;
        return tr;
    }

    tr.n_matrix = Matrix(nn);
    for (int s = 0; s <= top; ++s) {
        const Matrix e = conditional_expectation(rep.partitions[s]);
        for (std::size_t i = 0; i < nn; ++i) {
            const double left = t * tr.sigma[s][i] * tr.lambda[s][i] * a(s)[i];
            if (left == 0.0) continue;
            for (std::size_t j = 0; j < nn; ++j)
                tr.n_matrix(i, j) += left * e(i, j) * b(s)[j] * tr.mu[s][j];
        }
    }
    tr.success = true;
    return tr;
}

AlgoTrace invert_sfm(const SfmRep& rep, double t, const Tolerance& tol) {
    rep.validate();
    if (t < 0.0) throw PreconditionFailed("t must be nonnegative");
    const std::size_t nn = rep.n();
    const std::size_t lcount = rep.levels();
    const int top = static_cast<int>(lcount) - 1;

    AlgoTrace tr;
    tr.t = t;
    tr.lambda.assign(lcount, {});
    tr.mu.assign(lcount, {});
    tr.kappa.assign(lcount, {});
    tr.sigma.assign(lcount, {});
    tr.l.assign(lcount, {});
    tr.m.assign(lcount, {});
    tr.d.assign(lcount, {});

    auto d_from_kappa = [&](const Vector& kap) {
        Vector d(nn);
        for (std::size_t i = 0; i < nn; ++i) d[i] = kap[i] == 0.0 ? kInf : 1.0 / kap[i];
        return d;
    };

    tr.kappa[top] = ones(nn);
    tr.l[top] = ones(nn);
    tr.m[top] = ones(nn);
    tr.lambda[top] = ones(nn);
    tr.mu[top] = ones(nn);
    tr.d[top] = d_from_kappa(tr.kappa[top]);
    {
        const Vector ck = rep.c(top);
        Vector sig(nn);
        for (std::size_t i = 0; i < nn; ++i) sig[i] = 1.0 / (1.0 + t * ck[i]);
        tr.sigma[top] = sig;
    }

    for (int s = top - 1; s >= 0; --s) {
        const auto& ly = rep.layers[s];
        const Vector gam = rep.gamma(s);
        // w = 1 / (t c_{s+1} + d_{s+1}) expressed through kappa to keep finite arithmetic
        Vector w(nn);
        for (std::size_t i = 0; i < nn; ++i)
            w[i] = tr.kappa[s + 1][i] * tr.sigma[s + 1][i];
        const Vector eqw = expect(rep.partitions[s], hadamard(ly.q, w));
        const Vector epw = expect(rep.partitions[s], hadamard(ly.p, w));

        Vector lam(nn), lv(nn), mu(nn), mv(nn);
        for (std::size_t i = 0; i < nn; ++i) {
            lam[i] = tr.sigma[s + 1][i] * tr.l[s + 1][i];
            lv[i] = lam[i] * (1.0 - t * gam[i] * ly.p[i] * eqw[i]);
            mu[i] = tr.sigma[s + 1][i] * tr.m[s + 1][i];
            mv[i] = mu[i] * (1.0 - t * gam[i] * ly.q[i] * epw[i]);
        }
        tr.lambda[s] = lam;
        tr.l[s] = lv;
        tr.mu[s] = mu;
        tr.m[s] = mv;
        if (any_negative(lam, tol.abs_eps) || any_negative(lv, tol.abs_eps) ||
            any_negative(mu, tol.abs_eps) || any_negative(mv, tol.abs_eps)) {
            tr.stop_index = s;
            return tr;
        }
        tr.kappa[s] = expect(rep.partitions[s], lv);
        tr.d[s] = d_from_kappa(tr.kappa[s]);
        const Vector cs = rep.c(s);
        Vector sig(nn);
        for (std::size_t i = 0; i < nn; ++i)
            sig[i] = 1.0 / (1.0 + tr.kappa[s][i] * t * cs[i]);
        tr.sigma[s] = sig;
    }

    tr.lambda_final.resize(nn);
    tr.mu_final.resize(nn);
    for (std::size_t i = 0; i < nn; ++i) {
        tr.lambda_final[i] = tr.sigma[0][i] * tr.l[0][i];
        tr.mu_final[i] = tr.sigma[0][i] * tr.m[0][i];
    }
    if (any_negative(tr.lambda_final, tol.abs_eps) || any_negative(tr.mu_final, tol.abs_eps)) {
        tr.stop_index = -1;
        return tr;
    }

    tr.n_matrix = Matrix(nn);
    for (int s = 0; s <= top; ++s) {
        const Matrix e = conditional_expectation(rep.partitions[s]);
        const Vector cs = rep.c(s);
        const Vector gam = rep.gamma(s);
        const auto& ly = rep.layers[s];
        for (std::size_t i = 0; i < nn; ++i) {
            const double left_c = t * cs[i] * tr.sigma[s][i] * tr.l[s][i];
            const double left_g = s < top ? t * gam[i] * tr.lambda[s][i] * ly.p[i] : 0.0;
            for (std::size_t j = 0; j < nn; ++j) {
                tr.n_matrix(i, j) += left_c * e(i, j) * tr.m[s][j];
                if (left_g != 0.0)
                    tr.n_matrix(i, j) += left_g * e(i, j) * ly.q[j] * tr.mu[s][j];
            }
        }
    }
    tr.success = true;
    return tr;
}

Vector rho(const SfmRep& rep, std::size_t s) {
    const auto& ly = rep.layers[s];
    const Vector ep = expect(rep.partitions[s], ly.p);
    const Vector eq = expect(rep.partitions[s], ly.q);
    Vector r(rep.n());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = ep[i] * ly.p[i] + eq[i] * ly.q[i];
    return r;
}

bool check_invM_condition(const SfmRep& rep, const Tolerance& tol) {
    rep.validate();
    const std::size_t nn = rep.n();
    const int k = static_cast<int>(rep.levels()) - 1;
    Vector kap = ones(nn);   // kappa_k = 1/d_k with d_k = 1
    for (int s = k - 1; s >= 0; --s) {
        const Vector cs1 = rep.c(s + 1);
        const Vector gam = rep.gamma(s);
        const Vector rh = rho(rep, s);
        // desigualdad: rho_s gamma_s <= c_{s+1} + d_{s+1}, via kappa to dodge infinities
        for (std::size_t i = 0; i < nn; ++i) {
            if (kap[i] < -tol.abs_eps) return false;
            const double lhs = rh[i] * gam[i] - cs1[i];
            if (lhs > tol.abs_eps && std::max(kap[i], 0.0) * lhs > 1.0 + tol.abs_eps)
                return false;
        }
        // iteracion: 1/d_s = E_s(w) - gamma_s E_s(p w) E_s(q w), w = 1/(c_{s+1}+d_{s+1})
        Vector w(nn);
        for (std::size_t i = 0; i < nn; ++i) {
            const double kk = std::max(kap[i], 0.0);
            w[i] = kk / (1.0 + kk * cs1[i]);
        }
        const auto& ly = rep.layers[s];
        const Vector ew = expect(rep.partitions[s], w);
        const Vector epw = expect(rep.partitions[s], hadamard(ly.p, w));
        const Vector eqw = expect(rep.partitions[s], hadamard(ly.q, w));
        for (std::size_t i = 0; i < nn; ++i)
            kap[i] = ew[i] - gam[i] * epw[i] * eqw[i];
    }
    return !any_negative(kap, tol.abs_eps);
}

bool check_gum_condition(const SfmRep& rep, const Tolerance& tol) {
    rep.validate();
    const int k = static_cast<int>(rep.levels()) - 1;
    for (int s = k - 1; s >= 0; --s) {
        const Vector lhs = hadamard(rho(rep, s), rep.gamma(s));
        const Vector cs1 = rep.c(s + 1);
        const Vector gs1 = rep.gamma(s + 1);
        for (std::size_t i = 0; i < rep.n(); ++i)
            if (lhs[i] > cs1[i] + gs1[i] + tol.abs_eps) return false;
    }
    return true;
}

bool check_tail_sum_condition(const SfmRep& rep, const Tolerance& tol) {
    rep.validate();
    const int k = static_cast<int>(rep.levels()) - 1;
    Vector tail(rep.n(), 0.0);   // sum_{r>s} c_r, accumulated backward
    for (int s = k - 1; s >= 0; --s) {
        const Vector cs1 = rep.c(s + 1);
        for (std::size_t i = 0; i < rep.n(); ++i) tail[i] += cs1[i];
        const Vector lhs = hadamard(rho(rep, s), rep.gamma(s));
        for (std::size_t i = 0; i < rep.n(); ++i)
            if (lhs[i] > tail[i] + tol.abs_eps) return false;
    }
    return true;
}

SfmRep cbf_to_sfm(const Matrix& u) {
    const std::size_t nn = u.size();
    if (nn == 0) throw PreconditionFailed("empty matrix");

    struct Block {
        std::size_t lo, hi;     // contiguous index range [lo, hi)
        double offset = 0.0;    // accumulated alpha subtracted so far
        bool fresh = true;      // leftover diagonal not yet emitted (singletons)
    };

    // find a split of U[lo,hi) - offset with constant off-diagonal blocks
    auto find_split = [&](const Block& blk, std::size_t& split, double& alpha, double& beta) {
        for (std::size_t p = blk.lo + 1; p < blk.hi; ++p) {
            alpha = u(blk.lo, p) - blk.offset;
            beta = u(p, blk.lo) - blk.offset;
            bool ok = true;
            for (std::size_t i = blk.lo; i < p && ok; ++i)
                for (std::size_t j = p; j < blk.hi && ok; ++j)
                    if (u(i, j) - blk.offset != alpha || u(j, i) - blk.offset != beta)
                        ok = false;
            if (ok) { split = p; return true; }
        }
        return false;
    };

    SfmRep rep;
    std::vector<Block> blocks{{0, nn, 0.0, true}};
    while (true) {
        std::vector<std::vector<std::size_t>> atoms;
        for (const auto& blk : blocks) {
            std::vector<std::size_t> atom(blk.hi - blk.lo);
            for (std::size_t i = blk.lo; i < blk.hi; ++i) atom[i - blk.lo] = i;
            atoms.push_back(std::move(atom));
        }
        rep.partitions.emplace_back(nn, atoms);
        SfmLayer ly{Vector(nn, 0.0), Vector(nn, 0.0), Vector(nn, 0.0), Vector(nn, 0.0)};

        bool all_singleton = true;
        std::vector<Block> next;
        for (auto& blk : blocks) {
            if (blk.hi - blk.lo == 1) {
                const std::size_t i = blk.lo;
                if (blk.fresh) ly.C[i] = u(i, i) - blk.offset;
                ly.p[i] = 1.0;
                next.push_back({blk.lo, blk.hi, blk.offset, false});
                continue;
            }
            all_singleton = false;
            std::size_t split = 0;
            double alpha = 0.0, beta = 0.0;
            if (!find_split(blk, split, alpha, beta))
                throw NotCbf("no constant-block split found");
            for (std::size_t i = blk.lo; i < blk.hi; ++i) {
                ly.C[i] = alpha;
                ly.Gamma[i] = beta - alpha;
                if (i < split) ly.q[i] = 1.0;   // top (A) side
                else ly.p[i] = 1.0;             // bottom (B) side
            }
            next.push_back({blk.lo, split, blk.offset + alpha, true});
            next.push_back({split, blk.hi, blk.offset + alpha, true});
        }
        rep.layers.push_back(std::move(ly));
        if (all_singleton) break;
        blocks = std::move(next);
    }
    rep.validate();
    return rep;
}

std::optional<double> tau_filtered(const FilteredRep& rep, double t_max, const Tolerance& tol) {
    auto alive = [&](double t) {
        const AlgoTrace tr = invert_filtered(rep, t, tol);
        if (!tr.success) return false;
        auto strictly_pos = [&](const Vector& v) {
            return std::all_of(v.begin(), v.end(), [&](double x) { return positive(x, tol); });
        };
        return strictly_pos(tr.lambda_final) && strictly_pos(tr.mu_final);
    };
    if (alive(t_max)) return std::nullopt;
    double lo = 0.0, hi = t_max;
    while (hi - lo > 1e-8 && hi - lo > 1e-12 * std::max(1.0, lo)) {
        const double mid = 0.5 * (lo + hi);
        if (alive(mid)) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace hadamat
