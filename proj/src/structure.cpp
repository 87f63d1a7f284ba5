#include "hadamat/structure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "hadamat/classes.hpp"
#include "hadamat/errors.hpp"
#include "hadamat/hadamard.hpp"

namespace hadamat {

namespace {

bool eq(double a, double b, const Tolerance& tol) { return std::fabs(a - b) <= tol.abs_eps; }
bool ge(double a, double b, const Tolerance& tol) { return a >= b - tol.abs_eps; }

// Does i work as the preferred element of the triple {i,j,k}?
bool preferred(const Matrix& u, std::size_t i, std::size_t j, std::size_t k,
               const Tolerance& tol) {
    if (!eq(u(i, j), u(i, k), tol)) return false;
    if (!eq(u(j, i), u(k, i), tol)) return false;
    const double lo = std::min(u(j, i), u(i, j));
    const double hi = std::max(u(j, i), u(i, j));
    if (!ge(std::min(u(j, k), u(k, j)), lo, tol)) return false;
    if (!ge(std::max(u(j, k), u(k, j)), hi, tol)) return false;
    return true;
}

} // namespace

GumVerdict is_gum(const Matrix& u, const Tolerance& tol) {
    const std::size_t n = u.size();
    GumVerdict v;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (u(i, j) < -tol.abs_eps) {
                v.detail = "negative entry";
                v.triple = {i + 1, j + 1, j + 1};
                return v;
            }
            if (!ge(u(i, i), u(i, j), tol) || !ge(u(i, i), u(j, i), tol)) {
                v.detail = "diagonal dominance fails";
                v.triple = {i + 1, j + 1, j + 1};
                return v;
            }
        }
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!preferred(u, i, j, k, tol) && !preferred(u, j, i, k, tol) &&
                    !preferred(u, k, i, j, tol)) {
                    v.detail = "triple has no preferred element";
                    v.triple = {i + 1, j + 1, k + 1};
                    return v;
                }
            }
    v.ok = true;
    return v;
}

bool is_ultrametric(const Matrix& u, const Tolerance& tol) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (!eq(u(i, j), u(j, i), tol)) return false;
    return is_gum(u, tol).ok;
}

namespace {

// Nested-block-form check on a contiguous index window [lo, hi).
bool nbf_block(const Matrix& u, std::size_t lo, std::size_t hi, const Tolerance& tol) {
    const std::size_t m = hi - lo;
    if (m <= 1) return u(lo, lo) >= -tol.abs_eps;
    for (std::size_t p = lo + 1; p < hi; ++p) {
        const double alpha = u(lo, p);
        const double beta = u(p, lo);
        if (alpha < -tol.abs_eps || alpha > beta + tol.abs_eps) continue;
        bool ok = true;
        for (std::size_t i = lo; i < p && ok; ++i)
            for (std::size_t j = p; j < hi && ok; ++j)
                if (!eq(u(i, j), alpha, tol) || !eq(u(j, i), beta, tol)) ok = false;
        if (!ok) continue;
        auto block_ok = [&](std::size_t b0, std::size_t b1) {
            for (std::size_t i = b0; i < b1; ++i)
                for (std::size_t j = i; j < b1; ++j) {
                    if (!ge(std::min(u(i, j), u(j, i)), alpha, tol)) return false;
                    if (!ge(std::max(u(i, j), u(j, i)), beta, tol)) return false;
                }
            return true;
        };
        if (!block_ok(lo, p) || !block_ok(p, hi)) continue;
        if (nbf_block(u, lo, p, tol) && nbf_block(u, p, hi, tol)) return true;
    }
    return false;
}

} // namespace

bool is_nbf(const Matrix& u, const Tolerance& tol) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j)
            if (u(i, j) < -tol.abs_eps) return false;
    if (u.size() == 0) return true;
    return nbf_block(u, 0, u.size(), tol);
}

Matrix permute_similar(const Matrix& u, const std::vector<std::size_t>& perm) {
    if (perm.size() != u.size()) throw DimensionMismatch();
    Matrix r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) r(i, j) = u(perm[i], perm[j]);
    return r;
}

namespace {

// Connected components of "min(U_ij, U_ji) > threshold" on a subset.
std::vector<std::vector<std::size_t>> level_components(const Matrix& u,
                                                       const std::vector<std::size_t>& idx,
                                                       double threshold,
                                                       const Tolerance& tol) {
    const std::size_t m = idx.size();
    std::vector<std::size_t> root(m);
    std::iota(root.begin(), root.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            const double lo = std::min(u(idx[a], idx[b]), u(idx[b], idx[a]));
            if (lo > threshold + tol.abs_eps) root[find(a)] = find(b);
        }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t a = 0; a < m; ++a) groups[find(a)].push_back(idx[a]);
    std::vector<std::vector<std::size_t>> comps;
    for (auto& [_, g] : groups) comps.push_back(std::move(g));
    return comps;
}

double min_pair(const Matrix& u, const std::vector<std::size_t>& idx) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            best = std::min(best, std::min(u(idx[a], idx[b]), u(idx[b], idx[a])));
    return best;
}

// Constant value of the block rows(top) x cols(bottom), or nullopt.
std::optional<double> block_constant(const Matrix& u, const std::vector<std::size_t>& rows,
                                     const std::vector<std::size_t>& cols,
                                     const Tolerance& tol) {
    const double v = u(rows.front(), cols.front());
    for (std::size_t i : rows)
        for (std::size_t j : cols)
            if (!eq(u(i, j), v, tol)) return std::nullopt;
    return v;
}

enum class SplitKind { nested, increasing };

// Exact recursive ordering search over component bipartitions. For `nested`
// the per-level min/max pair conditions are enforced; for `increasing` the
// min-entry condition is.
std::optional<std::vector<std::size_t>> order_search(const Matrix& u,
                                                     const std::vector<std::size_t>& idx,
                                                     SplitKind kind, const Tolerance& tol) {
    if (idx.size() <= 1) return idx;
    const double alpha0 = min_pair(u, idx);
    const auto comps = level_components(u, idx, alpha0, tol);
    const std::size_t m = comps.size();
    if (m < 2 || m > 20) return std::nullopt;

    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });

    for (std::uint32_t mask : masks) {
        std::vector<std::size_t> top, bottom;
        for (std::size_t c = 0; c < m; ++c)
            for (std::size_t i : comps[c]) (mask >> c & 1 ? top : bottom).push_back(i);
        const auto a = block_constant(u, top, bottom, tol);
        if (!a) continue;
        const auto b = block_constant(u, bottom, top, tol);
        if (!b) continue;
        if (*a < -tol.abs_eps) continue;
        if (kind == SplitKind::nested) {
            if (*a > *b + tol.abs_eps) continue;
            auto block_ok = [&](const std::vector<std::size_t>& blk) {
                for (std::size_t x = 0; x < blk.size(); ++x)
                    for (std::size_t y = x; y < blk.size(); ++y) {
                        const double lo = std::min(u(blk[x], blk[y]), u(blk[y], blk[x]));
                        const double hi = std::max(u(blk[x], blk[y]), u(blk[y], blk[x]));
                        if (!ge(lo, *a, tol) || !ge(hi, *b, tol)) return false;
                    }
                return true;
            };
            if (!block_ok(top) || !block_ok(bottom)) continue;
        } else {
            const double floor = std::min(*a, *b);
            auto block_ok = [&](const std::vector<std::size_t>& blk) {
                for (std::size_t x : blk)
                    for (std::size_t y : blk)
                        if (!ge(u(x, y), floor, tol)) return false;
                return true;
            };
            if (*b < -tol.abs_eps) continue;
            if (!block_ok(top) || !block_ok(bottom)) continue;
        }
        const auto to = order_search(u, top, kind, tol);
        if (!to) continue;
        const auto bo = order_search(u, bottom, kind, tol);
        if (!bo) continue;
        std::vector<std::size_t> out = *to;
        out.insert(out.end(), bo->begin(), bo->end());
        return out;
    }
    return std::nullopt;
}

} // namespace

std::vector<std::size_t> gum_to_nbf_permutation(const Matrix& u, const Tolerance& tol) {
    if (!is_gum(u, tol).ok) throw NotGum();
    std::vector<std::size_t> idx(u.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const auto order = order_search(u, idx, SplitKind::nested, tol);
    if (!order || !is_nbf(permute_similar(u, *order), tol))
        throw ConstructionFailed("no verified nested-block ordering found");
    return *order;
}

bool gum_nonsingular(const Matrix& u, const Tolerance& tol) {
    if (!is_gum(u, tol).ok) throw NotGum();
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < n && zero; ++j)
            if (std::fabs(u(i, j)) > tol.abs_eps) zero = false;
        if (zero) return false;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool same = true;
            for (std::size_t k = 0; k < n && same; ++k)
                if (!eq(u(i, k), u(j, k), tol)) same = false;
            if (same) return false;
        }
    return true;
}

namespace {

bool icbf_block(const Matrix& u, const std::vector<std::size_t>& idx, const Tolerance& tol) {
    const std::size_t m = idx.size();
    if (m <= 1) return true;
    for (std::size_t p = 1; p < m; ++p) {
        std::vector<std::size_t> top(idx.begin(), idx.begin() + p);
        std::vector<std::size_t> bottom(idx.begin() + p, idx.end());
        const auto a = block_constant(u, top, bottom, tol);
        if (!a) continue;
        const auto b = block_constant(u, bottom, top, tol);
        if (!b) continue;
        const double floor = std::min(*a, *b);
        bool ok = true;
        for (std::size_t x : idx)
            for (std::size_t y : idx)
                if (!ge(u(x, y), floor, tol)) { ok = false; break; }
        if (!ok) continue;
        if (icbf_block(u, top, tol) && icbf_block(u, bottom, tol)) return true;
    }
    return false;
}

} // namespace

bool is_increasing_cbf(const Matrix& u, const Tolerance& tol) {
    std::vector<std::size_t> idx(u.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return icbf_block(u, idx, tol);
}

CbfSearchResult is_increasing_cbf_permutation(const Matrix& u, const Tolerance& tol) {
    CbfSearchResult res;
    std::vector<std::size_t> idx(u.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (const auto order = order_search(u, idx, SplitKind::increasing, tol);
        order && is_increasing_cbf(permute_similar(u, *order), tol)) {
        res.status = Trilean::yes;
        res.permutation = *order;
        return res;
    }
    if (u.size() > 8) {
        res.status = Trilean::undecided;
        return res;
    }
    std::vector<std::size_t> perm = idx;
    do {
        if (is_increasing_cbf(permute_similar(u, perm), tol)) {
            res.status = Trilean::yes;
            res.permutation = perm;
            return res;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    res.status = Trilean::no;
    return res;
}

StructureReport structure_report(const Matrix& u, const Tolerance& tol) {
    StructureReport rep;
    rep.gum = is_gum(u, tol);
    rep.is_entrywise_diag_dominant =
        is_entrywise_row_dominant(u, tol).ok && is_entrywise_col_dominant(u, tol).ok;
    rep.is_ultrametric = is_ultrametric(u, tol);
    rep.is_nbf = is_nbf(u, tol);
    if (rep.gum.ok) {
        rep.nbf_permutation = gum_to_nbf_permutation(u, tol);
        rep.gum_nonsingular = gum_nonsingular(u, tol);
    }
    return rep;
}

SfmRep generate_gum_sfm(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw PreconditionFailed("n must be positive");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SfmRep rep;
    rep.partitions.push_back(Partition::trivial(n));
    std::vector<std::vector<std::size_t>> p_side;   // chosen child per level
    while (!rep.partitions.back().is_discrete()) {
        std::vector<std::vector<std::size_t>> atoms;
        std::vector<std::size_t> chosen;
        for (const auto& atom : rep.partitions.back().atoms()) {
            if (atom.size() == 1) {
                chosen.push_back(atom.front());
                atoms.push_back(atom);
                continue;
            }
            std::vector<std::size_t> shuffled = atom;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            const std::size_t cut =
                1 + static_cast<std::size_t>(unit(rng) * static_cast<double>(atom.size() - 1));
            std::vector<std::size_t> left(shuffled.begin(), shuffled.begin() + cut);
            std::vector<std::size_t> right(shuffled.begin() + cut, shuffled.end());
            for (std::size_t i : left) chosen.push_back(i);
            atoms.push_back(std::move(left));
            atoms.push_back(std::move(right));
        }
        rep.partitions.push_back(Partition(n, std::move(atoms)));
        p_side.push_back(std::move(chosen));
    }

    const std::size_t k = rep.partitions.size() - 1;
    rep.layers.assign(k + 1, SfmLayer{Vector(n, 0.0), Vector(n, 0.0), Vector(n, 0.0), Vector(n, 0.0)});
    for (std::size_t s = 0; s <= k; ++s) {
        for (const auto& atom : rep.partitions[s].atoms()) {
            const double c = s == k ? 0.2 + 1.8 * unit(rng) : 1.5 * unit(rng);
            for (std::size_t i : atom) rep.layers[s].C[i] = c;
        }
        if (s < k) {
            for (std::size_t i : p_side[s]) rep.layers[s].p[i] = 1.0;
            for (std::size_t i = 0; i < n; ++i) rep.layers[s].q[i] = 1.0 - rep.layers[s].p[i];
        } else {
            std::fill(rep.layers[s].p.begin(), rep.layers[s].p.end(), 1.0);
        }
    }
    // backward pass: Gamma_s bounded per atom by min(C_{s+1} + Gamma_{s+1})
    for (std::size_t s = k; s-- > 0;) {
        for (const auto& atom : rep.partitions[s].atoms()) {
            if (atom.size() == 1) continue;
            double bound = std::numeric_limits<double>::infinity();
            for (std::size_t i : atom)
                bound = std::min(bound, rep.layers[s + 1].C[i] + rep.layers[s + 1].Gamma[i]);
            const double g = bound * unit(rng);
            for (std::size_t i : atom) rep.layers[s].Gamma[i] = g;
        }
    }
    rep.validate();
    return rep;
}

Matrix generate_gum(std::size_t n, std::uint64_t seed) {
    const Matrix base = generate_gum_sfm(n, seed).materialize();
    std::mt19937_64 rng(seed ^ 0xd1342543de82ef95ULL);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const Matrix u = permute_similar(base, perm);
    if (!is_gum(u).ok)
        throw ConstructionFailed("generated matrix failed the ultrametric triple test");
    return u;
}

namespace {

std::vector<double> entry_levels(const Matrix& u, const Tolerance& tol) {
    std::vector<double> v(u.data());
    std::sort(v.begin(), v.end());
    std::vector<double> levels;
    for (double x : v)
        if (levels.empty() || x - levels.back() > tol.abs_eps) levels.push_back(x);
    return levels;
}

} // namespace

std::optional<ContrapositiveWitness> contrapositive_search(const Matrix& u,
                                                           const std::vector<double>& t_grid,
                                                           const Tolerance& tol) {
    if (!is_nonnegative(u, tol).ok) throw PreconditionFailed("matrix must be nonnegative");
    if (is_gum(u, tol).ok)
        throw PreconditionFailed("matrix already passes the ultrametric triple test");

    const std::vector<double> levels = entry_levels(u, tol);
    const std::size_t m = levels.size();

    struct Candidate {
        std::string desc;
        ScalarFunction fn;
    };
    std::vector<Candidate> family;
    family.push_back({"identity", fn_identity()});
    // cut-at-level step functions: 0 up to the cut, rank above, scaled
    for (std::size_t cut = 0; cut < m; ++cut) {
        std::vector<double> thr(levels.begin() + cut + 1, levels.end());
        if (thr.empty()) continue;
        for (double scale : {1.0, 10.0, 100.0, 1000.0}) {
            std::vector<double> vals(thr.size());
            for (std::size_t r = 0; r < thr.size(); ++r)
                vals[r] = scale * static_cast<double>(r + 1);
            std::ostringstream os;
            os << "step(cut=" << levels[cut] << ",scale=" << scale << ")";
            family.push_back({os.str(), fn_step(thr, vals)});
        }
    }
    // geometric separation of the levels: f(level_i) = M lambda^{m-1-i}
    for (double lambda : {0.25, 0.5, 0.75})
        for (double big : {10.0, 100.0, 1000.0, 10000.0}) {
            std::vector<double> thr, vals;
            for (std::size_t i = 0; i < m; ++i) {
                if (levels[i] <= tol.abs_eps) continue;
                thr.push_back(levels[i]);
                vals.push_back(big * std::pow(lambda, static_cast<double>(m - 1 - i)));
            }
            if (thr.empty()) continue;
            std::ostringstream os;
            os << "geometric(lambda=" << lambda << ",scale=" << big << ")";
            family.push_back({os.str(), fn_step(thr, vals)});
        }

    for (const auto& cand : family) {
        const Matrix fu = apply(cand.fn, u);
        for (double t : t_grid) {
            const Matrix probe = Matrix::identity(u.size()) + t * fu;
            if (!is_bipotential(probe, tol).ok) return ContrapositiveWitness{cand.desc, t};
        }
    }
    return std::nullopt;
}

} // namespace hadamat
