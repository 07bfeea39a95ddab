#include "a4cx/ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

#include "a4cx/errors.hpp"

namespace a4cx {

GradedIdeal::GradedIdeal(Field f, std::vector<Poly> generators) : field_(f) {
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (g.field() != f) throw DomainError("generator field mismatch");
        if (!g.is_homogeneous())
            throw DomainError("ideal generators must be homogeneous");
        gens_.push_back(std::move(g));
    }
    if (gens_.empty()) throw DomainError("ideal needs a nonzero generator");
}

const SubspaceF& GradedIdeal::degree_space(int d) const {
    if (d < 0) throw DomainError("negative degree");
    while (static_cast<int>(cache_.size()) <= d) {
        const int deg = static_cast<int>(cache_.size());
        MatrixF rows(field_, 0, deg + 1);
        if (deg > 0 && cache_[static_cast<std::size_t>(deg - 1)].dim() > 0) {
            const MatrixF& prev =
                cache_[static_cast<std::size_t>(deg - 1)].basis();
            const MatrixF m1t = mult_x1_matrix(field_, deg - 1).transpose();
            const MatrixF m2t = mult_x2_matrix(field_, deg - 1).transpose();
            rows = (prev * m1t).vstack(prev * m2t);
        }
        for (const auto& g : gens_)
            if (g.degree() == deg) rows = rows.vstack(g.component_row(deg));
        cache_.push_back(SubspaceF::from_rows(rows));
    }
    return cache_[static_cast<std::size_t>(d)];
}

bool GradedIdeal::contains(const Poly& f) const {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous())
        throw DomainError("membership test needs a homogeneous polynomial");
    const int d = f.degree();
    return degree_space(d).contains(f.component_row(d));
}

namespace {

// (S1 . J)_d as a subspace of S_d
SubspaceF s1_times(const GradedIdeal& j, int d) {
    if (d == 0) return SubspaceF(j.field(), 1);
    const SubspaceF& prev = j.degree_space(d - 1);
    if (prev.dim() == 0) return SubspaceF(j.field(), d + 1);
    const MatrixF m1t = mult_x1_matrix(j.field(), d - 1).transpose();
    const MatrixF m2t = mult_x2_matrix(j.field(), d - 1).transpose();
    return SubspaceF::from_rows(
        (prev.basis() * m1t).vstack(prev.basis() * m2t));
}

}  // namespace

std::vector<CogeneratorSlice> minimal_generator_slices(const GradedIdeal& j,
                                                       int up_to,
                                                       bool with_q_action) {
    std::vector<CogeneratorSlice> out;
    for (int d = 0; d <= up_to; ++d) {
        const SubspaceF& jd = j.degree_space(d);
        const SubspaceF sub = s1_times(j, d);
        if (jd.dim() == sub.dim()) continue;
        CogeneratorSlice s;
        s.degree = d;
        s.reps = quotient_reps(jd, sub);
        if (with_q_action)
            s.qmat = induced_map(q_action_matrix(j.field(), 1, d), s.reps,
                                 sub, s.reps);
        out.push_back(std::move(s));
    }
    return out;
}

std::optional<std::pair<int, int>> is_parameter_ideal(const GradedIdeal& j) {
    int max_gen_deg = 0;
    for (const auto& g : j.generators())
        max_gen_deg = std::max(max_gen_deg, g.degree());
    const auto slices = minimal_generator_slices(j, max_gen_deg, false);
    std::vector<int> degs;
    for (const auto& s : slices)
        for (int i = 0; i < s.reps.rows(); ++i) degs.push_back(s.degree);
    if (degs.size() != 2 || degs[0] == 0) return std::nullopt;
    const int d1 = degs[0], d2 = degs[1];
    const int top = d1 + d2 - 1;
    if (j.degree_space(top).dim() != top + 1) return std::nullopt;
    if (quotient_total_dim(j, top) != d1 * d2)
        throw InvariantViolation("complete intersection dimension mismatch");
    return std::make_pair(d1, d2);
}

int quotient_total_dim(const GradedIdeal& j, int top) {
    int total = 0;
    for (int d = 0; d <= top; ++d)
        total += (d + 1) - j.degree_space(d).dim();
    return total;
}

bool ideal_membership(const Poly& f, const GradedIdeal& j) {
    return j.contains(f);
}

std::vector<CogeneratorSlice> cogenerators(const GradedIdeal& j) {
    const auto param = is_parameter_ideal(j);
    if (!param) throw DomainError("cogenerators: not a parameter ideal");
    return minimal_generator_slices(j, param->second, is_invariant_ideal(j));
}

bool is_invariant_ideal(const GradedIdeal& j) {
    for (const auto& g : j.generators())
        if (!j.contains(q_act(1, g))) return false;
    return true;
}

std::vector<Poly> canonical_generators(const GradedIdeal& j) {
    const auto param = is_parameter_ideal(j);
    if (!param) throw DomainError("canonical generators need a parameter ideal");
    std::vector<Poly> gens;
    for (const auto& s : minimal_generator_slices(j, param->second, false))
        for (int i = 0; i < s.reps.rows(); ++i)
            gens.push_back(Poly::from_component_row(s.reps.row(i), s.degree));
    return gens;
}

bool is_steenrod_closed(const GradedIdeal& j) {
    if (!is_parameter_ideal(j))
        throw DomainError("steenrod closure test needs a parameter ideal");
    for (const auto& g : canonical_generators(j)) {
        const int d = g.degree();
        for (int k = 1; k <= d; ++k)
            if (!j.contains(steenrod_sq(k, g))) return false;
    }
    return true;
}

bool invariant_even_parameter_exists(const GradedIdeal& j) {
    if (!is_invariant_ideal(j))
        throw DomainError("criterion needs an invariant ideal");
    const auto slices = cogenerators(j);

    bool fixed_class_route = false;
    for (const auto& s : slices) {
        if (s.degree % 2 != 0) continue;
        const MatrixF shifted =
            s.qmat + MatrixF::identity(j.field(), s.qmat.rows());
        if (kernel_space(shifted).dim() > 0) fixed_class_route = true;
    }

    bool reynolds_route = false;
    for (const auto& s : slices) {
        if (s.degree % 2 != 0) continue;
        const SubspaceF sub = s1_times(j, s.degree);
        for (int i = 0; i < s.reps.rows(); ++i) {
            const Poly lift =
                Poly::from_component_row(s.reps.row(i), s.degree);
            const Poly z = reynolds(lift);
            if (z.is_zero()) continue;
            if (!j.contains(z))
                throw InvariantViolation("Reynolds left the ideal");
            if (!sub.contains(z.component_row(s.degree)))
                reynolds_route = true;
        }
    }

    if (fixed_class_route != reynolds_route)
        throw InvariantViolation(
            "even-invariant-parameter routes disagree");
    return fixed_class_route;
}

std::string canonical_key(const GradedIdeal& j) {
    const auto param = is_parameter_ideal(j);
    if (!param) throw DomainError("canonical key needs a parameter ideal");
    const auto [d1, d2] = *param;
    std::string key;
    key.push_back(j.field() == Field::F2 ? '2' : '4');
    key.push_back(static_cast<char>('0' + d1));
    key.push_back(static_cast<char>('0' + d2));
    for (int d = 0; d <= d1 + d2 - 2; ++d) {
        const SubspaceF& sp = j.degree_space(d);
        key.push_back(':');
        key.push_back(static_cast<char>('0' + sp.dim()));
        for (int i = 0; i < sp.dim(); ++i)
            for (int c = 0; c <= d; ++c)
                key.push_back(
                    static_cast<char>('0' + sp.basis().get(i, c).bits()));
    }
    return key;
}

bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b) {
    return a.field() == b.field() && canonical_key(a) == canonical_key(b);
}

namespace {

// All k-dimensional subspaces of F^n via RREF cell enumeration.
void enumerate_subspaces(Field f, int n, int k,
                         const std::function<void(const MatrixF&)>& fn) {
    if (k == 0) {
        fn(MatrixF(f, 0, n));
        return;
    }
    if (k > n) return;
    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;
    const int q = field_size(f);
    while (true) {
        // free cells: (r, c) with c > pivot_r and c not a pivot
        std::vector<std::pair<int, int>> cells;
        std::vector<bool> ispiv(static_cast<std::size_t>(n), false);
        for (int p : pivots) ispiv[static_cast<std::size_t>(p)] = true;
        for (int r = 0; r < k; ++r)
            for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
                if (!ispiv[static_cast<std::size_t>(c)])
                    cells.emplace_back(r, c);
        std::vector<int> val(cells.size(), 0);
        while (true) {
            MatrixF m(f, k, n);
            for (int r = 0; r < k; ++r)
                m.set(r, pivots[static_cast<std::size_t>(r)],
                      Scalar::one(f));
            for (std::size_t i = 0; i < cells.size(); ++i)
                if (val[i])
                    m.set(cells[i].first, cells[i].second,
                          scalar_from_index(f, val[i]));
            fn(m);
            std::size_t i = 0;
            for (; i < cells.size(); ++i) {
                if (++val[i] < q) break;
                val[i] = 0;
            }
            if (i == cells.size()) break;
        }
        // next pivot combination
        int i = k - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[static_cast<std::size_t>(i)];
        for (int r = i + 1; r < k; ++r)
            pivots[static_cast<std::size_t>(r)] =
                pivots[static_cast<std::size_t>(r - 1)] + 1;
    }
}

// Nonzero vectors of F^n with leading coefficient normalized to 1.
void enumerate_lines(Field f, int n,
                     const std::function<void(const MatrixF&)>& fn) {
    enumerate_subspaces(f, n, 1, fn);
}

Poly row_to_poly(const MatrixF& row, int d) {
    return Poly::from_component_row(row, d);
}

}  // namespace

int enumeration_degree_limit(Field f) {
    if (const char* env = std::getenv("A4CX_ENUM_LIMIT"))
        return std::atoi(env);
    return f == Field::F2 ? 12 : 8;
}

std::vector<GradedIdeal> enumerate_parameter_ideals(Field f, int d1, int d2,
                                                    EnumerationFilters filters,
                                                    int degree_limit,
                                                    int jobs) {
    if (d1 < 1 || d1 > d2) throw DomainError("need 1 <= d1 <= d2");
    if (d1 + d2 > degree_limit)
        throw DomainError("enumeration degree limit exceeded");

    // candidate first generators f, up to scalar
    std::vector<Poly> firsts;
    enumerate_lines(f, d1 + 1, [&](const MatrixF& m) {
        firsts.push_back(row_to_poly(m.row(0), d1));
    });

    auto worker = [&](std::size_t begin, std::size_t step,
                      std::map<std::string, std::vector<Poly>>& found) {
        for (std::size_t fi = begin; fi < firsts.size(); fi += step) {
            const Poly& fgen = firsts[fi];
            // span of f * S_{d2-d1} inside S_{d2}
            MatrixF span(f, 0, d2 + 1);
            for (int e = 0; e <= d2 - d1; ++e) {
                const Poly m = fgen * Poly::monomial(f, d2 - d1 - e, e,
                                                     Scalar::one(f));
                span = span.vstack(m.component_row(d2));
            }
            const SubspaceF b = SubspaceF::from_rows(span);
            const MatrixF comp =
                quotient_reps(SubspaceF::full(f, d2 + 1), b);
            const int k = comp.rows();
            if (k == 0) continue;
            // nonzero coset representatives, normalized up to scalar
            enumerate_lines(f, k, [&](const MatrixF& coords) {
                MatrixF grow(f, 1, d2 + 1);
                for (int i = 0; i < k; ++i) {
                    const Scalar c = coords.get(0, i);
                    if (c.is_zero()) continue;
                    MatrixF t = comp.row(i);
                    t.scale_row(0, c);
                    grow = grow + t;
                }
                const Poly ggen = row_to_poly(grow, d2);
                GradedIdeal j(f, {fgen, ggen});
                const auto param = is_parameter_ideal(j);
                if (!param || param->first != d1 || param->second != d2)
                    return;
                if (filters.invariant && !is_invariant_ideal(j)) return;
                if (filters.steenrod && !is_steenrod_closed(j)) return;
                found.emplace(canonical_key(j), canonical_generators(j));
            });
        }
    };

    std::map<std::string, std::vector<Poly>> all;
    if (jobs <= 1) {
        worker(0, 1, all);
    } else {
        std::vector<std::map<std::string, std::vector<Poly>>> parts(
            static_cast<std::size_t>(jobs));
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t)
            threads.emplace_back(worker, static_cast<std::size_t>(t),
                                 static_cast<std::size_t>(jobs),
                                 std::ref(parts[static_cast<std::size_t>(t)]));
        for (auto& th : threads) th.join();
        for (auto& p : parts) all.merge(p);
    }

    std::vector<GradedIdeal> out;
    out.reserve(all.size());
    for (auto& [key, gens] : all) out.emplace_back(f, gens);
    return out;
}

std::vector<std::string> enumerate_parameter_ideals_by_chains(Field f, int d1,
                                                              int d2) {
    if (d1 < 1 || d1 > d2) throw DomainError("need 1 <= d1 <= d2");
    // Hilbert function of S/J for a complete intersection (d1, d2)
    auto target = [&](int d) {
        int h = 0;
        for (int a = 0; a < d1; ++a) {
            const int b = d - a;
            if (b >= 0 && b < d2) ++h;
        }
        return (d + 1) - h;
    };

    const int top = d1 + d2 - 1;
    std::vector<std::string> keys;

    // grow the chain from degree d; V is the subspace at degree d
    std::function<void(int, const SubspaceF&, const std::vector<Poly>&)> grow =
        [&](int d, const SubspaceF& v, const std::vector<Poly>& gens) {
            if (d == top) {
                GradedIdeal j(f, gens);
                const auto param = is_parameter_ideal(j);
                if (!param || param->first != d1 || param->second != d2)
                    throw InvariantViolation("chain produced a non-parameter "
                                             "ideal");
                if (!(j.degree_space(d) == v))
                    throw InvariantViolation("chain/cache mismatch");
                keys.push_back(canonical_key(j));
                return;
            }
            // push to degree d+1
            const MatrixF m1t = mult_x1_matrix(f, d).transpose();
            const MatrixF m2t = mult_x2_matrix(f, d).transpose();
            const SubspaceF w = SubspaceF::from_rows(
                (v.basis() * m1t).vstack(v.basis() * m2t));
            const int t = target(d + 1);
            const int fresh = (d + 1 == d2) ? 1 : 0;
            if (w.dim() != t - fresh) return;  // dead branch
            if (fresh == 0) {
                grow(d + 1, w, gens);
                return;
            }
            const MatrixF comp =
                quotient_reps(SubspaceF::full(f, d + 2), w);
            enumerate_lines(f, comp.rows(), [&](const MatrixF& coords) {
                MatrixF grow_row(f, 1, d + 2);
                for (int i = 0; i < comp.rows(); ++i) {
                    const Scalar c = coords.get(0, i);
                    if (c.is_zero()) continue;
                    MatrixF tmp = comp.row(i);
                    tmp.scale_row(0, c);
                    grow_row = grow_row + tmp;
                }
                auto gens2 = gens;
                gens2.push_back(row_to_poly(grow_row, d + 1));
                grow(d + 1,
                     SubspaceF::from_rows(w.basis().vstack(grow_row)),
                     gens2);
            });
        };

    // seed at degree d1
    const int t1 = target(d1);  // 1 when d1 < d2, else 2
    enumerate_subspaces(f, d1 + 1, t1, [&](const MatrixF& basis) {
        std::vector<Poly> gens;
        for (int i = 0; i < basis.rows(); ++i)
            gens.push_back(row_to_poly(basis.row(i), d1));
        grow(d1, SubspaceF::from_rows(basis), gens);
    });

    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace a4cx
