#include "a4cx/dgmodule.hpp"

#include <algorithm>

#include "a4cx/errors.hpp"

namespace a4cx {

int DgSModule::min_degree() const {
    return gen_deg.empty() ? 0
                           : *std::min_element(gen_deg.begin(), gen_deg.end());
}
int DgSModule::max_degree() const {
    return gen_deg.empty() ? 0
                           : *std::max_element(gen_deg.begin(), gen_deg.end());
}

std::optional<std::string> check_dg_module(const DgSModule& m) {
    const int r = m.rank();
    if (static_cast<int>(m.diff.size()) != r) return "diff row count";
    for (const auto& row : m.diff)
        if (static_cast<int>(row.size()) != r) return "diff column count";
    if (m.qact.rows() != r || m.qact.cols() != r) return "qact shape";
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) {
            const Poly& p = m.diff[static_cast<std::size_t>(j)]
                                  [static_cast<std::size_t>(i)];
            if (p.is_zero()) continue;
            if (!p.is_homogeneous() ||
                p.degree() != m.gen_deg[static_cast<std::size_t>(i)] + 1 -
                                  m.gen_deg[static_cast<std::size_t>(j)])
                return "differential entry degree mismatch";
        }
    // q preserves internal degree
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i)
            if (!m.qact.get(j, i).is_zero() &&
                m.gen_deg[static_cast<std::size_t>(j)] !=
                    m.gen_deg[static_cast<std::size_t>(i)])
                return "q action does not preserve generator degree";
    if (m.group == GroupTag::Trivial) {
        if (!(m.qact == MatrixF::identity(m.field, r)))
            return "trivial group requires identity q action";
    } else if (!(m.qact * m.qact * m.qact == MatrixF::identity(m.field, r))) {
        return "q^3 != 1 on generators";
    }
    // d^2 = 0 symbolically
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < r; ++i) {
            Poly acc(m.field);
            for (int j = 0; j < r; ++j)
                acc = acc + m.diff[static_cast<std::size_t>(k)]
                                  [static_cast<std::size_t>(j)] *
                                m.diff[static_cast<std::size_t>(j)]
                                      [static_cast<std::size_t>(i)];
            if (!acc.is_zero()) return "d^2 != 0";
        }
    // equivariance: sum_j D[k][j] C[j][i] = sum_t C[k][t] q^2(D[t][i])
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < r; ++i) {
            Poly lhs(m.field), rhs(m.field);
            for (int j = 0; j < r; ++j) {
                lhs = lhs + m.diff[static_cast<std::size_t>(k)]
                                  [static_cast<std::size_t>(j)]
                                .scaled(m.qact.get(j, i));
                rhs = rhs + q_act(2, m.diff[static_cast<std::size_t>(j)]
                                           [static_cast<std::size_t>(i)])
                                .scaled(m.qact.get(k, j));
            }
            if (!(lhs == rhs)) return "differential not q-equivariant";
        }
    return std::nullopt;
}

void require_valid_dg(const DgSModule& m) {
    if (auto err = check_dg_module(m))
        throw DomainError("invalid dg module: " + *err);
}

DgChainBasis dg_chain_basis(const DgSModule& m, int n) {
    DgChainBasis b;
    for (int i = 0; i < m.rank(); ++i) {
        const int d = n - m.gen_deg[static_cast<std::size_t>(i)];
        if (d < 0) continue;
        for (int j = 0; j <= d; ++j) {
            b.index[{i, j}] = static_cast<int>(b.elems.size());
            b.elems.emplace_back(i, j);
        }
    }
    return b;
}

int dg_chain_dim(const DgSModule& m, int n) {
    int dim = 0;
    for (int i = 0; i < m.rank(); ++i)
        dim += std::max(0, n - m.gen_deg[static_cast<std::size_t>(i)] + 1);
    return dim;
}

MatrixF dg_chain_diff(const DgSModule& m, int n) {
    const DgChainBasis src = dg_chain_basis(m, n);
    const DgChainBasis dst = dg_chain_basis(m, n + 1);
    MatrixF t(m.field, static_cast<int>(dst.elems.size()),
              static_cast<int>(src.elems.size()));
    for (std::size_t c = 0; c < src.elems.size(); ++c) {
        const auto [i, j] = src.elems[c];
        const int d = n - m.gen_deg[static_cast<std::size_t>(i)];
        // monomial j of S_d is x1^(d-j) x2^j
        for (int k = 0; k < m.rank(); ++k) {
            const Poly& p = m.diff[static_cast<std::size_t>(k)]
                                  [static_cast<std::size_t>(i)];
            if (p.is_zero()) continue;
            for (const auto& [pd, comp] : p.components())
                for (int w = 0; w <= pd; ++w) {
                    const Scalar coeff = comp[static_cast<std::size_t>(w)];
                    if (coeff.is_zero()) continue;
                    // x1^(pd-w) x2^w * x1^(d-j) x2^j
                    const int jj = j + w;
                    const auto it = dst.index.find({k, jj});
                    if (it == dst.index.end())
                        throw InvariantViolation("chain index out of range");
                    const int row = it->second;
                    t.set(row, static_cast<int>(c),
                          t.get(row, static_cast<int>(c)) + coeff);
                }
        }
    }
    return t;
}

MatrixF dg_chain_q(const DgSModule& m, int n) {
    const DgChainBasis basis = dg_chain_basis(m, n);
    MatrixF t(m.field, static_cast<int>(basis.elems.size()),
              static_cast<int>(basis.elems.size()));
    std::map<int, MatrixF> q2_cache;  // degree -> matrix of q^2 on S_degree
    for (std::size_t c = 0; c < basis.elems.size(); ++c) {
        const auto [i, j] = basis.elems[c];
        const int d = n - m.gen_deg[static_cast<std::size_t>(i)];
        if (!q2_cache.count(d)) q2_cache.emplace(d, q_action_matrix(m.field, 2, d));
        const MatrixF& q2 = q2_cache.at(d);
        for (int k = 0; k < m.rank(); ++k) {
            const Scalar ck = m.qact.get(k, i);
            if (ck.is_zero()) continue;
            for (int jj = 0; jj <= d; ++jj) {
                const Scalar cs = q2.get(jj, j);
                if (cs.is_zero()) continue;
                const int row = basis.index.at({k, jj});
                t.set(row, static_cast<int>(c),
                      t.get(row, static_cast<int>(c)) + ck * cs);
            }
        }
    }
    return t;
}

MatrixF dg_chain_mult_x(const DgSModule& m, int n, int which) {
    const DgChainBasis src = dg_chain_basis(m, n);
    const DgChainBasis dst = dg_chain_basis(m, n + 1);
    MatrixF t(m.field, static_cast<int>(dst.elems.size()),
              static_cast<int>(src.elems.size()));
    for (std::size_t c = 0; c < src.elems.size(); ++c) {
        const auto [i, j] = src.elems[c];
        const int jj = which == 1 ? j : j + 1;
        t.set(dst.index.at({i, jj}), static_cast<int>(c),
              Scalar::one(m.field));
    }
    return t;
}

DgSModule beta(const PerfectComplex& c) {
    require_valid(c);
    DgSModule m;
    m.field = c.field;
    m.group = c.group;
    std::vector<int> base;  // generator offset per degree
    for (int deg = c.lo; deg <= c.hi; ++deg) {
        base.push_back(static_cast<int>(m.gen_deg.size()));
        for (int v = 0; v < c.dim_at(deg); ++v) m.gen_deg.push_back(deg);
    }
    const int r = m.rank();
    m.diff.assign(static_cast<std::size_t>(r),
                  std::vector<Poly>(static_cast<std::size_t>(r),
                                    Poly::zero(c.field)));
    m.qact = MatrixF::zero(c.field, r, r);
    const Poly px1 = Poly::x1(c.field), px2 = Poly::x2(c.field);
    for (int deg = c.lo; deg <= c.hi; ++deg) {
        const int b = base[static_cast<std::size_t>(deg - c.lo)];
        const ModuleRep& t = c.term(deg);
        for (int v = 0; v < t.dim; ++v)
            for (int w = 0; w < t.dim; ++w) {
                // within-degree part: sum_i (right mult y_i) tensor x_i
                Poly p = px1.scaled(t.act_y1.get(w, v)) +
                         px2.scaled(t.act_y2.get(w, v));
                if (!p.is_zero())
                    m.diff[static_cast<std::size_t>(b + w)]
                          [static_cast<std::size_t>(b + v)] = p;
                const Scalar q = t.act_q.get(w, v);
                if (!q.is_zero()) m.qact.set(b + w, b + v, q);
            }
        if (deg < c.hi) {
            const int b2 = base[static_cast<std::size_t>(deg + 1 - c.lo)];
            const MatrixF d = c.diff(deg);
            for (int v = 0; v < t.dim; ++v)
                for (int w = 0; w < c.dim_at(deg + 1); ++w) {
                    const Scalar s = d.get(w, v);
                    if (!s.is_zero())
                        m.diff[static_cast<std::size_t>(b2 + w)]
                              [static_cast<std::size_t>(b + v)] =
                            Poly::monomial(c.field, 0, 0, s);
                }
        }
    }
    return m;
}

int DgHomology::total_dim() const {
    int n = 0;
    for (const auto& [deg, s] : h) n += s.dim;
    return n;
}

DgHomology dg_homology(const DgSModule& m, int bound) {
    DgHomology out;
    if (m.rank() == 0) {
        out.finite = true;
        out.cyclic = true;
        out.note = "zero module";
        return out;
    }

    struct DegreeData {
        SubspaceF cycles, boundaries;
        MatrixF reps;
    };
    std::map<int, DegreeData> data;
    const int n0 = m.min_degree();

    MatrixF d_prev = MatrixF::zero(m.field, dg_chain_dim(m, n0), 0);
    auto compute_degree = [&](int n) {
        MatrixF d_out = dg_chain_diff(m, n);
        DegreeData dd;
        dd.cycles = kernel_space(d_out);
        dd.boundaries = image(d_prev);
        dd.reps = quotient_reps(dd.cycles, dd.boundaries);
        const int dim = dd.reps.rows();
        if (dim > 0) {
            DgHomologySlice s;
            s.dim = dim;
            s.qmat = induced_map(dg_chain_q(m, n), dd.reps, dd.boundaries,
                                 dd.reps);
            out.h[n] = std::move(s);
        }
        data[n] = std::move(dd);
        d_prev = std::move(d_out);
    };

    // scan for the lowest nonzero homology degree
    int n = n0;
    int lowest = 0;
    bool found = false;
    for (; n <= n0 + bound; ++n) {
        compute_degree(n);
        if (out.h.count(n)) {
            lowest = n;
            found = true;
            break;
        }
    }
    if (!found) {
        out.finite = true;
        out.cyclic = true;
        out.note = "no homology found within bound";
        return out;
    }

    if (out.h[lowest].dim != 1) {
        out.note = "lowest homology is not one-dimensional";
        return out;
    }
    out.cyclic = true;

    // annihilator chain: A_d = ker(S_d -> H^(lowest+d)), built from the
    // homology-level multiplication maps
    std::vector<SubspaceF> ann;          // per degree d
    std::vector<MatrixF> zmat;           // S_d -> H^(lowest+d)
    ann.push_back(SubspaceF(m.field, 1));
    {
        MatrixF z0(m.field, 1, 1);
        z0.set(0, 0, Scalar::one(m.field));
        zmat.push_back(z0);
    }
    std::vector<int> jump_degrees;
    std::vector<Poly> gens;
    int zero_streak = 0;

    auto x_maps = [&](int deg) -> std::pair<MatrixF, MatrixF> {
        const DegreeData& src = data.at(deg);
        const DegreeData& dst = data.at(deg + 1);
        MatrixF x1 = induced_map(dg_chain_mult_x(m, deg, 1), src.reps,
                                 dst.boundaries, dst.reps);
        MatrixF x2 = induced_map(dg_chain_mult_x(m, deg, 2), src.reps,
                                 dst.boundaries, dst.reps);
        if (out.h.count(deg)) {
            out.h[deg].x1 = x1;
            out.h[deg].x2 = x2;
        }
        return {x1, x2};
    };

    for (int d = 1;; ++d) {
        const int deg = lowest + d;
        if (deg > n0 + bound) {
            out.note = "no stabilization within bound";
            return out;
        }
        compute_degree(deg);
        const auto [x1, x2] =
            out.h.count(deg - 1)
                ? x_maps(deg - 1)
                : std::make_pair(MatrixF::zero(m.field, out.h.count(deg)
                                                            ? out.h[deg].dim
                                                            : 0,
                                               0),
                                 MatrixF::zero(m.field,
                                               out.h.count(deg) ? out.h[deg].dim
                                                                : 0,
                                               0));
        // Z_d column j: class of z * (monomial j of S_d)
        const int hdim = out.h.count(deg) ? out.h[deg].dim : 0;
        MatrixF z(m.field, hdim, d + 1);
        for (int j = 0; j <= d; ++j) {
            MatrixF prev_col(m.field, 1, zmat.back().rows());
            const int src_j = j <= d - 1 ? j : d - 1;
            for (int r = 0; r < zmat.back().rows(); ++r)
                prev_col.set(0, r, zmat.back().get(r, src_j));
            const MatrixF& mult = (j <= d - 1) ? x1 : x2;
            const MatrixF col = mult.apply(prev_col);
            for (int r = 0; r < hdim; ++r) z.set(r, j, col.get(0, r));
        }
        zmat.push_back(z);
        const SubspaceF a = kernel_space(z);
        // cyclic (surjectivity) check: dim H = (d+1) - dim A
        if (hdim != (d + 1) - a.dim()) {
            out.cyclic = false;
            out.note = "homology is not cyclic over S";
            return out;
        }
        // minimal generators of the annihilator chain
        const SubspaceF& prev_a = ann.back();
        MatrixF pushed(m.field, 0, d + 1);
        if (prev_a.dim() > 0) {
            const MatrixF m1t = mult_x1_matrix(m.field, d - 1).transpose();
            const MatrixF m2t = mult_x2_matrix(m.field, d - 1).transpose();
            pushed = (prev_a.basis() * m1t).vstack(prev_a.basis() * m2t);
        }
        const SubspaceF s1a = SubspaceF::from_rows(pushed);
        const MatrixF fresh = quotient_reps(a, s1a);
        for (int i = 0; i < fresh.rows(); ++i) {
            jump_degrees.push_back(d);
            gens.push_back(Poly::from_component_row(fresh.row(i), d));
        }
        ann.push_back(a);
        if (jump_degrees.size() > 2) {
            out.note = "annihilator needs more than two generators";
            return out;
        }
        zero_streak = hdim == 0 ? zero_streak + 1 : 0;

        if (jump_degrees.size() == 2) {
            const int d1 = jump_degrees[0], d2 = jump_degrees[1];
            const int socle = d1 + d2 - 2;
            if (d >= socle + 2) {
                // chain fully explored: verify and stop
                if (zero_streak < 2) {
                    out.note = "homology persists beyond the socle degree";
                    return out;
                }
                GradedIdeal j(m.field, gens);
                const auto param = is_parameter_ideal(j);
                if (!param || param->first != d1 || param->second != d2)
                    throw InvariantViolation(
                        "annihilator chain is not the expected parameter "
                        "ideal");
                for (int dd = 0; dd <= socle; ++dd)
                    if (!(j.degree_space(dd) ==
                          ann[static_cast<std::size_t>(dd)]))
                        throw InvariantViolation(
                            "annihilator chain is not an ideal");
                if (out.total_dim() != d1 * d2) {
                    out.note = "homology dimension does not match d1*d2";
                    return out;
                }
                out.finite = true;
                out.annihilator = std::move(j);
                out.d1 = d1;
                out.d2 = d2;
                return out;
            }
        }
    }
}

}  // namespace a4cx
