#include "a4cx/bgg.hpp"

#include <algorithm>

#include "a4cx/errors.hpp"

namespace a4cx {

const char* rep_label_name(RepLabel l) {
    switch (l) {
        case RepLabel::Triv: return "triv";
        case RepLabel::Alpha: return "alpha";
        default: return "alpha2";
    }
}

RepLabel rep_label_from_name(const std::string& s) {
    if (s == "triv") return RepLabel::Triv;
    if (s == "alpha") return RepLabel::Alpha;
    if (s == "alpha2") return RepLabel::Alpha2;
    throw DomainError("unknown representation label: " + s);
}

Scalar rep_label_scalar(Field f, RepLabel l) {
    if (l == RepLabel::Triv) return Scalar::one(f);
    if (f == Field::F2)
        throw DomainError("nontrivial one-dimensional label needs F4");
    return l == RepLabel::Alpha ? Scalar::omega()
                                : Scalar::omega() * Scalar::omega();
}

bool triple_equal(const ClassifyingTriple& a, const ClassifyingTriple& b) {
    return a.l == b.l && a.L == b.L && a.group == b.group &&
           ideal_equal(a.J, b.J);
}

ClassifyingTriple classify(const PerfectComplex& c) {
    require_valid(c);
    const GradedQRep h = homology(c);
    if (total_dim(h) != 4) throw DomainError("homology not 4-dimensional");

    std::vector<int> degrees;
    for (const auto& [deg, r] : h)
        for (int i = 0; i < r.dim; ++i) degrees.push_back(deg);
    const int l = degrees[0];

    const DgSModule b = beta(c);
    const DgHomology dgh = dg_homology(b);
    if (!dgh.finite || !dgh.annihilator)
        throw InvariantViolation("BGG transform homology did not stabilize: " +
                                 dgh.note);
    if (dgh.lowest() != l)
        throw InvariantViolation(
            "lowest homology degrees of C and beta(C) differ");
    const DgHomologySlice& low = dgh.h.at(l);
    if (low.dim != 1)
        throw InvariantViolation("H^l(beta) not 1-dimensional");

    RepLabel label = RepLabel::Triv;
    const Scalar eig = low.qmat.get(0, 0);
    if (c.group == GroupTag::C3 && !eig.is_one()) {
        if (c.field == Field::F2)
            throw InvariantViolation("nontrivial q-scalar over F2");
        label = eig == Scalar::omega() ? RepLabel::Alpha : RepLabel::Alpha2;
    }

    ClassifyingTriple t(l, label, *dgh.annihilator, c.group);
    t.m = dgh.d1 - 1;
    t.n = dgh.d2 - 1;

    // t = m+n: the homology degrees must be l, l+m, l+n, l+m+n
    const std::vector<int> expected{l, l + t.m, l + t.n, l + t.m + t.n};
    if (degrees != expected)
        throw InvariantViolation("homology degrees disagree with t = m+n");

    if (c.group == GroupTag::C3 && !is_invariant_ideal(t.J))
        throw InvariantViolation("annihilator ideal is not q-invariant");
    return t;
}

DgSModule koszul_module(RepLabel label, const GradedIdeal& j,
                        GroupTag group) {
    const auto param = is_parameter_ideal(j);
    if (!param) throw DomainError("koszul_module needs a parameter ideal");
    const Field f = j.field();
    const auto [d1, d2] = *param;

    if (group == GroupTag::Trivial) {
        if (label != RepLabel::Triv)
            throw DomainError("trivial group admits only the trivial label");
        const auto gens = canonical_generators(j);
        DgSModule k;
        k.field = f;
        k.group = GroupTag::Trivial;
        k.gen_deg = {0, d1 - 1, d2 - 1, d1 + d2 - 2};
        k.diff.assign(4, std::vector<Poly>(4, Poly::zero(f)));
        k.diff[0][1] = gens[0];
        k.diff[0][2] = gens[1];
        k.diff[2][3] = gens[0];
        k.diff[1][3] = gens[1];
        k.qact = MatrixF::identity(f, 4);
        require_valid_dg(k);
        return k;
    }

    if (!is_invariant_ideal(j))
        throw DomainError("koszul_module needs an invariant ideal");

    // cogenerator space W with its (left, dual-action) q-matrix
    const auto slices = cogenerators(j);
    std::vector<Poly> lifts;      // arbitrary lifts s0(w_i)
    std::vector<int> degs;
    MatrixF bq(f, 2, 2);  // left q-action on W in the basis of the reps
    {
        int at = 0;
        for (const auto& s : slices) {
            for (int i = 0; i < s.reps.rows(); ++i) {
                lifts.push_back(Poly::from_component_row(s.reps.row(i),
                                                         s.degree));
                degs.push_back(s.degree);
            }
            for (int a = 0; a < s.qmat.rows(); ++a)
                for (int b = 0; b < s.qmat.cols(); ++b)
                    bq.set(at + a, at + b, s.qmat.get(a, b));
            at += s.reps.rows();
        }
        if (at != 2) throw InvariantViolation("cogenerator space not 2-dim");
    }

    // Reynolds-averaged section: sigma(w_j) = sum_i q^i s0(q^-i w_j)
    const MatrixF bq2 = bq * bq;  // q^-1 = q^2 on W
    std::vector<Poly> sigma(2, Poly::zero(f));
    for (int jcol = 0; jcol < 2; ++jcol) {
        for (int i = 0; i < 3; ++i) {
            // matrix of q^-i on W
            MatrixF binv = MatrixF::identity(f, 2);
            for (int t = 0; t < (3 - i) % 3; ++t) binv = bq * binv;
            for (int k = 0; k < 2; ++k) {
                const Scalar coeff = binv.get(k, jcol);
                if (coeff.is_zero()) continue;
                sigma[static_cast<std::size_t>(jcol)] =
                    sigma[static_cast<std::size_t>(jcol)] +
                    q_act(i, lifts[static_cast<std::size_t>(k)])
                        .scaled(coeff);
            }
        }
    }
    // sigma must still be a section: sigma(w_j) = w_j mod (x1,x2)J, and it
    // must be equivariant: sigma(q w) = q sigma(w)
    for (int jcol = 0; jcol < 2; ++jcol) {
        Poly lhs(f);
        for (int k = 0; k < 2; ++k)
            lhs = lhs + sigma[static_cast<std::size_t>(k)]
                            .scaled(bq.get(k, jcol));
        if (!(lhs == q_act(1, sigma[static_cast<std::size_t>(jcol)])))
            throw InvariantViolation("Reynolds section is not equivariant");
        if (!j.contains(sigma[static_cast<std::size_t>(jcol)]))
            throw InvariantViolation("section left the ideal");
    }

    DgSModule k;
    k.field = f;
    k.group = GroupTag::C3;
    k.gen_deg = {0, d1 - 1, d2 - 1, d1 + d2 - 2};
    k.diff.assign(4, std::vector<Poly>(4, Poly::zero(f)));
    k.diff[0][1] = sigma[0];
    k.diff[0][2] = sigma[1];
    k.diff[2][3] = sigma[0];
    k.diff[1][3] = sigma[1];

    // right q-action: scalar of L on everything; A = bq^2 on the degree-1
    // exterior part; det(A) on the top part
    const Scalar chi = rep_label_scalar(f, label);
    const MatrixF a = bq2;
    MatrixF q(f, 4, 4);
    q.set(0, 0, chi);
    q.set(1, 1, chi * a.get(0, 0));
    q.set(2, 1, chi * a.get(1, 0));
    q.set(1, 2, chi * a.get(0, 1));
    q.set(2, 2, chi * a.get(1, 1));
    q.set(3, 3, chi * (a.get(0, 0) * a.get(1, 1) +
                       a.get(1, 0) * a.get(0, 1)));
    k.qact = q;
    require_valid_dg(k);
    return k;
}

namespace {

// basis element of (M (x)_S eps*)^n: generator i, Lambda basis b,
// dual monomial index u in Hom(S_{deg_i - n}, F)
struct EpsBasis {
    std::vector<std::array<int, 3>> elems;
    std::map<std::array<int, 3>, int> index;
};

EpsBasis eps_basis(const DgSModule& m, int n) {
    EpsBasis eb;
    for (int i = 0; i < m.rank(); ++i) {
        const int d = m.gen_deg[static_cast<std::size_t>(i)] - n;
        if (d < 0) continue;
        for (int u = 0; u <= d; ++u)
            for (int b = 0; b < 4; ++b) {
                const std::array<int, 3> key{i, u, b};
                eb.index[key] = static_cast<int>(eb.elems.size());
                eb.elems.push_back(key);
            }
    }
    return eb;
}

struct EpsTerm {
    EpsBasis basis;
    ModuleRep rep;
};

}  // namespace

PerfectComplex epsilon_tensor(const DgSModule& m) {
    const Field f = m.field;
    const DgHomology dgh = dg_homology(m);
    if (!dgh.finite)
        throw DomainError("total homology not finite-dimensional: " +
                          dgh.note);
    PerfectComplex out;
    out.field = f;
    out.group = m.group;
    if (dgh.h.empty()) return out;  // acyclic: empty complex

    const int l0 = dgh.lowest();
    const int top = m.max_degree();
    const int win_lo = l0 - 2;

    // the exterior-algebra action tables on the Lambda factor
    const ModuleRep lam = lambda_module(f, GroupTag::Trivial);
    const MatrixF psi2 = [&] {
        MatrixF p(f, 4, 4);
        for (int k = 0; k < 4; ++k) {
            const ExtElem img = psi(2, ExtElem::basis(f, k));
            for (int i = 0; i < 4; ++i)
                if (!img.c[static_cast<std::size_t>(i)].is_zero())
                    p.set(i, k, img.c[static_cast<std::size_t>(i)]);
        }
        return p;
    }();

    std::map<int, EpsTerm> terms;
    for (int n = win_lo; n <= top; ++n) {
        EpsTerm t;
        t.basis = eps_basis(m, n);
        const int dim = static_cast<int>(t.basis.elems.size());
        t.rep = ModuleRep(f, m.group, dim);
        t.rep.act_y1 = MatrixF::zero(f, dim, dim);
        t.rep.act_y2 = MatrixF::zero(f, dim, dim);
        t.rep.act_q = MatrixF::zero(f, dim, dim);
        std::map<int, MatrixF> qdual;  // degree -> transpose of dual action
        for (std::size_t c = 0; c < t.basis.elems.size(); ++c) {
            const auto [i, u, b] = t.basis.elems[c];
            const int d = m.gen_deg[static_cast<std::size_t>(i)] - n;
            // right multiplication by y1, y2 on the Lambda factor
            for (int bb = 0; bb < 4; ++bb) {
                const Scalar v1 = lam.act_y1.get(bb, b);
                if (!v1.is_zero())
                    t.rep.act_y1.set(t.basis.index.at({i, u, bb}),
                                     static_cast<int>(c), v1);
                const Scalar v2 = lam.act_y2.get(bb, b);
                if (!v2.is_zero())
                    t.rep.act_y2.set(t.basis.index.at({i, u, bb}),
                                     static_cast<int>(c), v2);
            }
            // (g_i (x) lambda (x) h).q = g_i.q (x) Psi(q^2)(lambda) (x) h o q
            if (m.group == GroupTag::C3) {
                if (!qdual.count(d))
                    qdual.emplace(d, q_action_matrix(f, 1, d));
                const MatrixF& qd = qdual.at(d);
                for (int k = 0; k < m.rank(); ++k) {
                    const Scalar ck = m.qact.get(k, i);
                    if (ck.is_zero()) continue;
                    for (int uu = 0; uu <= d; ++uu) {
                        const Scalar cu = qd.get(u, uu);  // transpose
                        if (cu.is_zero()) continue;
                        for (int bb = 0; bb < 4; ++bb) {
                            const Scalar cb = psi2.get(bb, b);
                            if (cb.is_zero()) continue;
                            const int row = t.basis.index.at({k, uu, bb});
                            t.rep.act_q.set(row, static_cast<int>(c),
                                            t.rep.act_q.get(
                                                row, static_cast<int>(c)) +
                                                ck * cu * cb);
                        }
                    }
                }
            } else {
                t.rep.act_q.set(static_cast<int>(c), static_cast<int>(c),
                                Scalar::one(f));
            }
        }
        terms.emplace(n, std::move(t));
    }

    // differential: d(g_i (x) lambda (x) h) =
    //   sum_j g_j (x) lambda (x) (p_ji . h) + sum_k g_i (x) lambda y_k (x) h x_k
    std::map<int, MatrixF> diffs;
    for (int n = win_lo; n < top; ++n) {
        const EpsTerm& src = terms.at(n);
        const EpsTerm& dst = terms.at(n + 1);
        MatrixF dmat(f, static_cast<int>(dst.basis.elems.size()),
                     static_cast<int>(src.basis.elems.size()));
        for (std::size_t c = 0; c < src.basis.elems.size(); ++c) {
            const auto [i, u, b] = src.basis.elems[c];
            const int d = m.gen_deg[static_cast<std::size_t>(i)] - n;
            const int e1 = d - u, e2 = u;  // h = dual of x1^e1 x2^e2
            // module part: contraction of h by the entries of the
            // differential of M
            for (int j = 0; j < m.rank(); ++j) {
                const Poly& p = m.diff[static_cast<std::size_t>(j)]
                                      [static_cast<std::size_t>(i)];
                if (p.is_zero()) continue;
                for (const auto& [pd, comp] : p.components())
                    for (int w = 0; w <= pd; ++w) {
                        const Scalar coeff =
                            comp[static_cast<std::size_t>(w)];
                        if (coeff.is_zero()) continue;
                        const int w1 = pd - w, w2 = w;
                        if (e1 < w1 || e2 < w2) continue;
                        const int uu = e2 - w2;  // index in S_{d - pd}
                        const int row = dst.basis.index.at({j, uu, b});
                        dmat.set(row, static_cast<int>(c),
                                 dmat.get(row, static_cast<int>(c)) + coeff);
                    }
            }
            // epsilon part
            for (int bb = 0; bb < 4; ++bb) {
                const Scalar v1 = lam.act_y1.get(bb, b);
                if (!v1.is_zero() && e1 >= 1) {
                    const int row = dst.basis.index.at({i, u, bb});
                    dmat.set(row, static_cast<int>(c),
                             dmat.get(row, static_cast<int>(c)) + v1);
                }
                const Scalar v2 = lam.act_y2.get(bb, b);
                if (!v2.is_zero() && e2 >= 1) {
                    const int row = dst.basis.index.at({i, u - 1, bb});
                    dmat.set(row, static_cast<int>(c),
                             dmat.get(row, static_cast<int>(c)) + v2);
                }
            }
        }
        diffs.emplace(n, std::move(dmat));
    }

    // locate the lowest homology degree inside the window and check
    // exactness below it
    auto h_dim = [&](int n) {
        const MatrixF dout = n < top
                                 ? diffs.at(n)
                                 : MatrixF::zero(f, 0,
                                                 static_cast<int>(
                                                     terms.at(n).basis.elems
                                                         .size()));
        const MatrixF din =
            n > win_lo ? diffs.at(n - 1)
                       : MatrixF::zero(
                             f,
                             static_cast<int>(terms.at(n).basis.elems.size()),
                             0);
        return kernel_space(dout).dim() - image(din).dim();
    };
    if (h_dim(l0 - 1) != 0)
        throw InvariantViolation("unexpected homology below the cut");
    if (h_dim(l0) == 0)
        throw InvariantViolation("no homology at the expected bottom degree");

    // smart truncation at l0: replace the bottom term by the cokernel of the
    // incoming differential
    const SubspaceF b_in = image(diffs.at(l0 - 1));
    const int l0dim = static_cast<int>(terms.at(l0).basis.elems.size());
    const SubspaceF full = SubspaceF::full(f, l0dim);
    const MatrixF reps = quotient_reps(full, b_in);
    ModuleRep bottom(f, m.group, reps.rows());
    bottom.act_y1 = induced_map(terms.at(l0).rep.act_y1, reps, b_in, reps);
    bottom.act_y2 = induced_map(terms.at(l0).rep.act_y2, reps, b_in, reps);
    bottom.act_q = induced_map(terms.at(l0).rep.act_q, reps, b_in, reps);
    if (!is_lambda_free(bottom).free)
        throw InvariantViolation("truncation cokernel not Lambda-free");

    out.lo = l0;
    out.hi = top;
    out.terms.push_back(bottom);
    for (int n = l0 + 1; n <= top; ++n) out.terms.push_back(terms.at(n).rep);
    if (l0 < top) {
        // induced differential out of the cokernel
        MatrixF d0(f, static_cast<int>(terms.at(l0 + 1).basis.elems.size()),
                   reps.rows());
        for (int i = 0; i < reps.rows(); ++i) {
            const MatrixF y = diffs.at(l0).apply(reps.row(i));
            for (int r = 0; r < y.cols(); ++r) d0.set(r, i, y.get(0, r));
        }
        out.diffs.push_back(d0);
        for (int n = l0 + 1; n < top; ++n) out.diffs.push_back(diffs.at(n));
    }
    require_valid(out);
    return out;
}

PerfectComplex realize(const ClassifyingTriple& t) {
    const DgSModule k = koszul_module(t.L, t.J, t.group);
    const PerfectComplex e = epsilon_tensor(k);
    return shift(e, t.l - e.lo);
}

bool same_quasi_iso_class(const PerfectComplex& a, const PerfectComplex& b) {
    return triple_equal(classify(a), classify(b));
}

}  // namespace a4cx
