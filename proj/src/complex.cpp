#include "a4cx/complex.hpp"

#include <sstream>

#include "a4cx/errors.hpp"

namespace a4cx {

MatrixF ModuleRep::act(const SkewElem& a) const {
    // x.(sum_i a_i qbar^i) built from the generator actions; note
    // act(uv) = act(v) act(u) in the column convention.
    MatrixF out = MatrixF::zero(field, dim, dim);
    const MatrixF y1y2 = act_y1y2();
    for (int i = 0; i < group_order(group); ++i) {
        const ExtElem& e = a.part[static_cast<std::size_t>(i)];
        if (e.is_zero()) continue;
        MatrixF lam = MatrixF::zero(field, dim, dim);
        auto addc = [&](Scalar s, const MatrixF& m) {
            if (s.is_zero()) return;
            MatrixF t = m;
            for (int r = 0; r < dim; ++r) t.scale_row(r, s);
            lam = lam + t;
        };
        addc(e.c[0], MatrixF::identity(field, dim));
        addc(e.c[1], act_y1);
        addc(e.c[2], act_y2);
        addc(e.c[3], y1y2);
        // right mult by (lambda qbar^i): first lambda, then qbar^i
        MatrixF qi = MatrixF::identity(field, dim);
        for (int t = 0; t < i; ++t) qi = act_q * qi;
        out = out + qi * lam;
    }
    return out;
}

ModuleRep free_module(Field f, GroupTag g, int rank) {
    const int d = skew_dim(f, g);
    ModuleRep m(f, g, d * rank);
    auto block = [&](const SkewElem& a, MatrixF& dst) {
        const MatrixF one = right_mult_matrix(a);
        for (int b = 0; b < rank; ++b)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    const Scalar v = one.get(i, j);
                    if (!v.is_zero()) dst.set(b * d + i, b * d + j, v);
                }
    };
    SkewElem y1(f, g), y2(f, g), q(f, g);
    y1.part[0] = ExtElem::basis(f, 1);
    y2.part[0] = ExtElem::basis(f, 2);
    if (g == GroupTag::C3)
        q.part[1] = ExtElem::one(f);
    else
        q.part[0] = ExtElem::one(f);
    m.act_y1 = MatrixF::zero(f, m.dim, m.dim);
    m.act_y2 = MatrixF::zero(f, m.dim, m.dim);
    m.act_q = MatrixF::zero(f, m.dim, m.dim);
    block(y1, m.act_y1);
    block(y2, m.act_y2);
    block(q, m.act_q);
    return m;
}

ModuleRep lambda_module(Field f, GroupTag g) {
    ModuleRep m(f, g, 4);
    // right multiplication by y1, y2 on basis (1, y1, y2, y1y2)
    for (int k = 0; k < 4; ++k) {
        const ExtElem p1 = ExtElem::basis(f, k) * ExtElem::basis(f, 1);
        const ExtElem p2 = ExtElem::basis(f, k) * ExtElem::basis(f, 2);
        for (int i = 0; i < 4; ++i) {
            if (!p1.c[static_cast<std::size_t>(i)].is_zero())
                m.act_y1.set(i, k, p1.c[static_cast<std::size_t>(i)]);
            if (!p2.c[static_cast<std::size_t>(i)].is_zero())
                m.act_y2.set(i, k, p2.c[static_cast<std::size_t>(i)]);
        }
    }
    if (g == GroupTag::C3) {
        // x . qbar = Psi(q^-1)(x) = Psi(q^2)(x)
        MatrixF q(f, 4, 4);
        for (int k = 0; k < 4; ++k) {
            const ExtElem img = psi(2, ExtElem::basis(f, k));
            for (int i = 0; i < 4; ++i)
                if (!img.c[static_cast<std::size_t>(i)].is_zero())
                    q.set(i, k, img.c[static_cast<std::size_t>(i)]);
        }
        m.act_q = q;
    }
    return m;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
    if (a.field != b.field || a.group != b.group)
        throw DomainError("direct_sum mismatch");
    ModuleRep m(a.field, a.group, a.dim + b.dim);
    auto put = [&](MatrixF& dst, const MatrixF& x, const MatrixF& y) {
        dst = MatrixF::zero(a.field, m.dim, m.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) {
                const Scalar v = x.get(i, j);
                if (!v.is_zero()) dst.set(i, j, v);
            }
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j) {
                const Scalar v = y.get(i, j);
                if (!v.is_zero()) dst.set(a.dim + i, a.dim + j, v);
            }
    };
    put(m.act_y1, a.act_y1, b.act_y1);
    put(m.act_y2, a.act_y2, b.act_y2);
    put(m.act_q, a.act_q, b.act_q);
    return m;
}

std::optional<std::string> check_module_relations(const ModuleRep& m) {
    const int d = m.dim;
    if (m.act_y1.rows() != d || m.act_y1.cols() != d ||
        m.act_y2.rows() != d || m.act_y2.cols() != d ||
        m.act_q.rows() != d || m.act_q.cols() != d)
        return "action matrix shape mismatch";
    if (!(m.act_y1 * m.act_y1).is_zero()) return "act_y1^2 != 0";
    if (!(m.act_y2 * m.act_y2).is_zero()) return "act_y2^2 != 0";
    if (!(m.act_y1 * m.act_y2 == m.act_y2 * m.act_y1))
        return "act_y1 act_y2 != act_y2 act_y1";
    const MatrixF id = MatrixF::identity(m.field, d);
    if (m.group == GroupTag::Trivial) {
        if (!(m.act_q == id)) return "trivial group requires act_q = 1";
        return std::nullopt;
    }
    if (!(m.act_q * m.act_q * m.act_q == id)) return "act_q^3 != 1";
    if (!(m.act_q * m.act_y2 == m.act_y1 * m.act_q))
        return "skew relation act_q act_y2 = act_y1 act_q fails";
    if (!(m.act_q * (m.act_y1 + m.act_y2) == m.act_y2 * m.act_q))
        return "skew relation act_q (act_y1+act_y2) = act_y2 act_q fails";
    return std::nullopt;
}

FreenessCertificate is_lambda_free(const ModuleRep& m) {
    FreenessCertificate cert;
    // M I = im(act_y1) + im(act_y2); g = dim M/MI
    const SubspaceF mi = sum(image(m.act_y1), image(m.act_y2));
    const SubspaceF all = SubspaceF::full(m.field, m.dim);
    const MatrixF reps = quotient_reps(all, mi);
    const int g = reps.rows();
    cert.rank = g;
    cert.free = (m.dim == 4 * g);
    if (cert.free) cert.generators = reps;
    return cert;
}

const ModuleRep& PerfectComplex::term(int deg) const {
    if (!in_range(deg)) throw DomainError("degree out of range");
    return terms[static_cast<std::size_t>(deg - lo)];
}

MatrixF PerfectComplex::diff(int deg) const {
    if (deg >= lo && deg < hi)
        return diffs[static_cast<std::size_t>(deg - lo)];
    return MatrixF::zero(field, dim_at(deg + 1), dim_at(deg));
}

std::string ValidationReport::str() const {
    if (ok) return "valid";
    std::ostringstream os;
    for (const auto& v : violations)
        os << "degree " << v.degree << ": " << v.what << "\n";
    return os.str();
}

ValidationReport validate(const PerfectComplex& c) {
    ValidationReport rep;
    auto fail = [&](int deg, const std::string& what) {
        rep.ok = false;
        rep.violations.push_back({deg, what});
    };
    if (c.hi < c.lo) return rep;  // empty complex
    if (c.terms.size() != static_cast<std::size_t>(c.hi - c.lo + 1)) {
        fail(c.lo, "terms count does not match degree range");
        return rep;
    }
    if (c.diffs.size() != static_cast<std::size_t>(c.hi - c.lo)) {
        fail(c.lo, "diffs count does not match degree range");
        return rep;
    }
    for (int deg = c.lo; deg <= c.hi; ++deg) {
        const ModuleRep& m = c.term(deg);
        if (m.field != c.field || m.group != c.group)
            fail(deg, "term field/group mismatch");
        if (auto err = check_module_relations(m)) fail(deg, *err);
    }
    if (!rep.ok) return rep;
    for (int deg = c.lo; deg < c.hi; ++deg) {
        const MatrixF& d = c.diffs[static_cast<std::size_t>(deg - c.lo)];
        if (d.rows() != c.dim_at(deg + 1) || d.cols() != c.dim_at(deg)) {
            fail(deg, "differential shape mismatch");
            continue;
        }
        const ModuleRep& a = c.term(deg);
        const ModuleRep& b = c.term(deg + 1);
        if (!(d * a.act_y1 == b.act_y1 * d))
            fail(deg, "differential does not commute with act_y1");
        if (!(d * a.act_y2 == b.act_y2 * d))
            fail(deg, "differential does not commute with act_y2");
        if (!(d * a.act_q == b.act_q * d))
            fail(deg, "differential does not commute with act_q");
    }
    for (int deg = c.lo; deg + 1 < c.hi; ++deg) {
        if (!(c.diff(deg + 1) * c.diff(deg)).is_zero())
            fail(deg, "d^2 != 0");
    }
    for (int deg = c.lo; deg <= c.hi; ++deg) {
        if (!is_lambda_free(c.term(deg)).free)
            fail(deg, "term is not free over the exterior algebra");
    }
    return rep;
}

void require_valid(const PerfectComplex& c) {
    const auto rep = validate(c);
    if (!rep.ok) throw DomainError("invalid complex:\n" + rep.str());
}

int total_dim(const GradedQRep& h) {
    int n = 0;
    for (const auto& [deg, r] : h) n += r.dim;
    return n;
}

std::map<int, HomologySlice> homology_detailed(const PerfectComplex& c) {
    std::map<int, HomologySlice> out;
    for (int deg = c.lo; deg <= c.hi; ++deg) {
        HomologySlice s;
        s.cycles = kernel_space(c.diff(deg));
        s.boundaries = image(c.diff(deg - 1));
        s.reps = quotient_reps(s.cycles, s.boundaries);
        if (s.reps.rows() == 0) continue;
        s.qmat = induced_map(c.term(deg).act_q, s.reps, s.boundaries, s.reps);
        out.emplace(deg, std::move(s));
    }
    return out;
}

GradedQRep homology(const PerfectComplex& c) {
    GradedQRep h;
    for (auto& [deg, s] : homology_detailed(c))
        h[deg] = QRep{s.reps.rows(), s.qmat};
    return h;
}

QDecomp decompose_qrep(Field f, const MatrixF& qmat) {
    QDecomp d{f, {0, 0, 0}};
    const int n = qmat.rows();
    const MatrixF id = MatrixF::identity(f, n);
    if (!((qmat * qmat * qmat) == id))
        throw DomainError("q matrix does not cube to identity");
    if (f == Field::F2) {
        const int fixed = kernel_space(qmat + id).dim();
        const int rest = n - fixed;
        if (rest % 2 != 0)
            throw InvariantViolation("inconsistent C3 representation");
        // V is cut out by q^2 + q + 1 = 0
        MatrixF ann = qmat * qmat + qmat + id;
        if (kernel_space(ann).dim() != rest)
            throw InvariantViolation("representation not semisimple");
        d.mult[0] = fixed;
        d.mult[1] = rest / 2;
    } else {
        const Scalar one = Scalar::one(f);
        const Scalar w = Scalar::omega();
        const Scalar w2 = w * w;
        const Scalar eig[3] = {one, w, w2};
        int sum = 0;
        for (int e = 0; e < 3; ++e) {
            MatrixF shifted = qmat;
            for (int i = 0; i < n; ++i)
                shifted.set(i, i, shifted.get(i, i) + eig[e]);
            d.mult[e] = kernel_space(shifted).dim();
            sum += d.mult[e];
        }
        if (sum != n)
            throw InvariantViolation("inconsistent C3 representation over F4");
    }
    return d;
}

PerfectComplex shift(const PerfectComplex& c, int k) {
    PerfectComplex s = c;
    s.lo = c.lo + k;
    s.hi = c.hi + k;
    return s;
}

TopQuotient top_quotient(const PerfectComplex& c, int deg) {
    TopQuotient t;
    if (!c.in_range(deg)) {
        t.qmat = MatrixF::zero(c.field, 0, 0);
        return t;
    }
    const ModuleRep& m = c.term(deg);
    t.den = sum(image(m.act_y1), image(m.act_y2));
    t.reps = quotient_reps(SubspaceF::full(c.field, m.dim), t.den);
    t.dim = t.reps.rows();
    t.qmat = induced_map(m.act_q, t.reps, t.den, t.reps);
    return t;
}

std::map<int, int> quotient_complex_homology_dims(const PerfectComplex& c) {
    // homology of C/CI, computed degreewise in quotient coordinates
    std::map<int, TopQuotient> q;
    for (int deg = c.lo; deg <= c.hi; ++deg) q[deg] = top_quotient(c, deg);
    std::map<int, MatrixF> dbar;  // induced differential on quotients
    for (int deg = c.lo; deg < c.hi; ++deg)
        dbar[deg] =
            induced_map(c.diff(deg), q[deg].reps, q[deg + 1].den,
                        q[deg + 1].reps);
    std::map<int, int> dims;
    for (int deg = c.lo; deg <= c.hi; ++deg) {
        const MatrixF dout = dbar.count(deg)
                                 ? dbar[deg]
                                 : MatrixF::zero(c.field, 0, q[deg].dim);
        const MatrixF din = dbar.count(deg - 1)
                                ? dbar[deg - 1]
                                : MatrixF::zero(c.field, q[deg].dim, 0);
        const int h = kernel_space(dout).dim() - image(din).dim();
        if (h != 0) dims[deg] = h;
    }
    return dims;
}

}  // namespace a4cx
