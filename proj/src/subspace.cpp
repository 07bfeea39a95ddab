#include "a4cx/subspace.hpp"

#include <algorithm>

#include "a4cx/errors.hpp"

namespace a4cx {

SubspaceF SubspaceF::from_rows(const MatrixF& rows) {
    auto [R, pivots] = rows.rref();
    SubspaceF s(rows.field(), rows.cols());
    s.basis_ = R.rows_slice(0, static_cast<int>(pivots.size()));
    s.pivots_ = std::move(pivots);
    return s;
}

SubspaceF SubspaceF::full(Field f, int n) {
    return from_rows(MatrixF::identity(f, n));
}

MatrixF SubspaceF::reduce(MatrixF v) const {
    if (v.cols() != ambient()) throw DomainError("ambient mismatch");
    for (int r = 0; r < dim(); ++r) {
        const Scalar c = v.get(0, pivots_[r]);
        if (c.is_zero()) continue;
        MatrixF tmp = basis_.row(r);
        tmp.scale_row(0, c);
        v = v + tmp;  // char 2: add = subtract
    }
    return v;
}

bool SubspaceF::contains(const MatrixF& v) const {
    return reduce(v).is_zero();
}

bool SubspaceF::contains(const SubspaceF& other) const {
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

SubspaceF sum(const SubspaceF& u, const SubspaceF& w) {
    return SubspaceF::from_rows(u.basis().vstack(w.basis()));
}

SubspaceF annihilator(const SubspaceF& w) {
    return SubspaceF::from_rows(w.basis().kernel());
}

SubspaceF intersect(const SubspaceF& u, const SubspaceF& w) {
    return annihilator(sum(annihilator(u), annihilator(w)));
}

SubspaceF image(const MatrixF& a) {
    return SubspaceF::from_rows(a.transpose());
}

SubspaceF kernel_space(const MatrixF& a) {
    return SubspaceF::from_rows(a.kernel());
}

SubspaceF image_of(const MatrixF& a, const SubspaceF& w) {
    return SubspaceF::from_rows(w.basis() * a.transpose());
}

SubspaceF preimage(const MatrixF& a, const SubspaceF& w) {
    if (w.ambient() != a.rows()) throw DomainError("preimage shape mismatch");
    const SubspaceF ann = annihilator(w);
    if (ann.dim() == 0) return SubspaceF::full(a.field(), a.cols());
    return kernel_space(ann.basis() * a);
}

MatrixF quotient_reps(const SubspaceF& w, const SubspaceF& u) {
    if (!w.contains(u)) throw DomainError("quotient: U not contained in W");
    std::vector<bool> upiv(static_cast<std::size_t>(w.ambient()), false);
    for (int p : u.pivots()) upiv[static_cast<std::size_t>(p)] = true;
    MatrixF reps(w.field(), w.dim() - u.dim(), w.ambient());
    int out = 0;
    for (int r = 0; r < w.dim(); ++r) {
        if (upiv[static_cast<std::size_t>(w.pivots()[r])]) continue;
        reps.copy_row_from(out++, w.basis(), r);
    }
    if (out != reps.rows())
        throw InvariantViolation("pivot nesting failed in quotient_reps");
    return reps;
}

MatrixF quotient_coords(const SubspaceF& den, const MatrixF& reps,
                        const MatrixF& v) {
    const MatrixF stacked = den.basis().vstack(reps);
    const auto x = stacked.transpose().solve(v);
    if (!x)
        throw InvariantViolation("quotient_coords: vector outside span");
    MatrixF coords(v.field(), 1, reps.rows());
    for (int i = 0; i < reps.rows(); ++i)
        coords.set(0, i, x->get(0, den.dim() + i));
    return coords;
}

MatrixF induced_map(const MatrixF& a, const MatrixF& src_reps,
                    const SubspaceF& dst_den, const MatrixF& dst_reps) {
    MatrixF m(a.field(), dst_reps.rows(), src_reps.rows());
    for (int i = 0; i < src_reps.rows(); ++i) {
        const MatrixF y = a.apply(src_reps.row(i));
        const MatrixF c = quotient_coords(dst_den, dst_reps, y);
        for (int r = 0; r < dst_reps.rows(); ++r) m.set(r, i, c.get(0, r));
    }
    return m;
}

}  // namespace a4cx
