#pragma once

#include <vector>

#include "a4cx/matrix.hpp"

namespace a4cx {

// Subspace of F^n with vectors written as 1 x n rows. The stored basis is
// the RREF of any spanning set with zero rows dropped, so equal subspaces
// compare bit-identical.
class SubspaceF {
  public:
    SubspaceF() = default;
    SubspaceF(Field f, int ambient) : basis_(f, 0, ambient) {}

    static SubspaceF from_rows(const MatrixF& rows);
    static SubspaceF full(Field f, int n);

    Field field() const { return basis_.field(); }
    int ambient() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    const MatrixF& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const MatrixF& v) const;  // v: 1 x ambient
    bool contains(const SubspaceF& other) const;
    bool operator==(const SubspaceF& o) const {
        return basis_ == o.basis_;
    }

    // Canonical coset representative: v with all pivot coordinates cleared.
    MatrixF reduce(MatrixF v) const;

  private:
    MatrixF basis_;
    std::vector<int> pivots_;
};

SubspaceF sum(const SubspaceF& u, const SubspaceF& w);
SubspaceF intersect(const SubspaceF& u, const SubspaceF& w);
// {f in F^n : f . w = 0 for all w in W}
SubspaceF annihilator(const SubspaceF& w);

// Column space of A, as a subspace of F^rows.
SubspaceF image(const MatrixF& a);
// {x : A x = 0}
SubspaceF kernel_space(const MatrixF& a);
// {A x : x in W}
SubspaceF image_of(const MatrixF& a, const SubspaceF& w);
// {x : A x in W}
SubspaceF preimage(const MatrixF& a, const SubspaceF& w);

// Representatives whose classes form a basis of W/U (requires U <= W):
// the rows of rref(W) whose pivot is not a pivot of U. Deterministic.
MatrixF quotient_reps(const SubspaceF& w, const SubspaceF& u);

// Coordinates of [v] in the basis given by reps, modulo den.
// Throws InvariantViolation if v is not in den + span(reps).
MatrixF quotient_coords(const SubspaceF& den, const MatrixF& reps,
                        const MatrixF& v);

// Matrix of the map induced by A between quotients src = span(src_reps)/src_den
// and dst = span(dst_reps)/dst_den; column i holds the coords of A*src_reps[i].
MatrixF induced_map(const MatrixF& a, const MatrixF& src_reps,
                    const SubspaceF& dst_den, const MatrixF& dst_reps);

}  // namespace a4cx
