#pragma once

#include <array>
#include <string>

#include "a4cx/field.hpp"
#include "a4cx/matrix.hpp"

namespace a4cx {

enum class GroupTag : std::uint8_t { Trivial, C3 };

inline int group_order(GroupTag g) { return g == GroupTag::Trivial ? 1 : 3; }
inline const char* group_name(GroupTag g) {
    return g == GroupTag::Trivial ? "trivial" : "C3";
}

// Element of the exterior algebra L(y1,y2) in characteristic 2, stored as
// coefficients over the fixed basis (1, y1, y2, y1*y2).
struct ExtElem {
    Field field;
    std::array<Scalar, 4> c;  // c0, c1, c2, c12

    explicit ExtElem(Field f)
        : field(f), c{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
                      Scalar::zero(f)} {}

    static ExtElem one(Field f);
    static ExtElem basis(Field f, int k);  // k in 0..3

    bool is_zero() const;
    bool operator==(const ExtElem&) const = default;

    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator*(const ExtElem& o) const;
    ExtElem scaled(Scalar s) const;
    Scalar aug() const { return c[0]; }
};

// The algebra automorphism Psi(q^power): y1 -> y2, y2 -> y1+y2 for power 1.
ExtElem psi(int power, const ExtElem& a);

// Element of the skew group algebra L * Q for Q in {trivial, C3}, stored as
// one ExtElem per group element in the fixed order (e, q, q^2).
struct SkewElem {
    Field field;
    GroupTag group;
    std::array<ExtElem, 3> part;  // part[i] is the coefficient of qbar^i

    SkewElem(Field f, GroupTag g)
        : field(f), group(g), part{ExtElem(f), ExtElem(f), ExtElem(f)} {}

    static SkewElem unit(Field f, GroupTag g);
    // basis index k = 4*i + j: (Lambda basis j) * qbar^i
    static SkewElem basis(Field f, GroupTag g, int k);

    bool is_zero() const;
    bool operator==(const SkewElem&) const = default;

    SkewElem operator+(const SkewElem& o) const;
    SkewElem operator*(const SkewElem& o) const;
};

Scalar augment(const SkewElem& a);

int skew_dim(Field, GroupTag g);  // 4 * |Q|

// Matrix of right multiplication by a on L * Q (column convention: the
// k-th column holds the coordinates of basis_k * a).
MatrixF right_mult_matrix(const SkewElem& a);

std::string print_skew(const SkewElem& a);
SkewElem parse_skew(const std::string& text, Field f, GroupTag g);

// Group algebra F[(Z/2)^2] with basis (1, f1, f2, f1f2).
std::array<Scalar, 4> fp_mul(Field f, const std::array<Scalar, 4>& x,
                             const std::array<Scalar, 4>& y);

// The equivariant augmented-algebra isomorphism L(V) -> F[(Z/2)^2]:
// y1 -> l1 + l1 l2, y2 -> l2 + l1 l2 with li = fi - 1.
std::array<Scalar, 4> lambda_to_group_algebra(const ExtElem& a);

// Conjugation action of q on F[(Z/2)^2]: f1 -> f2, f2 -> f1 f2.
std::array<Scalar, 4> fp_conj_q(Field f, const std::array<Scalar, 4>& x);

}  // namespace a4cx
