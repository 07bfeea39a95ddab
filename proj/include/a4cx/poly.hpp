#pragma once

#include <map>
#include <string>
#include <vector>

#include "a4cx/matrix.hpp"

namespace a4cx {

// Element of S = F[x1,x2], stored by homogeneous component. Component d holds
// d+1 coefficients over the monomial basis x1^d, x1^(d-1)x2, ..., x2^d.
class Poly {
  public:
    explicit Poly(Field f = Field::F2) : field_(f) {}

    static Poly zero(Field f) { return Poly(f); }
    static Poly monomial(Field f, int e1, int e2,
                         Scalar coeff = Scalar(Field::F2, 1));
    static Poly x1(Field f) { return monomial(f, 1, 0, Scalar::one(f)); }
    static Poly x2(Field f) { return monomial(f, 0, 1, Scalar::one(f)); }

    Field field() const { return field_; }
    bool is_zero() const { return comps_.empty(); }
    bool is_homogeneous() const { return comps_.size() <= 1; }
    // degree of a nonzero homogeneous polynomial
    int degree() const;
    int top_degree() const { return comps_.empty() ? -1 : comps_.rbegin()->first; }

    Scalar coeff(int e1, int e2) const;
    void add_term(int e1, int e2, Scalar c);

    // the degree-d component as a packed 1 x (d+1) row
    MatrixF component_row(int d) const;
    static Poly from_component_row(const MatrixF& row, int d);
    Poly component(int d) const;

    Poly operator+(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Scalar s) const;
    bool operator==(const Poly& o) const;

    const std::map<int, std::vector<Scalar>>& components() const {
        return comps_;
    }

  private:
    void normalize();
    Field field_;
    std::map<int, std::vector<Scalar>> comps_;
};

// Dual C3-action q.x1 = x1+x2, q.x2 = x1, extended as a ring automorphism.
Poly q_act(int power, const Poly& f);

// Matrix of q^power on the degree-d component (column convention).
MatrixF q_action_matrix(Field f, int power, int d);

// Reynolds operator f + qf + q^2 f (1/3 = 1 in characteristic 2).
Poly reynolds(const Poly& f);

// Steenrod square Sq^k on a homogeneous polynomial; zero for k > deg f.
// Coefficients are treated F-linearly (extension of scalars from F2).
Poly steenrod_sq(int k, const Poly& f);

// Multiplication-by-x_i maps S_d -> S_{d+1} as index shifts.
MatrixF mult_x1_matrix(Field f, int d);
MatrixF mult_x2_matrix(Field f, int d);

std::string print_poly(const Poly& f);
Poly parse_poly(const std::string& text, Field f);

}  // namespace a4cx
