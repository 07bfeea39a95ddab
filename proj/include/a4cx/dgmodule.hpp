#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "a4cx/complex.hpp"
#include "a4cx/ideal.hpp"
#include "a4cx/poly.hpp"

namespace a4cx {

// Differential graded right S*Q-module whose underlying graded S-module is
// free on finitely many generators. diff[j][i] holds the coefficient of
// generator j in d(generator i): homogeneous of degree deg_i + 1 - deg_j.
// q acts on generators by the constant matrix qact (g_i.q = sum_j qact(j,i) g_j)
// and on S-coefficients by the inverse dual action: (g.s).q = (g.q).(q^2 s).
struct DgSModule {
    Field field = Field::F2;
    GroupTag group = GroupTag::Trivial;
    std::vector<int> gen_deg;
    std::vector<std::vector<Poly>> diff;
    MatrixF qact;

    int rank() const { return static_cast<int>(gen_deg.size()); }
    int min_degree() const;
    int max_degree() const;
};

// Checks S-linearity degrees, d^2 = 0, q^3 = 1 and q-equivariance of the
// differential, all symbolically. nullopt when fine.
std::optional<std::string> check_dg_module(const DgSModule& m);
void require_valid_dg(const DgSModule& m);

// F-basis of the degree-n chain group: (generator i, monomial j) pairs.
struct DgChainBasis {
    std::vector<std::pair<int, int>> elems;
    std::map<std::pair<int, int>, int> index;
};
DgChainBasis dg_chain_basis(const DgSModule& m, int n);
int dg_chain_dim(const DgSModule& m, int n);

MatrixF dg_chain_diff(const DgSModule& m, int n);        // M^n -> M^{n+1}
MatrixF dg_chain_q(const DgSModule& m, int n);           // right mult by qbar
MatrixF dg_chain_mult_x(const DgSModule& m, int n, int which);  // 1 or 2

// The BGG transform C* ~> C* (x) S with the twisted differential
// d(c (x) s) = dc (x) s + sum_i c y_i (x) x_i s.
DgSModule beta(const PerfectComplex& c);

struct DgHomologySlice {
    int dim = 0;
    MatrixF qmat;
    MatrixF x1, x2;  // multiplication maps into the next degree
};

struct DgHomology {
    std::map<int, DgHomologySlice> h;
    bool finite = false;
    bool cyclic = false;  // generated over S by a one-dimensional lowest piece
    std::optional<GradedIdeal> annihilator;
    int d1 = 0, d2 = 0;  // parameter degrees of the annihilator when cyclic
    std::string note;

    int lowest() const { return h.empty() ? 0 : h.begin()->first; }
    int total_dim() const;
};

// Computes homology upward from the lowest generator degree. Stops once the
// candidate annihilator has stabilized as a parameter ideal (d1,d2) with
// accumulated homology dimension d1*d2 followed by two degrees of vanishing
// homology; otherwise gives up `bound` degrees above the lowest one.
DgHomology dg_homology(const DgSModule& m, int bound = 64);

}  // namespace a4cx
