#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "a4cx/skew.hpp"
#include "a4cx/subspace.hpp"

namespace a4cx {

// Finite-dimensional right module over L * Q given by the matrices of right
// multiplication, acting on column vectors. Required relations:
//   act_y1^2 = act_y2^2 = 0,  act_y1 act_y2 = act_y2 act_y1,  act_q^3 = 1,
//   act_q act_y2 = act_y1 act_q,  act_q (act_y1 + act_y2) = act_y2 act_q.
struct ModuleRep {
    Field field = Field::F2;
    GroupTag group = GroupTag::Trivial;
    int dim = 0;
    MatrixF act_y1, act_y2, act_q;

    ModuleRep() = default;
    ModuleRep(Field f, GroupTag g, int d)
        : field(f),
          group(g),
          dim(d),
          act_y1(MatrixF::zero(f, d, d)),
          act_y2(MatrixF::zero(f, d, d)),
          act_q(MatrixF::identity(f, d)) {}

    MatrixF act(const SkewElem& a) const;  // right mult by an algebra element
    MatrixF act_y1y2() const { return act_y2 * act_y1; }
};

// The free module (L*Q)^rank with the right regular action.
ModuleRep free_module(Field f, GroupTag g, int rank);
// L itself as a right L*C3-module: x . qbar = Psi(q^-1)(x).
ModuleRep lambda_module(Field f, GroupTag g);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

// nullopt when the relations hold, otherwise a description.
std::optional<std::string> check_module_relations(const ModuleRep& m);

struct FreenessCertificate {
    bool free = false;
    int rank = 0;          // g with dim = 4g when free
    MatrixF generators;    // rows: lifted generating set
};
// A finite module over the local algebra L is free iff dim M = 4 * dim M/MI.
FreenessCertificate is_lambda_free(const ModuleRep& m);

// Bounded cochain complex of L*Q-modules; diffs[i] is d: C^(lo+i) -> C^(lo+i+1)
// and must commute with all three action matrices, with d.d = 0.
struct PerfectComplex {
    Field field = Field::F2;
    GroupTag group = GroupTag::Trivial;
    int lo = 0, hi = -1;  // empty when hi < lo
    std::vector<ModuleRep> terms;
    std::vector<MatrixF> diffs;

    bool in_range(int deg) const { return deg >= lo && deg <= hi; }
    const ModuleRep& term(int deg) const;
    int dim_at(int deg) const { return in_range(deg) ? term(deg).dim : 0; }
    // d: C^deg -> C^(deg+1), zero-sized outside range
    MatrixF diff(int deg) const;
};

struct Violation {
    int degree;
    std::string what;
};
struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
    std::string str() const;
};
ValidationReport validate(const PerfectComplex& c);
void require_valid(const PerfectComplex& c);  // throws DomainError

// Graded C3- (or trivial-) representation: dimension and q-matrix per degree.
struct QRep {
    int dim = 0;
    MatrixF qmat;
};
using GradedQRep = std::map<int, QRep>;

int total_dim(const GradedQRep& h);

// Per-degree homology data with deterministic representatives.
struct HomologySlice {
    SubspaceF cycles;
    SubspaceF boundaries;
    MatrixF reps;  // rows: canonical coset representatives
    MatrixF qmat;  // induced action of qbar
};
std::map<int, HomologySlice> homology_detailed(const PerfectComplex& c);
GradedQRep homology(const PerfectComplex& c);

// Multiset of irreducibles of a C3-representation in characteristic 2.
// F2: counts (trivial, V); F4: eigenvalue counts for (1, w, w^2).
struct QDecomp {
    Field field;
    int mult[3] = {0, 0, 0};
};
QDecomp decompose_qrep(Field f, const MatrixF& qmat);

PerfectComplex shift(const PerfectComplex& c, int k);

// C^deg / C^deg I with induced q-action; I = (y1, y2).
struct TopQuotient {
    int dim = 0;
    MatrixF qmat;
    MatrixF reps;
    SubspaceF den;
};
TopQuotient top_quotient(const PerfectComplex& c, int deg);

// Homology dimensions of the quotient complex C/CI.
std::map<int, int> quotient_complex_homology_dims(const PerfectComplex& c);

}  // namespace a4cx
