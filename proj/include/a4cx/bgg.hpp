#pragma once

#include "a4cx/dgmodule.hpp"

namespace a4cx {

// One-dimensional C3-representation label. Over F2 only Triv exists; over
// GF(4), Alpha denotes the representation where qbar acts by w (bit pattern
// (0,1)) and Alpha2 the one where it acts by w^2 = w+1.
enum class RepLabel : std::uint8_t { Triv, Alpha, Alpha2 };

const char* rep_label_name(RepLabel l);
RepLabel rep_label_from_name(const std::string& s);
Scalar rep_label_scalar(Field f, RepLabel l);

struct ClassifyingTriple {
    int l = 0;
    RepLabel L = RepLabel::Triv;
    GradedIdeal J;
    GroupTag group = GroupTag::C3;
    int m = 0, n = 0;  // cogenerator degrees minus one

    ClassifyingTriple(int l_, RepLabel L_, GradedIdeal J_,
                      GroupTag g = GroupTag::C3)
        : l(l_), L(L_), J(std::move(J_)), group(g) {}
};

bool triple_equal(const ClassifyingTriple& a, const ClassifyingTriple& b);

// The complete quasi-isomorphism invariant of a perfect complex with
// four-dimensional homology: lowest homology degree, H^l of the BGG
// transform, and the annihilator parameter ideal.
ClassifyingTriple classify(const PerfectComplex& c);

// Koszul dg module on generators of internal degrees 0, m, n, m+n built from
// a q-equivariant section of J -> J/(x1,x2)J, tensored with L.
DgSModule koszul_module(RepLabel label, const GradedIdeal& j,
                        GroupTag group = GroupTag::C3);

// M (x)_S eps*, smart-truncated below the lowest homology degree; the
// replacement cokernel term is checked to be free over the exterior algebra.
PerfectComplex epsilon_tensor(const DgSModule& m);

PerfectComplex realize(const ClassifyingTriple& t);

bool same_quasi_iso_class(const PerfectComplex& a, const PerfectComplex& b);

}  // namespace a4cx
