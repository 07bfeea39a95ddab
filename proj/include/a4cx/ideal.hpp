#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "a4cx/poly.hpp"
#include "a4cx/subspace.hpp"

namespace a4cx {

// Homogeneous ideal of S = F[x1,x2], stored degreewise as canonical
// subspaces of the components S_d.
class GradedIdeal {
  public:
    GradedIdeal(Field f, std::vector<Poly> generators);

    Field field() const { return field_; }
    const std::vector<Poly>& generators() const { return gens_; }

    // Canonical subspace J_d of S_d; extends the cache on demand.
    const SubspaceF& degree_space(int d) const;
    int cached_to() const { return static_cast<int>(cache_.size()) - 1; }

    bool contains(const Poly& f) const;  // homogeneous f

  private:
    Field field_;
    std::vector<Poly> gens_;
    mutable std::vector<SubspaceF> cache_;
};

struct CogeneratorSlice {
    int degree;
    MatrixF reps;  // rows: canonical representatives in S_degree coordinates
    MatrixF qmat;  // induced q-action; only meaningful for invariant ideals
};

// Minimal generator data of J / (x1,x2) J (graded Nakayama).
std::vector<CogeneratorSlice> minimal_generator_slices(const GradedIdeal& j,
                                                       int up_to,
                                                       bool with_q_action);

// Parameter-ideal test: exactly two minimal generators, of degrees d1 <= d2,
// with J containing everything from degree d1+d2-1 on.
std::optional<std::pair<int, int>> is_parameter_ideal(const GradedIdeal& j);

// dim_F S/J for an ideal of finite codimension.
int quotient_total_dim(const GradedIdeal& j, int top);

bool ideal_membership(const Poly& f, const GradedIdeal& j);

// J/(x1,x2)J with q-action for an invariant parameter ideal.
std::vector<CogeneratorSlice> cogenerators(const GradedIdeal& j);

bool is_invariant_ideal(const GradedIdeal& j);
bool is_steenrod_closed(const GradedIdeal& j);

// Criterion (iii)/(iv): a q-fixed cogenerator class in even degree.
// Both the fixed-class route and the Reynolds-lift route are computed and
// cross-checked.
bool invariant_even_parameter_exists(const GradedIdeal& j);

// Canonical byte string identifying a parameter ideal (field, generator
// degrees, and the subspace chain up to degree d1+d2-2).
std::string canonical_key(const GradedIdeal& j);
bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b);

// Canonical minimal generators (lifted cogenerator representatives).
std::vector<Poly> canonical_generators(const GradedIdeal& j);

struct EnumerationFilters {
    bool invariant = false;
    bool steenrod = false;
};

// All parameter ideals with generator degrees (d1, d2), deduplicated by
// canonical form, in deterministic (key-sorted) order.
std::vector<GradedIdeal> enumerate_parameter_ideals(
    Field f, int d1, int d2, EnumerationFilters filters = {},
    int degree_limit = 12, int jobs = 1);

// Independent second enumerator: builds the per-degree subspace chains
// directly instead of iterating generator pairs. Returns canonical keys.
std::vector<std::string> enumerate_parameter_ideals_by_chains(Field f, int d1,
                                                              int d2);

int enumeration_degree_limit(Field f);  // honors A4CX_ENUM_LIMIT

}  // namespace a4cx
