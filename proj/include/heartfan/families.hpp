#pragma once

#include "heartfan/category.hpp"
#include "heartfan/fan.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace heartfan {

enum class FamilyKind { projective_line, kronecker, tube_rank2, semisimple_Z, elliptic_rational };

std::string to_string(FamilyKind k);
FamilyKind parse_family_kind(const std::string& name);

struct FamilySpec {
    FamilyKind kind = FamilyKind::projective_line;
    int depth = 1;
    int arrows = 2;          // kronecker only
    int slope_bound = 3;     // elliptic only: largest slope denominator
    void validate() const;   // throws SpecError
};

// Ray direction base + root * sqrt(radicand); rational when radicand is a square (including 0).
struct LimitRay {
    LatticeVector base;
    LatticeVector root;
    Integer radicand;
    bool rational = true;
    bool in_fan = false;   // materialised as a cone of the fan
    std::string str() const;
};

struct FamilyFan {
    FamilySpec spec;
    Fan fan;
    std::vector<LimitRay> limits;
    std::vector<Integer> sequence;   // kronecker: a_0 .. a_{depth-1}
    std::string dense_region;        // description of a region filled by rays, if any
    bool truncated = false;
};

// Cones are tagged with heart names; cones that are not dual faces of any heart keep dual_face = false.
FamilyFan family_fan(const FamilySpec& spec);

// Kronecker recurrence a_{i+2} = n a_{i+1} - a_i from a_0 = 0, a_1 = 1; first count terms.
std::vector<Integer> kronecker_sequence(int arrows, std::size_t count);

enum class PredicateKind { coh_P1, mixed_P1, reversed_P1, effective_upper, polyhedral };

// An effective cone given by a membership rule, together with the closure of its real hull.
class PredicateCone {
public:
    static PredicateCone named(PredicateKind kind);
    static PredicateCone polyhedral(const RatCone& closure);

    PredicateKind kind() const { return kind_; }
    std::size_t rank() const { return closure_.rank(); }
    bool contains(const LatticeVector& x) const { return rule_(x); }
    const RatCone& closure() const { return closure_; }
    RatCone heart_cone() const { return closure_.dual(); }
    PredicateCone negated() const;

    // Faces C ∩ S^perp of the heart cone C, S running over the exposed faces v^perp ∩ E for v in C.
    // Lattice points of E on v^perp are searched in a box of the given radius.
    std::vector<RatCone> dual_faces(long radius = 6) const;

private:
    PredicateCone(PredicateKind k, RatCone closure, std::function<bool(const LatticeVector&)> rule)
        : kind_(k), closure_(std::move(closure)), rule_(std::move(rule)) {}

    PredicateKind kind_;
    RatCone closure_;
    std::function<bool(const LatticeVector&)> rule_;
};

std::string to_string(PredicateKind k);
PredicateKind parse_predicate_kind(const std::string& name);

// Effective cones of the hearts of the semisimple category over Z, truncated at the depth.
std::vector<std::pair<std::string, PredicateCone>> semisimple_Z_hearts(int depth);

struct CrosscheckReport {
    FamilySpec spec;
    std::vector<RatCone> matched;
    std::vector<RatCone> only_family;
    std::vector<RatCone> only_dataset;
    std::vector<RatCone> truncation_artifacts;   // dataset cones containing a limit ray
    bool ok() const { return only_family.empty() && only_dataset.empty(); }
};

// Spec read from the dataset's family tag; SpecError if the dataset has no closed-form family.
FamilySpec family_spec_of(const CategoryModel& m);
CrosscheckReport family_crosscheck(const FamilySpec& spec, const CategoryModel& m);

}  // namespace heartfan
