#pragma once

#include "heartfan/category.hpp"
#include "heartfan/fan.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace heartfan {

// Heart obtained by tilting at a torsion pair: torsion objects stay, torsionfree objects
// are shifted by one.
struct TiltedHeart {
    TorsionPair pair;
    IntCone eff;          // classes of torsion objects and negated classes of torsionfree objects
    RatCone heart_cone;   // dual of the real hull of eff
    bool algebraic = false;
    std::string id() const { return pair.id(); }
};

TiltedHeart tilt(const CategoryModel& m, const TorsionPair& tp);
std::vector<TiltedHeart> tilted_hearts(const CategoryModel& m);

Cofan heart_cofan(const CategoryModel& m);
// Associated fan of the heart cofan; heart cones are tagged with their torsion-pair ids.
Fan heart_fan(const CategoryModel& m);
Fan heart_fan(const CategoryModel& m, const std::vector<TiltedHeart>& hearts);

struct GCone {
    RatCone cone;
    std::string heart;                     // empty when built from a bare fan
    std::vector<LatticeVector> c_vectors;  // lattice basis generating the effective cone
    std::vector<LatticeVector> g_vectors;  // dual basis, the rays of the cone
};

struct VirtualGFan {
    Fan fan;   // full cones and their faces
    std::vector<GCone> cones;
};

VirtualGFan virtual_gfan(const CategoryModel& m);
VirtualGFan virtual_gfan(const Fan& f);

// Dual basis of a unimodular basis; throws ConsistencyError otherwise.
std::vector<LatticeVector> dual_basis(const std::vector<LatticeVector>& basis);

// Dual vectors for which the object is semistable.
RatCone stability_space(const CategoryModel& m, const std::string& id);

struct StabilitySpace {
    std::string id;
    RatCone cone;
    std::size_t codim = 0;
};

struct Chamber {
    RatCone cone;   // closure of the chamber
    std::set<std::string> hearts;
};

struct WallChamberReport {
    std::vector<StabilitySpace> spaces;   // one per object
    std::vector<RatCone> walls;           // distinct codimension-one spaces
    std::vector<Chamber> chambers;
    std::size_t samples = 0;
    std::vector<std::string> sample_failures;   // chamber points with semistable objects
    bool truncated = false;
};

WallChamberReport walls_and_chambers(const CategoryModel& m, std::size_t samples_per_chamber = 40,
                                     unsigned long seed = 0);

Fan stability_fan(const CategoryModel& m);

struct KernelPair {
    TiltedHeart heart;
    Subcat kernel;                  // objects of the heart on which the witness vanishes
    std::set<std::string> shifted;  // kernel objects that sit in the heart as shifts
    DualVector witness;
};

KernelPair distinguished_kernel_pair(const CategoryModel& m, const DualVector& v);
std::vector<TiltedHeart> hearts_containing(const CategoryModel& m, const DualVector& v);
// Torsion pairs of the semistable subcategory; their number equals the number of hearts containing v.
std::size_t semistable_torsion_pair_count(const CategoryModel& m, const DualVector& v);

// Two rows (real part, imaginary part) of rank entries each.
struct Charge {
    std::vector<Rational> re, im;
};
Charge parse_charge(const std::string& text);

struct Phase {
    Rational re, im;                 // direction in the closed upper half-plane
    std::optional<Rational> exact;   // phase in (0,1] when it is a multiple of 1/4
    std::string str() const;
};

struct PhaseEntry {
    Phase phase;
    DualVector witness;   // pullback of a functional vanishing on the direction
    SemistableSet objects;
};

struct PhaseSlice {
    Charge charge;
    std::vector<PhaseEntry> entries;   // increasing phase
};

PhaseSlice phase_slice(const CategoryModel& m, const Charge& z);

struct ThickLabel {
    Subcat generators;
    std::set<std::string> shifted;
};
ThickLabel thick_label(const CategoryModel& m, const DualVector& v);

}  // namespace heartfan
