#pragma once

#include "heartfan/intcone.hpp"
#include "heartfan/lattice.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace heartfan {

struct SesEntry {
    std::vector<std::string> sub;
    std::string mid;
    std::vector<std::string> quot;
};

// Which infinite family a truncated dataset belongs to.
struct FamilyTag {
    std::string kind;
    int arrows = 0;
    int depth = 0;
};

// Raw dataset content, before validation.
struct ModelData {
    std::string name;
    std::size_t rank = 0;
    std::vector<std::string> simples;
    std::map<std::string, LatticeVector> classes;
    std::vector<SesEntry> ses;
    std::vector<std::pair<std::string, std::string>> hom;
    bool approximate = false;
    std::optional<FamilyTag> family;
    // pairs of objects whose sum has class zero in a tilted heart
    std::vector<std::pair<std::string, std::string>> null_witnesses;
};

enum class Closure { none, torsion, torsionfree, serre, wide };

// Objects are indexed 0..size-1 in sorted id order. A set of objects is a bit mask.
using ObjectMask = std::uint64_t;

struct Subcat {
    std::set<std::string> ids;
    Closure kind = Closure::none;
    friend bool operator==(const Subcat& a, const Subcat& b) { return a.ids == b.ids; }
};

struct TorsionPair {
    Subcat torsion;
    Subcat torsionfree;
    std::string id() const;
    friend bool operator==(const TorsionPair& a, const TorsionPair& b) {
        return a.torsion == b.torsion && a.torsionfree == b.torsionfree;
    }
};

class CategoryModel {
public:
    static constexpr std::size_t max_objects = 64;
    static constexpr std::size_t max_multiset = 4;

    explicit CategoryModel(ModelData data);

    const std::string& name() const { return data_.name; }
    std::size_t rank() const { return data_.rank; }
    std::size_t size() const { return ids_.size(); }
    bool approximate() const { return data_.approximate; }
    const std::optional<FamilyTag>& family() const { return data_.family; }
    const ModelData& data() const { return data_; }

    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(std::size_t i) const { return ids_.at(i); }
    std::size_t index(const std::string& id) const;
    bool has(const std::string& id) const { return index_.count(id) > 0; }
    const LatticeVector& cls(std::size_t i) const { return classes_.at(i); }
    const LatticeVector& cls(const std::string& id) const { return cls(index(id)); }
    bool hom(std::size_t a, std::size_t b) const { return hom_[a][b]; }

    struct Sequence {
        std::vector<std::size_t> sub;
        std::size_t mid;
        std::vector<std::size_t> quot;
    };
    const std::vector<Sequence>& sequences() const { return seqs_; }

    // (class, nonzero object) pairs of all subobjects / quotients, including 0 and the object.
    using ClassSet = std::set<std::pair<LatticeVector, bool>>;
    const ClassSet& subobjects(std::size_t i) const { return subs_.at(i); }
    const ClassSet& quotients(std::size_t i) const { return quots_.at(i); }

    ObjectMask all() const;
    ObjectMask mask_of(const std::set<std::string>& ids) const;
    std::set<std::string> ids_of(ObjectMask m) const;
    Subcat subcat(ObjectMask m, Closure kind = Closure::none) const;

    // Closure of a set under quotients and extensions.
    ObjectMask torsion_closure(ObjectMask m) const;
    // Objects with no nonzero map from any object of m.
    ObjectMask right_perp(ObjectMask m) const;
    // Reasons the set fails the closure properties of the given kind; empty if it has them.
    std::vector<std::string> closure_violations(ObjectMask m, Closure kind) const;

private:
    ClassSet closure(std::size_t i, bool quotient) const;

    ModelData data_;
    std::vector<std::string> ids_;
    std::map<std::string, std::size_t> index_;
    std::vector<LatticeVector> classes_;
    std::vector<std::vector<bool>> hom_;
    std::vector<Sequence> seqs_;
    std::vector<ClassSet> subs_;
    std::vector<ClassSet> quots_;
};

std::set<LatticeVector> quotient_classes(const CategoryModel& m, const std::string& id);
std::set<LatticeVector> sub_classes(const CategoryModel& m, const std::string& id);

// Reasons (t, f) is not a torsion pair; empty if it is.
std::vector<std::string> torsion_pair_violations(const CategoryModel& m, ObjectMask t, ObjectMask f);

std::vector<TorsionPair> torsion_pairs(const CategoryModel& m);

struct NumericalPairs {
    TorsionPair lower;   // strictly positive torsion part, weakly nonpositive torsionfree part
    TorsionPair upper;   // weakly nonnegative torsion part, strictly negative torsionfree part
};
NumericalPairs numerical_tp(const CategoryModel& m, const DualVector& v);

struct SemistableSet {
    Subcat objects;
    std::set<std::string> stable;
};
SemistableSet semistable(const CategoryModel& m, const DualVector& v);

std::vector<std::pair<IntCone, Subcat>> face_subcats(const CategoryModel& m);
Subcat null_subcat(const CategoryModel& m);

// Full subcategory on the given objects, keeping the sequences and maps among them.
CategoryModel restrict_model(const CategoryModel& m, const std::set<std::string>& ids);

}  // namespace heartfan
