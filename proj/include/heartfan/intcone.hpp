#pragma once

#include "heartfan/linalg.hpp"
#include "heartfan/ratcone.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace heartfan {

// Finitely generated submonoid of Z^n: all non-negative integer combinations of the
// generators. Generators are deduplicated and zero is dropped; they are not rescaled,
// since rescaling a generator changes the monoid.
class IntCone {
public:
    IntCone() = default;
    IntCone(std::size_t rank, const std::vector<LatticeVector>& generators);

    static IntCone zero(std::size_t rank) { return IntCone(rank, {}); }

    std::size_t rank() const { return rank_; }
    const std::vector<LatticeVector>& generators() const { return gens_; }
    const RatCone& hull() const { return hull_; }

    bool contains(const LatticeVector& x) const;
    bool contains(const IntCone& other) const;

    IntCone negated() const;
    std::string str() const;

    // Equality of monoids.
    friend bool operator==(const IntCone& a, const IntCone& b);

    static constexpr std::size_t search_node_limit = 4'000'000;

private:
    bool search(std::size_t idx, const LatticeVector& residual, const Integer& budget, std::size_t& nodes,
                std::vector<std::vector<LatticeVector>>& dead) const;

    std::size_t rank_ = 0;
    std::vector<LatticeVector> gens_;
    RatCone hull_;
    IntegerLattice span_;                  // group generated by all generators
    IntegerLattice group_;                 // group generated by generators inside the lineality
    std::vector<LatticeVector> pointed_;   // the other generators, heaviest first
    std::vector<Integer> weights_;
    LatticeVector weight_fn_;              // positive on every pointed generator, zero on the lineality
};

IntCone span_int(std::size_t rank, const std::vector<LatticeVector>& gens);
bool member_int(const IntCone& c, const LatticeVector& x);
inline const RatCone& hull(const IntCone& c) { return c.hull(); }
inline RatCone dual(const RatCone& c) { return c.dual(); }

// Irreducible-first generating subset, found by greedily dropping redundant generators.
std::vector<LatticeVector> minimal_generators(const IntCone& c);

struct IntFacePoset {
    FacePoset real;               // faces of the hull
    std::vector<IntCone> cones;   // cones[i] = c intersected with real[i]
};

IntFacePoset faces(const IntCone& c);
std::vector<IntCone> exposed_faces(const IntCone& c);

IntCone min_face(const IntCone& c, const IntCone& sub);
IntCone localize(const IntCone& c, const IntCone& sub);
bool is_face(const IntCone& tau, const IntCone& sigma);

// hull(c) intersected with the lattice, generated by its Hilbert basis plus a basis of the
// lattice points of the lineality space (both signs).
IntCone saturate(const IntCone& c);

struct ConeProps {
    std::size_t dim = 0;
    bool full = false;
    bool strictly_convex = false;
    bool smooth = false;        // the monoid itself is generated by part of a lattice basis
    bool hull_smooth = false;   // the saturation is (rays of hull unimodular)
    bool polyhedral = true;
};

ConeProps cone_props(const IntCone& c);

enum class MinkowskiOp { sum, difference };
IntCone minkowski(const IntCone& a, const IntCone& b, MinkowskiOp op);

// dual(c - face) = dual(hull c) cut by the orthogonal complement of the face.
RatCone dual_face(const IntCone& c, const IntCone& face);

// Simplicial cones covering a pointed cone, each given by its rays.
std::vector<std::vector<LatticeVector>> triangulate(const RatCone& c);

}  // namespace heartfan
