#pragma once

#include "heartfan/lattice.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace heartfan {

// Closed rational polyhedral cone, kept in both representations:
//   V: cone(rays) + span(lineality)
//   H: { x : h.x >= 0 for facets h, e.x = 0 for equations e }
// Rays are primitive and reduced modulo the lineality basis, facets are primitive and
// reduced modulo the equation basis, both sorted. Equal cones have equal members.
class RatCone {
public:
    RatCone() = default;

    static RatCone zero(std::size_t rank);
    static RatCone whole(std::size_t rank);
    static RatCone from_generators(std::size_t rank, const std::vector<LatticeVector>& rays,
                                   const std::vector<LatticeVector>& lineality = {});
    static RatCone from_inequalities(std::size_t rank, const std::vector<LatticeVector>& inequalities,
                                     const std::vector<LatticeVector>& equations = {});

    std::size_t rank() const { return rank_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const std::vector<LatticeVector>& lineality() const { return lineality_; }
    const std::vector<LatticeVector>& facets() const { return facets_; }
    const std::vector<LatticeVector>& equations() const { return equations_; }

    std::size_t dim() const { return rank_ - equations_.size(); }
    std::size_t lineality_dim() const { return lineality_.size(); }
    bool is_full() const { return equations_.empty(); }
    bool is_pointed() const { return lineality_.empty(); }
    bool is_zero() const { return rays_.empty() && lineality_.empty(); }

    bool contains(const LatticeVector& x) const;
    bool contains(const DualVector& x) const;
    bool contains(const RatCone& other) const;
    // Interior relative to the span of the cone.
    bool contains_relative_interior(const DualVector& x) const;

    RatCone dual() const;
    RatCone negated() const;
    RatCone intersect(const RatCone& other) const;
    RatCone slice(const std::vector<LatticeVector>& orthogonal_to) const;

    // A point in the relative interior: the sum of the rays.
    LatticeVector interior_point() const;

    std::string str() const;

    friend bool operator==(const RatCone& a, const RatCone& b) {
        return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
    }
    // Canonical order: dimension, then rays, then lineality.
    friend bool operator<(const RatCone& a, const RatCone& b);

private:
    static RatCone assemble(std::size_t rank, const std::vector<LatticeVector>& rays,
                            const std::vector<LatticeVector>& lineality,
                            const std::vector<LatticeVector>& facets,
                            const std::vector<LatticeVector>& equations);

    std::size_t rank_ = 0;
    std::vector<LatticeVector> rays_;
    std::vector<LatticeVector> lineality_;
    std::vector<LatticeVector> facets_;
    std::vector<LatticeVector> equations_;
};

bool is_face(const RatCone& tau, const RatCone& sigma);

// Smallest face of sigma containing the given points (which must lie in sigma).
RatCone smallest_face_containing(const RatCone& sigma, const std::vector<LatticeVector>& points);

struct FaceNode {
    RatCone cone;
    std::vector<std::size_t> parents;    // faces one dimension up
    std::vector<std::size_t> children;   // faces one dimension down
    std::vector<std::size_t> ray_ids;    // rays of the ambient cone lying on this face
    bool exposed = true;
    std::size_t dim = 0;
};

class FacePoset {
public:
    FacePoset() = default;
    explicit FacePoset(std::vector<FaceNode> nodes) : nodes_(std::move(nodes)) {}

    std::size_t size() const { return nodes_.size(); }
    const FaceNode& operator[](std::size_t i) const { return nodes_[i]; }
    const std::vector<FaceNode>& nodes() const { return nodes_; }
    std::optional<std::size_t> find(const RatCone& c) const;
    bool contains(const RatCone& c) const { return find(c).has_value(); }

private:
    std::vector<FaceNode> nodes_;
};

FacePoset faces(const RatCone& c);

}  // namespace heartfan
