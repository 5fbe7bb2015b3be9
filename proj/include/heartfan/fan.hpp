#pragma once

#include "heartfan/intcone.hpp"
#include "heartfan/ratcone.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace heartfan {

struct ConeTags {
    std::set<std::string> hearts;   // torsion-pair ids whose heart cone is this cone
    bool dual_face = false;
    bool truncated = false;

    void merge(const ConeTags& o);
    friend bool operator==(const ConeTags&, const ConeTags&) = default;
};

// Collection of rational cones in the dual space, keyed by canonical form.
// Face closure is not enforced here; check_fan reports it.
class Fan {
public:
    Fan() = default;
    explicit Fan(std::size_t rank) : rank_(rank) {}

    // All faces of the given cones.
    static Fan generated_by(std::size_t rank, const std::vector<RatCone>& cones);

    std::size_t rank() const { return rank_; }
    std::size_t size() const { return cones_.size(); }
    bool empty() const { return cones_.empty(); }

    void add(const RatCone& c, const ConeTags& tags = {});
    void add_with_faces(const RatCone& c, const ConeTags& tags = {});
    bool contains(const RatCone& c) const { return cones_.count(c) > 0; }
    const ConeTags& tags(const RatCone& c) const;

    // Canonical order.
    std::vector<RatCone> cones() const;
    const std::map<RatCone, ConeTags>& entries() const { return cones_; }
    // Cones that are not a proper face of another cone.
    std::vector<RatCone> maximal() const;
    std::vector<RatCone> full_cones() const;
    // (face, cone) pairs with the face of codimension one, as indices into cones().
    std::vector<std::pair<std::size_t, std::size_t>> face_edges() const;

    bool truncated() const { return truncated_; }
    void set_truncated(bool t) { truncated_ = t; }

    friend bool operator==(const Fan& a, const Fan& b) {
        return a.rank_ == b.rank_ && a.cones_ == b.cones_ && a.truncated_ == b.truncated_;
    }

private:
    std::size_t rank_ = 0;
    std::map<RatCone, ConeTags> cones_;
    bool truncated_ = false;
};

// Same cone set, ignoring tags.
bool same_cones(const Fan& a, const Fan& b);

struct FanReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

FanReport check_fan(const Fan& f, bool require_face_closure = true);

// Coface-closed set of integral cones.
class Cofan {
public:
    Cofan() = default;

    std::size_t rank() const { return rank_; }
    std::size_t size() const { return cones_.size(); }
    const std::vector<IntCone>& cones() const { return cones_; }
    // Cones that are not a proper coface of another cone of the cofan.
    const std::vector<IntCone>& maximal() const { return maximal_; }
    std::optional<std::size_t> find(const IntCone& c) const;
    bool contains(const IntCone& c) const { return find(c).has_value(); }

private:
    friend Cofan generate_cofan(std::size_t, const std::vector<IntCone>&);
    friend Cofan pushforward(const Cofan&, const LatticeHom&);
    static Cofan assemble(std::size_t rank, const std::vector<IntCone>& generators);

    std::size_t rank_ = 0;
    std::vector<IntCone> cones_;
    std::vector<IntCone> maximal_;
};

bool is_coface(const IntCone& rho, const IntCone& sigma);
std::vector<IntCone> cofaces(const IntCone& sigma);

Cofan generate_cofan(std::size_t rank, const std::vector<IntCone>& seeds);
Fan associated_fan(const Cofan& c);
Fan dual_face_fan(const Cofan& c);
IntCone lowest_coface(const Cofan& c, const RatCone& tau);

Cofan pushforward(const Cofan& c, const LatticeHom& f);
// Preimages of the cones of a fan living in the target of f.
Fan pullback(const Fan& fan, const LatticeHom& f);

struct SupportHit {
    DualVector query;
    std::optional<RatCone> cone;
    bool minimal = false;     // cone is the unique smallest cone containing the query
    bool truncated = false;   // fan is a finite truncation
};

SupportHit support_query(const Fan& f, const DualVector& v);

}  // namespace heartfan
