#include "heartfan/fan.hpp"

#include "heartfan/errors.hpp"

#include <algorithm>

namespace heartfan {

void ConeTags::merge(const ConeTags& o) {
    hearts.insert(o.hearts.begin(), o.hearts.end());
    dual_face = dual_face || o.dual_face;
    truncated = truncated || o.truncated;
}

Fan Fan::generated_by(std::size_t rank, const std::vector<RatCone>& cones) {
    Fan f(rank);
    for (const auto& c : cones) f.add_with_faces(c);
    return f;
}

void Fan::add(const RatCone& c, const ConeTags& tags) {
    require_rank(rank_, c.rank(), "fan cone");
    cones_[c].merge(tags);
}

void Fan::add_with_faces(const RatCone& c, const ConeTags& tags) {
    add(c, tags);
    FacePoset fp = faces(c);
    for (const auto& node : fp.nodes()) add(node.cone);
}

const ConeTags& Fan::tags(const RatCone& c) const {
    auto it = cones_.find(c);
    if (it == cones_.end()) throw MembershipError("cone " + c.str() + " is not in the fan");
    return it->second;
}

std::vector<RatCone> Fan::cones() const {
    std::vector<RatCone> out;
    out.reserve(cones_.size());
    for (const auto& [c, t] : cones_) out.push_back(c);
    return out;
}

std::vector<RatCone> Fan::maximal() const {
    auto all = cones();
    std::vector<RatCone> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool covered = false;
        // canonical order is by dimension, so only later cones can be larger
        for (std::size_t j = i + 1; j < all.size() && !covered; ++j)
            covered = all[j].dim() > all[i].dim() && is_face(all[i], all[j]);
        if (!covered) out.push_back(all[i]);
    }
    return out;
}

std::vector<RatCone> Fan::full_cones() const {
    std::vector<RatCone> out;
    for (const auto& [c, t] : cones_)
        if (c.is_full()) out.push_back(c);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Fan::face_edges() const {
    auto all = cones();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[j].dim() == all[i].dim() + 1 && is_face(all[i], all[j])) out.emplace_back(i, j);
    return out;
}

bool same_cones(const Fan& a, const Fan& b) { return a.rank() == b.rank() && a.cones() == b.cones(); }

FanReport check_fan(const Fan& f, bool require_face_closure) {
    FanReport r;
    auto top = f.maximal();
    if (require_face_closure) {
        for (const auto& c : top) {
            FacePoset fp = faces(c);
            for (const auto& node : fp.nodes())
                if (!f.contains(node.cone))
                    r.violations.push_back("face " + node.cone.str() + " of " + c.str() + " is missing");
        }
    }
    for (std::size_t i = 0; i < top.size(); ++i)
        for (std::size_t j = i + 1; j < top.size(); ++j) {
            RatCone meet = top[i].intersect(top[j]);
            if (!is_face(meet, top[i]) || !is_face(meet, top[j]))
                r.violations.push_back("cones " + top[i].str() + " and " + top[j].str() + " meet in " + meet.str() +
                                       ", not a common face");
        }
    return r;
}

// Cofans

namespace {

std::vector<LatticeVector> sorted_gens(const IntCone& c) {
    auto g = c.generators();
    std::sort(g.begin(), g.end());
    return g;
}

bool representation_less(const IntCone& a, const IntCone& b) {
    if (a.generators().size() != b.generators().size()) return a.generators().size() < b.generators().size();
    return sorted_gens(a) < sorted_gens(b);
}

bool canonical_less(const IntCone& a, const IntCone& b) {
    if (a.hull() < b.hull()) return true;
    if (b.hull() < a.hull()) return false;
    return sorted_gens(a) < sorted_gens(b);
}

// Insert into a list of distinct monoids, keeping the simplest representative.
void insert_unique(std::vector<IntCone>& list, const IntCone& c) {
    for (auto& x : list) {
        if (x.hull() == c.hull() && x == c) {
            if (representation_less(c, x)) x = c;
            return;
        }
    }
    list.push_back(c);
}

}  // namespace

std::optional<std::size_t> Cofan::find(const IntCone& c) const {
    for (std::size_t i = 0; i < cones_.size(); ++i)
        if (cones_[i].hull() == c.hull() && cones_[i] == c) return i;
    return std::nullopt;
}

bool is_coface(const IntCone& rho, const IntCone& sigma) {
    if (rho.rank() != sigma.rank() || !rho.contains(sigma)) return false;
    std::vector<LatticeVector> inverted;
    for (const auto& g : sigma.generators())
        if (rho.contains(-g)) inverted.push_back(g);
    IntCone tau(sigma.rank(), inverted);
    if (!is_face(tau, sigma)) return false;
    return localize(sigma, tau) == rho;
}

std::vector<IntCone> cofaces(const IntCone& sigma) {
    std::vector<IntCone> out;
    for (const auto& tau : faces(sigma).cones) insert_unique(out, localize(sigma, tau));
    return out;
}

Cofan Cofan::assemble(std::size_t rank, const std::vector<IntCone>& generators) {
    Cofan c;
    c.rank_ = rank;
    std::vector<IntCone> distinct;
    for (const auto& g : generators) insert_unique(distinct, g);
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        bool below = false;
        for (std::size_t j = 0; j < distinct.size() && !below; ++j)
            below = j != i && is_coface(distinct[i], distinct[j]);
        if (!below) c.maximal_.push_back(distinct[i]);
    }
    for (const auto& m : c.maximal_)
        for (const auto& x : cofaces(m)) insert_unique(c.cones_, x);
    std::sort(c.maximal_.begin(), c.maximal_.end(), canonical_less);
    std::sort(c.cones_.begin(), c.cones_.end(), canonical_less);
    return c;
}

Cofan generate_cofan(std::size_t rank, const std::vector<IntCone>& seeds) {
    for (const auto& s : seeds) require_rank(rank, s.rank(), "cofan seed");
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i + 1; j < seeds.size(); ++j) {
            IntCone sum = minkowski(seeds[i], seeds[j], MinkowskiOp::sum);
            if (!is_coface(sum, seeds[i]) || !is_coface(sum, seeds[j]))
                throw CofanAxiomViolation("sum of " + seeds[i].str() + " and " + seeds[j].str() +
                                          " is not a coface of both");
        }
    return Cofan::assemble(rank, seeds);
}

Fan associated_fan(const Cofan& c) {
    Fan f(c.rank());
    for (const auto& s : c.maximal()) f.add_with_faces(s.hull().dual());
    return f;
}

Fan dual_face_fan(const Cofan& c) {
    Fan f(c.rank());
    ConeTags t;
    t.dual_face = true;
    for (const auto& s : c.maximal())
        for (const auto& k : exposed_faces(s)) f.add(dual_face(s, k), t);
    return f;
}

IntCone lowest_coface(const Cofan& c, const RatCone& tau) {
    require_rank(c.rank(), tau.rank(), "lowest coface");
    for (const auto& s : c.maximal()) {
        if (!is_face(tau, s.hull().dual())) continue;
        std::vector<LatticeVector> perp;
        for (const auto& g : s.generators()) {
            bool zero = true;
            for (const auto& t : tau.rays()) zero = zero && dot(t, g) == 0;
            for (const auto& t : tau.lineality()) zero = zero && dot(t, g) == 0;
            if (zero) perp.push_back(g);
        }
        return localize(s, IntCone(c.rank(), perp));
    }
    throw MembershipError("lowest coface: " + tau.str() + " is not in the associated fan");
}

Cofan pushforward(const Cofan& c, const LatticeHom& f) {
    require_rank(f.source_rank(), c.rank(), "pushforward");
    std::vector<IntCone> images;
    for (const auto& s : c.maximal()) {
        std::vector<LatticeVector> g;
        for (const auto& x : s.generators()) g.push_back(f(x));
        images.emplace_back(f.target_rank(), g);
    }
    return Cofan::assemble(f.target_rank(), images);
}

Fan pullback(const Fan& fan, const LatticeHom& f) {
    require_rank(f.target_rank(), fan.rank(), "pullback");
    LatticeHom t = dual_hom(f);
    Fan out(f.source_rank());
    out.set_truncated(fan.truncated());
    for (const auto& [c, tags] : fan.entries()) {
        std::vector<LatticeVector> ineq, eq;
        for (const auto& h : c.facets()) ineq.push_back(t(h));
        for (const auto& e : c.equations()) eq.push_back(t(e));
        out.add(RatCone::from_inequalities(f.source_rank(), ineq, eq), tags);
    }
    return out;
}

SupportHit support_query(const Fan& f, const DualVector& v) {
    require_rank(f.rank(), v.rank(), "support query");
    SupportHit hit;
    hit.query = v;
    hit.truncated = f.truncated();
    std::vector<RatCone> containing;
    for (const auto& [c, t] : f.entries())
        if (c.contains(v)) containing.push_back(c);
    if (containing.empty()) return hit;
    // canonical order puts the lowest dimension first
    hit.cone = containing.front();
    hit.minimal = std::all_of(containing.begin(), containing.end(),
                              [&](const RatCone& c) { return c.contains(*hit.cone); });
    return hit;
}

}  // namespace heartfan
