#include "heartfan/ratcone.hpp"

#include "double_description.hpp"
#include "heartfan/errors.hpp"
#include "heartfan/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace heartfan {

namespace {

std::vector<LatticeVector> reduce_all(const std::vector<LatticeVector>& vs, const std::vector<LatticeVector>& basis) {
    std::set<LatticeVector> out;
    for (const auto& v : vs) {
        auto r = reduce_modulo(v, basis);
        if (!r.is_zero()) out.insert(std::move(r));
    }
    return {out.begin(), out.end()};
}

void check_ranks(std::size_t rank, const std::vector<LatticeVector>& vs, const char* what) {
    for (const auto& v : vs) require_rank(rank, v.rank(), what);
}

}  // namespace

RatCone RatCone::assemble(std::size_t rank, const std::vector<LatticeVector>& rays,
                          const std::vector<LatticeVector>& lineality, const std::vector<LatticeVector>& facets,
                          const std::vector<LatticeVector>& equations) {
    RatCone c;
    c.rank_ = rank;
    c.lineality_ = canonical_span_basis(lineality, rank);
    c.rays_ = reduce_all(rays, c.lineality_);
    c.equations_ = canonical_span_basis(equations, rank);
    c.facets_ = reduce_all(facets, c.equations_);
    if (c.lineality_.size() + c.equations_.size() > rank)
        throw ConsistencyError("cone representation: lineality and equations overlap");
    return c;
}

RatCone RatCone::zero(std::size_t rank) {
    std::vector<LatticeVector> eqs;
    for (std::size_t i = 0; i < rank; ++i) eqs.push_back(LatticeVector::unit(rank, i));
    return assemble(rank, {}, {}, {}, eqs);
}

RatCone RatCone::whole(std::size_t rank) {
    std::vector<LatticeVector> lin;
    for (std::size_t i = 0; i < rank; ++i) lin.push_back(LatticeVector::unit(rank, i));
    return assemble(rank, {}, lin, {}, {});
}

RatCone RatCone::from_generators(std::size_t rank, const std::vector<LatticeVector>& rays,
                                 const std::vector<LatticeVector>& lineality) {
    check_ranks(rank, rays, "cone generator");
    check_ranks(rank, lineality, "cone lineality generator");
    auto h = detail::double_description(rank, rays, lineality);
    auto v = detail::double_description(rank, h.rays, h.lineality);
    RatCone c = assemble(rank, v.rays, v.lineality, h.rays, h.lineality);
    for (const auto& g : rays)
        if (!c.contains(g)) throw ConsistencyError("double description lost generator " + g.str());
    for (const auto& l : lineality)
        if (!c.contains(l) || !c.contains(-l)) throw ConsistencyError("double description lost lineality " + l.str());
    return c;
}

RatCone RatCone::from_inequalities(std::size_t rank, const std::vector<LatticeVector>& inequalities,
                                   const std::vector<LatticeVector>& equations) {
    check_ranks(rank, inequalities, "cone inequality");
    check_ranks(rank, equations, "cone equation");
    auto v = detail::double_description(rank, inequalities, equations);
    auto h = detail::double_description(rank, v.rays, v.lineality);
    RatCone c = assemble(rank, v.rays, v.lineality, h.rays, h.lineality);
    for (const auto& r : c.rays_) {
        for (const auto& a : inequalities)
            if (dot(a, r) < 0) throw ConsistencyError("double description produced infeasible ray " + r.str());
        for (const auto& e : equations)
            if (dot(e, r) != 0) throw ConsistencyError("double description produced infeasible ray " + r.str());
    }
    return c;
}

bool RatCone::contains(const LatticeVector& x) const {
    require_rank(rank_, x.rank(), "cone membership");
    for (const auto& e : equations_)
        if (dot(e, x) != 0) return false;
    for (const auto& h : facets_)
        if (dot(h, x) < 0) return false;
    return true;
}

bool RatCone::contains(const DualVector& x) const {
    require_rank(rank_, x.rank(), "cone membership");
    for (const auto& e : equations_)
        if (dot(DualVector(e), x) != 0) return false;
    for (const auto& h : facets_)
        if (dot(DualVector(h), x) < 0) return false;
    return true;
}

bool RatCone::contains(const RatCone& other) const {
    require_rank(rank_, other.rank_, "cone containment");
    for (const auto& r : other.rays_)
        if (!contains(r)) return false;
    for (const auto& l : other.lineality_)
        if (!contains(l) || !contains(-l)) return false;
    return true;
}

bool RatCone::contains_relative_interior(const DualVector& x) const {
    if (!contains(x)) return false;
    for (const auto& h : facets_)
        if (dot(DualVector(h), x) == 0) return false;
    return true;
}

RatCone RatCone::dual() const {
    RatCone d;
    d.rank_ = rank_;
    d.rays_ = facets_;
    d.lineality_ = equations_;
    d.facets_ = rays_;
    d.equations_ = lineality_;
    return d;
}

RatCone RatCone::negated() const {
    std::vector<LatticeVector> r;
    for (const auto& x : rays_) r.push_back(-x);
    std::vector<LatticeVector> f;
    for (const auto& h : facets_) f.push_back(-h);
    return assemble(rank_, r, lineality_, f, equations_);
}

RatCone RatCone::intersect(const RatCone& other) const {
    require_rank(rank_, other.rank_, "cone intersection");
    auto ineq = facets_;
    ineq.insert(ineq.end(), other.facets_.begin(), other.facets_.end());
    auto eqs = equations_;
    eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
    return from_inequalities(rank_, ineq, eqs);
}

RatCone RatCone::slice(const std::vector<LatticeVector>& orthogonal_to) const {
    auto eqs = equations_;
    eqs.insert(eqs.end(), orthogonal_to.begin(), orthogonal_to.end());
    return from_inequalities(rank_, facets_, eqs);
}

LatticeVector RatCone::interior_point() const {
    LatticeVector s = LatticeVector::zero(rank_);
    for (const auto& r : rays_) s += r;
    return s;
}

std::string RatCone::str() const {
    std::string s = "cone{";
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        if (i) s += ",";
        s += rays_[i].str('[', ']');
    }
    if (!lineality_.empty()) {
        s += " | lin ";
        for (std::size_t i = 0; i < lineality_.size(); ++i) {
            if (i) s += ",";
            s += lineality_[i].str('[', ']');
        }
    }
    return s + "}";
}

bool operator<(const RatCone& a, const RatCone& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
    return a.lineality_ < b.lineality_;
}

RatCone smallest_face_containing(const RatCone& sigma, const std::vector<LatticeVector>& points) {
    std::vector<LatticeVector> tight;
    for (const auto& h : sigma.facets()) {
        bool all_zero = true;
        for (const auto& p : points)
            if (dot(h, p) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) tight.push_back(h);
    }
    std::vector<LatticeVector> rays;
    for (const auto& r : sigma.rays()) {
        bool on = true;
        for (const auto& h : tight)
            if (dot(h, r) != 0) {
                on = false;
                break;
            }
        if (on) rays.push_back(r);
    }
    return RatCone::from_generators(sigma.rank(), rays, sigma.lineality());
}

bool is_face(const RatCone& tau, const RatCone& sigma) {
    if (tau.rank() != sigma.rank() || !sigma.contains(tau)) return false;
    std::vector<LatticeVector> pts = tau.rays();
    for (const auto& l : tau.lineality()) {
        pts.push_back(l);
        pts.push_back(-l);
    }
    return smallest_face_containing(sigma, pts) == tau;
}

std::optional<std::size_t> FacePoset::find(const RatCone& c) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].cone == c) return i;
    return std::nullopt;
}

FacePoset faces(const RatCone& c) {
    const auto& rays = c.rays();
    const auto& facets = c.facets();
    std::size_t nr = rays.size(), nf = facets.size();
    std::vector<std::vector<bool>> zero(nf, std::vector<bool>(nr));
    for (std::size_t f = 0; f < nf; ++f)
        for (std::size_t r = 0; r < nr; ++r) zero[f][r] = dot(facets[f], rays[r]) == 0;

    // A face is determined by its set of rays; closing a ray set means taking every ray
    // that lies on all facets containing the set.
    auto closure = [&](const std::vector<bool>& in) {
        std::vector<bool> out(nr, true);
        for (std::size_t f = 0; f < nf; ++f) {
            bool tight = true;
            for (std::size_t r = 0; r < nr && tight; ++r)
                if (in[r] && !zero[f][r]) tight = false;
            if (!tight) continue;
            for (std::size_t r = 0; r < nr; ++r)
                if (!zero[f][r]) out[r] = false;
        }
        return out;
    };

    std::map<std::vector<bool>, std::size_t> seen;
    std::vector<std::vector<bool>> order;
    std::vector<bool> top(nr, true);
    seen[top] = 0;
    order.push_back(top);
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto current = order[i];
        for (std::size_t f = 0; f < nf; ++f) {
            std::vector<bool> next(nr, false);
            bool changed = false;
            for (std::size_t r = 0; r < nr; ++r) {
                next[r] = current[r] && zero[f][r];
                if (current[r] && !next[r]) changed = true;
            }
            if (!changed) continue;
            auto closed = closure(next);
            if (seen.emplace(closed, order.size()).second) order.push_back(closed);
        }
    }

    std::vector<FaceNode> nodes;
    nodes.reserve(order.size());
    for (const auto& set : order) {
        FaceNode n;
        std::vector<LatticeVector> gens;
        for (std::size_t r = 0; r < nr; ++r)
            if (set[r]) {
                gens.push_back(rays[r]);
                n.ray_ids.push_back(r);
            }
        n.cone = RatCone::from_generators(c.rank(), gens, c.lineality());
        n.dim = n.cone.dim();
        // Exposed: cut out by the sum of the facet normals that vanish on it.
        LatticeVector w = LatticeVector::zero(c.rank());
        for (std::size_t f = 0; f < nf; ++f) {
            bool tight = true;
            for (std::size_t r = 0; r < nr && tight; ++r)
                if (set[r] && !zero[f][r]) tight = false;
            if (tight) w += facets[f];
        }
        for (std::size_t r = 0; r < nr; ++r)
            if ((dot(w, rays[r]) == 0) != static_cast<bool>(set[r])) n.exposed = false;
        nodes.push_back(std::move(n));
    }
    std::vector<std::size_t> idx(nodes.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return nodes[a].cone < nodes[b].cone; });
    std::vector<FaceNode> sorted;
    for (auto i : idx) sorted.push_back(std::move(nodes[i]));
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = 0; b < sorted.size(); ++b) {
            if (sorted[b].dim != sorted[a].dim + 1) continue;
            if (!std::includes(sorted[b].ray_ids.begin(), sorted[b].ray_ids.end(), sorted[a].ray_ids.begin(),
                               sorted[a].ray_ids.end()))
                continue;
            sorted[a].parents.push_back(b);
            sorted[b].children.push_back(a);
        }
    return FacePoset(std::move(sorted));
}

}  // namespace heartfan
