#include "heartfan/intcone.hpp"

#include "heartfan/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace heartfan {

namespace {

std::vector<LatticeVector> normalized(std::size_t rank, const std::vector<LatticeVector>& gens) {
    std::set<LatticeVector> s;
    for (const auto& g : gens) {
        require_rank(rank, g.rank(), "cone generator");
        if (!g.is_zero()) s.insert(g);
    }
    return {s.begin(), s.end()};
}

}  // namespace

IntCone::IntCone(std::size_t rank, const std::vector<LatticeVector>& generators)
    : rank_(rank), gens_(normalized(rank, generators)) {
    hull_ = RatCone::from_generators(rank_, gens_);
    span_ = IntegerLattice(gens_, rank_);
    weight_fn_ = LatticeVector::zero(rank_);
    for (const auto& h : hull_.facets()) weight_fn_ += h;
    std::vector<LatticeVector> inside;
    std::vector<std::pair<Integer, LatticeVector>> rest;
    for (const auto& g : gens_) {
        Integer w = dot(weight_fn_, g);
        if (w == 0) inside.push_back(g);
        else rest.emplace_back(w, g);
    }
    group_ = IntegerLattice(inside, rank_);
    std::stable_sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto& [w, g] : rest) {
        weights_.push_back(w);
        pointed_.push_back(g);
    }
}

bool IntCone::search(std::size_t idx, const LatticeVector& residual, const Integer& budget, std::size_t& nodes,
                     std::vector<std::vector<LatticeVector>>& dead) const {
    if (++nodes > search_node_limit)
        throw ResourceError("membership search in " + str() + " exceeded " + std::to_string(search_node_limit) +
                            " nodes");
    if (budget == 0) return group_.contains(residual);
    if (idx == pointed_.size()) return false;
    if (!hull_.contains(residual)) return false;
    auto& seen = dead[idx];
    if (std::binary_search(seen.begin(), seen.end(), residual)) return false;
    const auto& g = pointed_[idx];
    const auto& w = weights_[idx];
    Integer kmax = budget / w;
    Integer kmin = 0;
    if (idx + 1 == pointed_.size()) {
        if (budget % w != 0) return false;
        kmin = kmax;
    }
    for (Integer k = kmax; k >= kmin; --k) {
        LatticeVector r = residual - k * g;
        if (search(idx + 1, r, budget - k * w, nodes, dead)) return true;
    }
    seen.insert(std::lower_bound(seen.begin(), seen.end(), residual), residual);
    return false;
}

bool IntCone::contains(const LatticeVector& x) const {
    require_rank(rank_, x.rank(), "monoid membership");
    if (x.is_zero()) return true;
    if (!hull_.contains(x) || !span_.contains(x)) return false;
    std::size_t nodes = 0;
    std::vector<std::vector<LatticeVector>> dead(pointed_.size());
    return search(0, x, dot(weight_fn_, x), nodes, dead);
}

bool IntCone::contains(const IntCone& other) const {
    require_rank(rank_, other.rank_, "monoid containment");
    if (!hull_.contains(other.hull_)) return false;
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

IntCone IntCone::negated() const {
    std::vector<LatticeVector> g;
    for (const auto& x : gens_) g.push_back(-x);
    return IntCone(rank_, g);
}

std::string IntCone::str() const {
    std::string s = "E{";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ",";
        s += gens_[i].str();
    }
    return s + "}";
}

bool operator==(const IntCone& a, const IntCone& b) {
    return a.rank_ == b.rank_ && a.hull_ == b.hull_ && a.contains(b) && b.contains(a);
}

IntCone span_int(std::size_t rank, const std::vector<LatticeVector>& gens) { return IntCone(rank, gens); }

bool member_int(const IntCone& c, const LatticeVector& x) { return c.contains(x); }

std::vector<LatticeVector> minimal_generators(const IntCone& c) {
    std::vector<LatticeVector> gens = c.generators();
    // Try to drop the heaviest-looking generators first so irreducibles survive.
    std::sort(gens.begin(), gens.end(), [](const LatticeVector& a, const LatticeVector& b) {
        Integer na = 0, nb = 0;
        for (const auto& x : a.coords()) na += abs(x);
        for (const auto& x : b.coords()) nb += abs(x);
        if (na != nb) return na > nb;
        return a < b;
    });
    for (std::size_t i = 0; i < gens.size();) {
        std::vector<LatticeVector> rest = gens;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (IntCone(c.rank(), rest).contains(gens[i])) gens = std::move(rest);
        else ++i;
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

IntFacePoset faces(const IntCone& c) {
    IntFacePoset out;
    out.real = faces(c.hull());
    for (const auto& node : out.real.nodes()) {
        std::vector<LatticeVector> in;
        for (const auto& g : c.generators())
            if (node.cone.contains(g)) in.push_back(g);
        out.cones.emplace_back(c.rank(), in);
    }
    return out;
}

std::vector<IntCone> exposed_faces(const IntCone& c) {
    auto f = faces(c);
    std::vector<IntCone> out;
    for (std::size_t i = 0; i < f.real.size(); ++i)
        if (f.real[i].exposed) out.push_back(f.cones[i]);
    return out;
}

IntCone min_face(const IntCone& c, const IntCone& sub) {
    require_rank(c.rank(), sub.rank(), "minimal face");
    for (const auto& g : sub.generators())
        if (!c.contains(g)) throw ContainmentError("minimal face: " + g.str() + " is not in " + c.str());
    RatCone f = smallest_face_containing(c.hull(), sub.generators());
    std::vector<LatticeVector> in;
    for (const auto& g : c.generators())
        if (f.contains(g)) in.push_back(g);
    return IntCone(c.rank(), in);
}

IntCone localize(const IntCone& c, const IntCone& sub) {
    IntCone f = min_face(c, sub);
    std::vector<LatticeVector> gens = c.generators();
    for (const auto& g : f.generators()) gens.push_back(-g);
    return IntCone(c.rank(), gens);
}

bool is_face(const IntCone& tau, const IntCone& sigma) {
    if (tau.rank() != sigma.rank() || !sigma.contains(tau)) return false;
    return min_face(sigma, tau) == tau;
}

IntCone minkowski(const IntCone& a, const IntCone& b, MinkowskiOp op) {
    require_rank(a.rank(), b.rank(), "Minkowski operation");
    std::vector<LatticeVector> gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(op == MinkowskiOp::sum ? g : -g);
    return IntCone(a.rank(), gens);
}

RatCone dual_face(const IntCone& c, const IntCone& face) {
    if (!is_face(face, c)) throw FaceError("dual face: " + face.str() + " is not a face of " + c.str());
    return c.hull().dual().slice(face.generators());
}

std::vector<std::vector<LatticeVector>> triangulate(const RatCone& c) {
    if (!c.is_pointed()) throw DegenerateInput("triangulate: cone has lineality");
    if (c.rays().size() == c.dim()) return {c.rays()};
    const auto& apex = c.rays().front();
    std::vector<std::vector<LatticeVector>> out;
    for (const auto& h : c.facets()) {
        if (dot(h, apex) == 0) continue;
        std::vector<LatticeVector> on;
        for (const auto& r : c.rays())
            if (dot(h, r) == 0) on.push_back(r);
        for (auto s : triangulate(RatCone::from_generators(c.rank(), on))) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
    return out;
}

namespace {

constexpr long parallelepiped_limit = 2'000'000;

// Lattice points sum t_i s_i with 0 <= t_i < 1 for a full-rank simplicial cone.
std::vector<LatticeVector> parallelepiped_points(const std::vector<LatticeVector>& simplex) {
    std::size_t r = simplex.size();
    Integer det = abs(determinant(as_rows(simplex)));
    if (det > parallelepiped_limit)
        throw ResourceError("saturation: simplicial cone of index " + det.get_str() + " is too large");
    std::vector<std::vector<Rational>> steps;
    for (std::size_t i = 0; i < r; ++i) {
        auto t = solve_in_span(simplex, LatticeVector::unit(r, i));
        if (!t) throw ConsistencyError("saturation: simplicial cone is not full rank");
        steps.push_back(std::move(*t));
    }
    auto frac = [](const Rational& q) {
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return Rational(q - fl);
    };
    std::set<std::vector<Rational>> seen;
    std::deque<std::vector<Rational>> queue;
    std::vector<Rational> origin(r, 0);
    seen.insert(origin);
    queue.push_back(origin);
    while (!queue.empty()) {
        auto t = queue.front();
        queue.pop_front();
        for (const auto& s : steps) {
            std::vector<Rational> u(r);
            for (std::size_t i = 0; i < r; ++i) u[i] = frac(t[i] + s[i]);
            if (seen.insert(u).second) queue.push_back(std::move(u));
        }
    }
    std::vector<LatticeVector> out;
    for (const auto& t : seen) {
        std::vector<Rational> x(r, 0);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < r; ++i) x[i] += t[j] * simplex[j][i];
        std::vector<Integer> xi(r);
        for (std::size_t i = 0; i < r; ++i) {
            if (x[i].get_den() != 1) throw ConsistencyError("saturation: non-integral parallelepiped point");
            xi[i] = x[i].get_num();
        }
        LatticeVector p(std::move(xi));
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

// Hilbert basis of C intersected with Z^r for a full-dimensional pointed cone C.
std::vector<LatticeVector> hilbert_basis(const RatCone& c) {
    std::set<LatticeVector> cand(c.rays().begin(), c.rays().end());
    for (const auto& s : triangulate(c))
        for (auto& p : parallelepiped_points(s)) cand.insert(std::move(p));
    std::vector<LatticeVector> out;
    for (const auto& x : cand) {
        bool reducible = false;
        for (const auto& y : cand) {
            if (y == x) continue;
            if (c.contains(x - y)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.push_back(x);
    }
    return out;
}

}  // namespace

IntCone saturate(const IntCone& c) {
    std::size_t n = c.rank();
    const RatCone& h = c.hull();
    if (h.is_zero()) return IntCone::zero(n);
    auto span_basis = integer_kernel(h.equations(), n);
    std::size_t d = span_basis.size();
    std::vector<LatticeVector> lifted;
    if (h.facets().empty()) {
        for (const auto& b : span_basis) {
            lifted.push_back(b);
            lifted.push_back(-b);
        }
        return IntCone(n, lifted);
    }
    // Facet values in span coordinates; their integer kernel is the lineality lattice.
    IntMatrix fk(d, std::vector<Integer>(h.facets().size()));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < h.facets().size(); ++i) fk[j][i] = dot(h.facets()[i], span_basis[j]);
    auto e = hermite(fk, h.facets().size());
    std::size_t r = e.rank;
    std::vector<LatticeVector> basis;   // adapted basis of span lattice: quotient part then lineality part
    for (std::size_t j = 0; j < d; ++j) {
        LatticeVector b = LatticeVector::zero(n);
        for (std::size_t i = 0; i < d; ++i) b += e.transform[j][i] * span_basis[i];
        basis.push_back(std::move(b));
    }
    std::vector<LatticeVector> quotient_gens;
    for (const auto& g : c.generators()) {
        auto y = solve_in_span(basis, g);
        if (!y) throw ConsistencyError("saturation: generator outside its own span");
        std::vector<Integer> q(r);
        for (std::size_t j = 0; j < r; ++j) {
            if ((*y)[j].get_den() != 1) throw ConsistencyError("saturation: non-integral coordinates");
            q[j] = (*y)[j].get_num();
        }
        LatticeVector qv(std::move(q));
        if (!qv.is_zero()) quotient_gens.push_back(std::move(qv));
    }
    RatCone qc = RatCone::from_generators(r, quotient_gens);
    for (const auto& z : hilbert_basis(qc)) {
        LatticeVector x = LatticeVector::zero(n);
        for (std::size_t j = 0; j < r; ++j) x += z[j] * basis[j];
        lifted.push_back(std::move(x));
    }
    for (std::size_t j = r; j < d; ++j) {
        lifted.push_back(basis[j]);
        lifted.push_back(-basis[j]);
    }
    return IntCone(n, lifted);
}

ConeProps cone_props(const IntCone& c) {
    ConeProps p;
    const RatCone& h = c.hull();
    p.dim = h.dim();
    p.full = h.is_full();
    p.strictly_convex = h.is_pointed();
    p.polyhedral = true;
    if (p.strictly_convex) {
        auto gens = minimal_generators(c);
        p.smooth = rank_of(gens, c.rank()) == gens.size() && maximal_minor_gcd(gens, c.rank()) == 1;
        const auto& rays = h.rays();
        p.hull_smooth = rank_of(rays, c.rank()) == rays.size() && maximal_minor_gcd(rays, c.rank()) == 1;
    }
    return p;
}

}  // namespace heartfan
