#include "heartfan/heartfan.hpp"

#include "heartfan/errors.hpp"
#include "heartfan/linalg.hpp"

#include <algorithm>
#include <random>

namespace heartfan {

namespace {

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Rational cross(const Rational& ar, const Rational& ai, const Rational& br, const Rational& bi) {
    return ar * bi - ai * br;
}

}  // namespace

TiltedHeart tilt(const CategoryModel& m, const TorsionPair& tp) {
    auto problems = torsion_pair_violations(m, m.mask_of(tp.torsion.ids), m.mask_of(tp.torsionfree.ids));
    if (!problems.empty()) throw InvariantError(m.name() + ": cannot tilt at " + tp.id() + ": " + problems.front());
    std::vector<LatticeVector> gens;
    for (const auto& id : tp.torsion.ids) gens.push_back(m.cls(id));
    for (const auto& id : tp.torsionfree.ids) gens.push_back(-m.cls(id));
    TiltedHeart h;
    h.pair = tp;
    h.eff = IntCone(m.rank(), gens);
    h.heart_cone = h.eff.hull().dual();
    h.algebraic = h.heart_cone.is_full();
    return h;
}

std::vector<TiltedHeart> tilted_hearts(const CategoryModel& m) {
    std::vector<TiltedHeart> out;
    for (const auto& tp : torsion_pairs(m)) out.push_back(tilt(m, tp));
    return out;
}

Cofan heart_cofan(const CategoryModel& m) {
    std::vector<IntCone> seeds;
    for (const auto& h : tilted_hearts(m)) seeds.push_back(h.eff);
    return generate_cofan(m.rank(), seeds);
}

Fan heart_fan(const CategoryModel& m, const std::vector<TiltedHeart>& hearts) {
    std::vector<IntCone> seeds;
    for (const auto& h : hearts) seeds.push_back(h.eff);
    Cofan cf = generate_cofan(m.rank(), seeds);
    Fan f = associated_fan(cf);
    Fan dual_faces = dual_face_fan(cf);
    for (const auto& [c, t] : dual_faces.entries()) f.add(c, t);
    for (const auto& h : hearts) {
        ConeTags t;
        t.hearts.insert(h.id());
        f.add(h.heart_cone, t);
    }
    if (m.approximate()) {
        Fan tagged(m.rank());
        ConeTags t;
        t.truncated = true;
        for (const auto& [c, tags] : f.entries()) {
            tagged.add(c, tags);
            tagged.add(c, t);
        }
        f = tagged;
        f.set_truncated(true);
    }
    return f;
}

Fan heart_fan(const CategoryModel& m) { return heart_fan(m, tilted_hearts(m)); }

std::vector<LatticeVector> dual_basis(const std::vector<LatticeVector>& basis) {
    std::size_t n = basis.size();
    for (const auto& b : basis) require_rank(n, b.rank(), "dual basis");
    if (n == 0) return {};
    if (abs(determinant(as_rows(basis))) != 1)
        throw ConsistencyError("dual basis: vectors are not a lattice basis");
    // Gauss-Jordan on [B^T | I]: the inverse of B^T has the dual basis as rows.
    RatMatrix a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = basis[j][i];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p][c] == 0) ++p;
        std::swap(a[p], a[c]);
        Rational inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational k = a[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= k * a[c][j];
        }
    }
    // row i of (B^T)^{-1} pairs to delta with the columns of B^T, i.e. with the basis vectors
    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = a[i][n + j].get_num();
        out.emplace_back(std::move(row));
    }
    return out;
}

VirtualGFan virtual_gfan(const Fan& f) {
    VirtualGFan g;
    g.fan = Fan(f.rank());
    g.fan.set_truncated(f.truncated());
    for (const auto& c : f.full_cones()) {
        g.fan.add_with_faces(c, f.tags(c));
        GCone gc;
        gc.cone = c;
        if (!c.is_pointed() || c.rays().size() != f.rank())
            throw ConsistencyError("full cone " + c.str() + " is not simplicial");
        gc.g_vectors = c.rays();
        gc.c_vectors = dual_basis(gc.g_vectors);
        g.cones.push_back(std::move(gc));
    }
    return g;
}

VirtualGFan virtual_gfan(const CategoryModel& m) {
    auto hearts = tilted_hearts(m);
    Fan hf = heart_fan(m, hearts);
    VirtualGFan g;
    g.fan = Fan(m.rank());
    g.fan.set_truncated(hf.truncated());
    for (const auto& c : hf.full_cones()) g.fan.add_with_faces(c, hf.tags(c));
    for (const auto& h : hearts) {
        if (!h.algebraic) continue;
        auto props = cone_props(h.eff);
        if (!props.smooth || !props.full)
            throw ConsistencyError(m.name() + ": full heart cone of " + h.id() + " has a non-smooth effective cone " +
                                   h.eff.str());
        GCone gc;
        gc.cone = h.heart_cone;
        gc.heart = h.id();
        gc.c_vectors = minimal_generators(h.eff);
        gc.g_vectors = dual_basis(gc.c_vectors);
        std::vector<LatticeVector> sorted_g = gc.g_vectors;
        std::sort(sorted_g.begin(), sorted_g.end());
        if (sorted_g != h.heart_cone.rays())
            throw ConsistencyError(m.name() + ": g-vectors of " + h.id() + " do not span its heart cone");
        g.cones.push_back(std::move(gc));
    }
    return g;
}

RatCone stability_space(const CategoryModel& m, const std::string& id) {
    std::vector<LatticeVector> ineq;
    for (const auto& s : sub_classes(m, id))
        if (!s.is_zero()) ineq.push_back(-s);
    return RatCone::from_inequalities(m.rank(), ineq, {m.cls(id)});
}

WallChamberReport walls_and_chambers(const CategoryModel& m, std::size_t samples_per_chamber, unsigned long seed) {
    WallChamberReport r;
    r.truncated = m.approximate();
    for (const auto& id : m.ids()) {
        RatCone d = stability_space(m, id);
        r.spaces.push_back({id, d, m.rank() - d.dim()});
        if (m.rank() - d.dim() == 1 && std::find(r.walls.begin(), r.walls.end(), d) == r.walls.end())
            r.walls.push_back(d);
    }
    std::sort(r.walls.begin(), r.walls.end());
    Fan hf = heart_fan(m);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(1, 9);
    for (const auto& c : hf.full_cones()) {
        r.chambers.push_back({c, hf.tags(c).hearts});
        for (std::size_t s = 0; s < samples_per_chamber; ++s) {
            LatticeVector p = LatticeVector::zero(m.rank());
            for (const auto& ray : c.rays()) p += Integer(coef(rng)) * ray;
            DualVector v(p);
            ++r.samples;
            auto ss = semistable(m, v);
            if (!ss.objects.ids.empty())
                r.sample_failures.push_back(v.str() + " in " + c.str() + " has semistable " + *ss.objects.ids.begin());
        }
    }
    return r;
}

Fan stability_fan(const CategoryModel& m) {
    Fan f(m.rank());
    f.set_truncated(m.approximate());
    ConeTags t;
    t.dual_face = true;
    t.truncated = m.approximate();
    for (const auto& h : tilted_hearts(m)) {
        std::vector<LatticeVector> heart_classes;
        for (const auto& id : h.pair.torsion.ids) heart_classes.push_back(m.cls(id));
        for (const auto& id : h.pair.torsionfree.ids) heart_classes.push_back(-m.cls(id));
        IntFacePoset fp = faces(h.eff);
        for (std::size_t k = 0; k < fp.real.size(); ++k) {
            if (!fp.real[k].exposed) continue;
            bool nonzero = std::any_of(heart_classes.begin(), heart_classes.end(),
                                       [&](const LatticeVector& c) { return fp.real[k].cone.contains(c); });
            if (!nonzero) continue;
            f.add(dual_face(h.eff, fp.cones[k]), t);
        }
    }
    return f;
}

KernelPair distinguished_kernel_pair(const CategoryModel& m, const DualVector& v) {
    auto np = numerical_tp(m, v);
    KernelPair kp;
    kp.heart = tilt(m, np.upper);
    kp.witness = v;
    if (!kp.heart.heart_cone.contains(v))
        throw ConsistencyError(m.name() + ": " + v.str() + " is not in the heart cone of " + kp.heart.id());
    kp.kernel.kind = Closure::serre;
    for (const auto& id : np.upper.torsion.ids)
        if (pair(v, m.cls(id)) == 0) kp.kernel.ids.insert(id);
    for (const auto& id : np.upper.torsionfree.ids)
        if (pair(v, m.cls(id)) == 0) {
            kp.kernel.ids.insert(id);
            kp.shifted.insert(id);
        }
    std::set<std::string> unshifted;
    std::set_difference(kp.kernel.ids.begin(), kp.kernel.ids.end(), kp.shifted.begin(), kp.shifted.end(),
                        std::inserter(unshifted, unshifted.begin()));
    if (unshifted != semistable(m, v).objects.ids)
        throw ConsistencyError(m.name() + ": kernel of " + v.str() + " differs from its semistable objects");
    for (const auto& h : hearts_containing(m, v))
        if (!subset(np.upper.torsionfree.ids, h.pair.torsionfree.ids))
            throw ConsistencyError(m.name() + ": " + kp.heart.id() + " is not minimal among hearts containing " +
                                   v.str() + " (compare " + h.id() + ")");
    return kp;
}

std::vector<TiltedHeart> hearts_containing(const CategoryModel& m, const DualVector& v) {
    require_rank(m.rank(), v.rank(), "charge");
    std::vector<TiltedHeart> out;
    for (auto& h : tilted_hearts(m))
        if (h.heart_cone.contains(v)) out.push_back(std::move(h));
    return out;
}

std::size_t semistable_torsion_pair_count(const CategoryModel& m, const DualVector& v) {
    return torsion_pairs(restrict_model(m, semistable(m, v).objects.ids)).size();
}

Charge parse_charge(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
        throw ChargeError("charge must be two rows separated by ';'");
    Charge z;
    try {
        z.re = parse_rational_list(std::string_view(text).substr(0, semi));
        z.im = parse_rational_list(std::string_view(text).substr(semi + 1));
    } catch (const std::invalid_argument& e) {
        throw ChargeError(std::string("charge: ") + e.what());
    }
    if (z.re.size() != z.im.size()) throw ChargeError("charge rows have different lengths");
    return z;
}

std::string Phase::str() const {
    if (exact) return to_string(*exact);
    return "dir(" + to_string(re) + "," + to_string(im) + ")";
}

PhaseSlice phase_slice(const CategoryModel& m, const Charge& z) {
    if (z.re.size() != m.rank() || z.im.size() != m.rank())
        throw ChargeError("charge has " + std::to_string(z.re.size()) + " columns, expected " +
                          std::to_string(m.rank()));
    PhaseSlice slice;
    slice.charge = z;
    std::vector<Phase> dirs;
    for (std::size_t i = 0; i < m.size(); ++i) {
        Phase p;
        for (std::size_t k = 0; k < m.rank(); ++k) {
            p.re += z.re[k] * m.cls(i)[k];
            p.im += z.im[k] * m.cls(i)[k];
        }
        if (!(p.im > 0 || (p.im == 0 && p.re < 0)))
            throw ChargeError("charge of " + m.id(i) + " is " + to_string(p.re) + "+" + to_string(p.im) +
                              "i, outside the extended upper half-plane");
        bool seen = std::any_of(dirs.begin(), dirs.end(), [&](const Phase& q) {
            return cross(q.re, q.im, p.re, p.im) == 0;
        });
        if (seen) continue;
        if (p.im == 0) p.exact = Rational(1);
        else if (p.re == 0) p.exact = Rational(1, 2);
        else if (p.re == p.im) p.exact = Rational(1, 4);
        else if (p.re == -p.im) p.exact = Rational(3, 4);
        dirs.push_back(p);
    }
    // smaller angle first: a before b when b is counterclockwise from a
    std::sort(dirs.begin(), dirs.end(),
              [](const Phase& a, const Phase& b) { return cross(a.re, a.im, b.re, b.im) > 0; });
    for (const auto& d : dirs) {
        std::vector<Rational> w(m.rank());
        for (std::size_t k = 0; k < m.rank(); ++k) w[k] = -d.im * z.re[k] + d.re * z.im[k];
        DualVector v(w);
        auto ss = semistable(m, v);
        if (ss.objects.ids.empty()) continue;
        slice.entries.push_back({d, v, ss});
    }
    return slice;
}

ThickLabel thick_label(const CategoryModel& m, const DualVector& v) {
    if (hearts_containing(m, v).empty()) throw SupportError(v.str() + " is outside the support of the heart fan");
    auto kp = distinguished_kernel_pair(m, v);
    return {kp.kernel, kp.shifted};
}

}  // namespace heartfan
