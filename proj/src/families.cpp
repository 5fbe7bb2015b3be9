#include "heartfan/families.hpp"

#include "heartfan/errors.hpp"
#include "heartfan/heartfan.hpp"

#include <algorithm>
#include <map>

namespace heartfan {

namespace {

RatCone cone2(std::initializer_list<LatticeVector> rays) {
    return RatCone::from_generators(2, std::vector<LatticeVector>(rays));
}

LatticeVector vec2(const Integer& a, const Integer& b) { return LatticeVector(std::vector<Integer>{a, b}); }

// Sign of a + b*sqrt(d) for d >= 0.
int sign_quadratic(const Integer& a, const Integer& b, const Integer& d) {
    int sa = sign(a), sb = sign(b);
    if (sb == 0 || d == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 d
    Integer lhs = a * a, rhs = b * b * d;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

bool cone_contains_limit(const RatCone& c, const LimitRay& l) {
    if (l.rational) return c.contains(l.base);
    for (const auto& f : c.facets())
        if (sign_quadratic(dot(f, l.base), dot(f, l.root), l.radicand) < 0) return false;
    for (const auto& e : c.equations())
        if (sign_quadratic(dot(e, l.base), dot(e, l.root), l.radicand) != 0) return false;
    return true;
}

LimitRay rational_limit(const LatticeVector& dir, bool in_fan) {
    LimitRay l;
    l.base = dir;
    l.root = LatticeVector::zero(dir.rank());
    l.radicand = 0;
    l.rational = true;
    l.in_fan = in_fan;
    return l;
}

void add_heart(Fan& f, const RatCone& c, const std::string& name) {
    ConeTags t;
    t.hearts.insert(name);
    t.dual_face = true;
    f.add_with_faces(c, t);
}

// All cones get the dual-face tag except where a family says otherwise.
void mark_all_dual(Fan& f) {
    ConeTags t;
    t.dual_face = true;
    for (const auto& c : f.cones()) f.add(c, t);
}

FamilyFan projective_line(const FamilySpec& s) {
    FamilyFan out;
    out.fan = Fan(2);
    for (long j = -s.depth; j <= s.depth; ++j) add_heart(out.fan, cone2({{-j, 1}, {1 - j, 1}}), "K" + std::to_string(j));
    add_heart(out.fan, cone2({{1, 0}}), "H");
    add_heart(out.fan, cone2({{-1, 0}}), "H[1]");
    out.limits = {rational_limit({1, 0}, true), rational_limit({-1, 0}, true)};
    out.dense_region.clear();
    return out;
}

FamilyFan kronecker(const FamilySpec& s) {
    FamilyFan out;
    out.fan = Fan(2);
    const long n = s.arrows;
    auto a = kronecker_sequence(s.arrows, static_cast<std::size_t>(s.depth) + 2);
    out.sequence.assign(a.begin(), a.begin() + s.depth);
    auto g = [&](long j) { return vec2(-a[j - 1], a[j]); };
    auto h = [&](long j) { return vec2(-a[j], a[j - 1]); };
    add_heart(out.fan, cone2({{1, 0}, {0, 1}}), "H");
    add_heart(out.fan, cone2({{-1, 0}, {0, -1}}), "H[1]");
    add_heart(out.fan, cone2({{1, 0}, {0, -1}}), "Kssi");
    for (long k = 1; k <= s.depth; ++k) {
        add_heart(out.fan, RatCone::from_generators(2, {g(k), g(k + 1)}), "K" + std::to_string(k));
        add_heart(out.fan, RatCone::from_generators(2, {h(k), h(k + 1)}), "K'" + std::to_string(k));
    }
    // limits of the g-vector slopes a_{j}/a_{j-1}: roots of x^2 - n x + 1
    Integer disc = Integer(n * n - 4);
    if (disc == 0) {
        out.limits.push_back(rational_limit({-1, 1}, true));
        add_heart(out.fan, cone2({{-1, 1}}), "Kinf");
    } else {
        for (int sgn : {1, -1}) {
            LimitRay l;
            l.base = vec2(-2, n);
            l.root = vec2(0, sgn);
            l.radicand = disc;
            l.rational = mpz_perfect_square_p(disc.get_mpz_t()) != 0;
            if (l.rational) {
                Integer r = sqrt(disc);
                l = rational_limit(l.base + r * l.root, false);
            }
            out.limits.push_back(l);
        }
        out.dense_region = "rays through imaginary roots between the two limit rays";
    }
    return out;
}

FamilyFan tube_rank2() {
    FamilyFan out;
    out.fan = Fan(2);
    add_heart(out.fan, cone2({{1, 0}, {0, 1}}), "H");
    add_heart(out.fan, cone2({{-1, 1}, {0, 1}}), "K1");
    add_heart(out.fan, cone2({{-1, 0}, {-1, 1}}), "K2");
    add_heart(out.fan, cone2({{0, -1}, {1, -1}}), "K3");
    add_heart(out.fan, cone2({{1, -1}, {1, 0}}), "K4");
    add_heart(out.fan, cone2({{-1, 0}, {0, -1}}), "H[1]");
    return out;
}

FamilyFan semisimple_Z(const FamilySpec& s) {
    FamilyFan out;
    out.fan = Fan(2);
    std::vector<RatCone> dual;
    for (const auto& [name, e] : semisimple_Z_hearts(s.depth)) {
        ConeTags t;
        t.hearts.insert(name);
        RatCone c = e.heart_cone();
        out.fan.add(c, t);
        FacePoset fp = faces(c);
        for (const auto& node : fp.nodes()) out.fan.add(node.cone);
        for (const auto& d : e.dual_faces()) dual.push_back(d);
    }
    ConeTags dt;
    dt.dual_face = true;
    for (const auto& d : dual) out.fan.add(d, dt);
    out.limits = {rational_limit({-1, 0}, true), rational_limit({0, 1}, true), rational_limit({1, 0}, true),
                  rational_limit({0, -1}, true)};
    return out;
}

FamilyFan elliptic_rational(const FamilySpec& s) {
    FamilyFan out;
    out.fan = Fan(2);
    add_heart(out.fan, cone2({{1, 0}}), "H");
    add_heart(out.fan, cone2({{-1, 0}}), "H[1]");
    // the tilt at slope p/q has heart cone the ray of slope -q/p
    for (long q = 1; q <= s.slope_bound; ++q)
        for (long p = -s.depth * q; p <= s.depth * q; ++p) {
            if (gcd(Integer(p), Integer(q)) != 1) continue;
            add_heart(out.fan, cone2({{-p, q}}), "K" + std::to_string(p) + "/" + std::to_string(q));
        }
    out.limits = {rational_limit({1, 0}, true), rational_limit({-1, 0}, true)};
    out.dense_region = "every ray of the closed upper half-plane";
    return out;
}

}  // namespace

std::string to_string(FamilyKind k) {
    switch (k) {
    case FamilyKind::projective_line: return "projective_line";
    case FamilyKind::kronecker: return "kronecker";
    case FamilyKind::tube_rank2: return "tube_rank2";
    case FamilyKind::semisimple_Z: return "semisimple_Z";
    case FamilyKind::elliptic_rational: return "elliptic_rational";
    }
    return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
    for (auto k : {FamilyKind::projective_line, FamilyKind::kronecker, FamilyKind::tube_rank2, FamilyKind::semisimple_Z,
                   FamilyKind::elliptic_rational})
        if (to_string(k) == name) return k;
    throw SpecError("unknown family '" + name + "'");
}

void FamilySpec::validate() const {
    if (depth < 1) throw SpecError("family depth must be at least 1");
    if (kind == FamilyKind::kronecker && arrows < 2) throw SpecError("kronecker family needs at least 2 arrows");
    if (kind == FamilyKind::elliptic_rational && slope_bound < 1) throw SpecError("slope bound must be at least 1");
    // coordinates grow like n^depth; keep them modest
    if (depth > 200) throw SpecError("family depth above 200");
}

std::string LimitRay::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < base.rank(); ++i) {
        if (i) s += ",";
        if (rational || root[i] == 0) {
            s += to_string(base[i]);
            continue;
        }
        if (base[i] != 0) s += to_string(base[i]);
        s += root[i] > 0 ? (base[i] != 0 ? "+" : "") : "-";
        Integer r = abs(root[i]);
        if (r != 1) s += to_string(r) + "*";
        s += "sqrt(" + to_string(radicand) + ")";
    }
    return s + "]";
}

std::vector<Integer> kronecker_sequence(int arrows, std::size_t count) {
    std::vector<Integer> a;
    for (std::size_t i = 0; i < count; ++i) {
        if (i < 2) a.emplace_back(static_cast<long>(i));
        else a.push_back(arrows * a[i - 1] - a[i - 2]);
    }
    return a;
}

FamilyFan family_fan(const FamilySpec& spec) {
    spec.validate();
    FamilyFan out;
    switch (spec.kind) {
    case FamilyKind::projective_line: out = projective_line(spec); break;
    case FamilyKind::kronecker: out = kronecker(spec); break;
    case FamilyKind::tube_rank2: out = tube_rank2(); break;
    case FamilyKind::semisimple_Z: out = semisimple_Z(spec); break;
    case FamilyKind::elliptic_rational: out = elliptic_rational(spec); break;
    }
    if (spec.kind != FamilyKind::semisimple_Z) mark_all_dual(out.fan);
    out.spec = spec;
    out.truncated = spec.kind != FamilyKind::tube_rank2;
    if (out.truncated) {
        ConeTags t;
        t.truncated = true;
        for (const auto& c : out.fan.cones()) out.fan.add(c, t);
    }
    out.fan.set_truncated(out.truncated);
    return out;
}

// Predicate cones

PredicateCone PredicateCone::named(PredicateKind kind) {
    auto x0 = [](const LatticeVector& x) { return x[0]; };
    auto x1 = [](const LatticeVector& x) { return x[1]; };
    RatCone right_half = RatCone::from_inequalities(2, {{1, 0}});
    switch (kind) {
    case PredicateKind::coh_P1:
        return {kind, right_half, [=](const LatticeVector& x) { return x0(x) > 0 || (x0(x) == 0 && x1(x) >= 0); }};
    case PredicateKind::mixed_P1:
        return {kind, right_half, [=](const LatticeVector& x) { return x0(x) >= 0; }};
    case PredicateKind::reversed_P1:
        return {kind, right_half, [=](const LatticeVector& x) { return x0(x) > 0 || (x0(x) == 0 && x1(x) <= 0); }};
    case PredicateKind::effective_upper:
        return {kind, cone2({{1, 0}, {0, 1}}),
                [=](const LatticeVector& x) { return x.is_zero() || (x0(x) > 0 && x1(x) > 0); }};
    case PredicateKind::polyhedral: break;
    }
    throw SpecError("predicate cone kind needs explicit data");
}

PredicateCone PredicateCone::polyhedral(const RatCone& closure) {
    return {PredicateKind::polyhedral, closure, [closure](const LatticeVector& x) { return closure.contains(x); }};
}

PredicateCone PredicateCone::negated() const {
    auto rule = rule_;
    return {kind_, closure_.negated(), [rule](const LatticeVector& x) { return rule(-x); }};
}

std::vector<RatCone> PredicateCone::dual_faces(long radius) const {
    const std::size_t n = rank();
    RatCone c = heart_cone();
    std::vector<RatCone> out;
    FacePoset fp = faces(c);
    for (const auto& node : fp.nodes()) {
        LatticeVector v = node.cone.interior_point();
        // lattice points of E on v^perp inside the box
        std::vector<LatticeVector> kernel;
        std::vector<long> x(n, -radius);
        while (true) {
            std::vector<Integer> coords(x.begin(), x.end());
            LatticeVector p(coords);
            if (dot(v, p) == 0 && rule_(p) && !p.is_zero()) kernel.push_back(p);
            std::size_t i = 0;
            while (i < n && x[i] == radius) x[i++] = -radius;
            if (i == n) break;
            ++x[i];
        }
        auto eq = c.equations();
        eq.insert(eq.end(), kernel.begin(), kernel.end());
        RatCone d = RatCone::from_inequalities(n, c.facets(), eq);
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(PredicateKind k) {
    switch (k) {
    case PredicateKind::coh_P1: return "coh_P1";
    case PredicateKind::mixed_P1: return "mixed_P1";
    case PredicateKind::reversed_P1: return "reversed_P1";
    case PredicateKind::effective_upper: return "effective_upper";
    case PredicateKind::polyhedral: return "polyhedral";
    }
    return "?";
}

PredicateKind parse_predicate_kind(const std::string& name) {
    for (auto k : {PredicateKind::coh_P1, PredicateKind::mixed_P1, PredicateKind::reversed_P1,
                   PredicateKind::effective_upper})
        if (to_string(k) == name) return k;
    throw SpecError("unknown predicate cone '" + name + "'");
}

std::vector<std::pair<std::string, PredicateCone>> semisimple_Z_hearts(int depth) {
    std::vector<std::pair<std::string, PredicateCone>> out;
    auto upper = PredicateCone::named(PredicateKind::effective_upper);
    out.emplace_back("H", upper);
    out.emplace_back("H[1]", upper.negated());
    for (long n = -depth; n <= depth; ++n) {
        RatCone c = n < 0 ? cone2({{n, 1}, {n - 1, 1}}) : cone2({{-1, n + 1}, {-1, n + 2}});
        auto e = PredicateCone::polyhedral(c.dual());
        out.emplace_back("K<=" + std::to_string(n), e);
        out.emplace_back("K>" + std::to_string(n), e.negated());
    }
    return out;
}

// Crosscheck

FamilySpec family_spec_of(const CategoryModel& m) {
    if (!m.family()) throw SpecError(m.name() + " does not belong to a closed-form family");
    const auto& tag = *m.family();
    FamilySpec s;
    if (tag.kind == "kronecker") {
        s.kind = FamilyKind::kronecker;
        s.arrows = tag.arrows;
        s.depth = tag.depth;
    } else if (tag.kind == "tube_rank2") {
        s.kind = FamilyKind::tube_rank2;
        s.depth = std::max(1, tag.depth);
    } else {
        throw SpecError(m.name() + ": family '" + tag.kind + "' has no closed-form fan");
    }
    s.validate();
    return s;
}

CrosscheckReport family_crosscheck(const FamilySpec& spec, const CategoryModel& m) {
    require_rank(2, m.rank(), "family crosscheck");
    CrosscheckReport r;
    r.spec = spec;
    FamilyFan ff = family_fan(spec);
    auto fam = ff.fan.full_cones();
    auto data = heart_fan(m).full_cones();
    for (const auto& c : data) {
        if (std::find(fam.begin(), fam.end(), c) != fam.end()) {
            r.matched.push_back(c);
            continue;
        }
        bool artifact = std::any_of(ff.limits.begin(), ff.limits.end(),
                                    [&](const LimitRay& l) { return cone_contains_limit(c, l); });
        (artifact && m.approximate() ? r.truncation_artifacts : r.only_dataset).push_back(c);
    }
    for (const auto& c : fam)
        if (std::find(data.begin(), data.end(), c) == data.end()) r.only_family.push_back(c);
    return r;
}

}  // namespace heartfan
