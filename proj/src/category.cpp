#include "heartfan/category.hpp"

#include "heartfan/errors.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace heartfan {

namespace {

ObjectMask bit(std::size_t i) { return ObjectMask{1} << i; }
bool has_bit(ObjectMask m, std::size_t i) { return (m >> i) & 1u; }

bool all_in(const std::vector<std::size_t>& parts, ObjectMask m) {
    return std::all_of(parts.begin(), parts.end(), [&](std::size_t p) { return has_bit(m, p); });
}

std::string describe(const SesEntry& s) {
    auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "+" : "") + v[i];
        return out;
    };
    return "0 -> " + join(s.sub) + " -> " + s.mid + " -> " + join(s.quot) + " -> 0";
}

CategoryModel::ClassSet sum_sets(const CategoryModel::ClassSet& a, const CategoryModel::ClassSet& b) {
    CategoryModel::ClassSet out;
    for (const auto& [ca, na] : a)
        for (const auto& [cb, nb] : b) out.emplace(ca + cb, na || nb);
    return out;
}

std::string join_ids(const std::set<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) out += (out.empty() ? "" : ",") + id;
    return out;
}

}  // namespace

std::string TorsionPair::id() const { return "T[" + join_ids(torsion.ids) + "]"; }

CategoryModel::CategoryModel(ModelData data) : data_(std::move(data)) {
    if (data_.rank == 0) throw SchemaError(data_.name + ": lattice rank must be positive");
    if (data_.classes.size() > max_objects)
        throw ResourceError(data_.name + ": more than " + std::to_string(max_objects) + " indecomposables");
    for (const auto& [id, c] : data_.classes) {
        if (c.rank() != data_.rank)
            throw SchemaError(data_.name + ": class of " + id + " has " + std::to_string(c.rank()) +
                              " entries, expected " + std::to_string(data_.rank));
        index_[id] = ids_.size();
        ids_.push_back(id);
        classes_.push_back(c);
    }
    auto lookup = [&](const std::string& id, const std::string& where) {
        auto it = index_.find(id);
        if (it == index_.end()) throw SchemaError(data_.name + ": unknown object '" + id + "' in " + where);
        return it->second;
    };
    for (const auto& s : data_.simples) lookup(s, "simples");

    for (const auto& e : data_.ses) {
        std::string where = "sequence " + describe(e);
        if (e.sub.empty() || e.quot.empty()) throw SchemaError(data_.name + ": empty end in " + where);
        if (e.sub.size() > max_multiset || e.quot.size() > max_multiset)
            throw SchemaError(data_.name + ": more than " + std::to_string(max_multiset) + " summands in " + where);
        Sequence s;
        s.mid = lookup(e.mid, where);
        LatticeVector total = LatticeVector::zero(data_.rank);
        for (const auto& x : e.sub) {
            s.sub.push_back(lookup(x, where));
            total += classes_[s.sub.back()];
        }
        for (const auto& x : e.quot) {
            s.quot.push_back(lookup(x, where));
            total += classes_[s.quot.back()];
        }
        if (total != classes_[s.mid])
            throw AdditivityError(data_.name + ": classes do not add up in " + where + ": " + total.str() + " vs " +
                                  classes_[s.mid].str());
        if (std::find(data_.simples.begin(), data_.simples.end(), e.mid) != data_.simples.end())
            throw InvariantError(data_.name + ": simple object " + e.mid + " has a proper subobject in " + where);
        seqs_.push_back(std::move(s));
    }

    hom_.assign(ids_.size(), std::vector<bool>(ids_.size(), false));
    for (const auto& [a, b] : data_.hom) hom_[lookup(a, "hom")][lookup(b, "hom")] = true;
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (!hom_[i][i]) throw InvariantError(data_.name + ": hom table misses the identity of " + ids_[i]);

    for (std::size_t i = 0; i < ids_.size(); ++i) {
        subs_.push_back(closure(i, false));
        quots_.push_back(closure(i, true));
    }
}

CategoryModel::ClassSet CategoryModel::closure(std::size_t root, bool quotient) const {
    // Depth-first with an explicit path guard: a cycle of proper quotients means the data is inconsistent.
    std::vector<std::optional<ClassSet>> memo(ids_.size());
    std::vector<bool> on_path(ids_.size(), false);
    auto rec = [&](auto&& self, std::size_t i) -> const ClassSet& {
        if (memo[i]) return *memo[i];
        if (on_path[i])
            throw InvariantError(data_.name + ": cyclic " + (quotient ? "quotient" : "subobject") +
                                 " relation through " + ids_[i]);
        on_path[i] = true;
        ClassSet out{{LatticeVector::zero(data_.rank), false}, {classes_[i], true}};
        for (const auto& s : seqs_) {
            if (s.mid != i) continue;
            ClassSet acc{{LatticeVector::zero(data_.rank), false}};
            for (auto p : quotient ? s.quot : s.sub) acc = sum_sets(acc, self(self, p));
            out.insert(acc.begin(), acc.end());
        }
        on_path[i] = false;
        memo[i] = std::move(out);
        return *memo[i];
    };
    return rec(rec, root);
}

std::size_t CategoryModel::index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw MembershipError(data_.name + ": unknown object '" + id + "'");
    return it->second;
}

ObjectMask CategoryModel::all() const { return ids_.size() == 64 ? ~ObjectMask{0} : bit(ids_.size()) - 1; }

ObjectMask CategoryModel::mask_of(const std::set<std::string>& ids) const {
    ObjectMask m = 0;
    for (const auto& id : ids) m |= bit(index(id));
    return m;
}

std::set<std::string> CategoryModel::ids_of(ObjectMask m) const {
    std::set<std::string> out;
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (has_bit(m, i)) out.insert(ids_[i]);
    return out;
}

Subcat CategoryModel::subcat(ObjectMask m, Closure kind) const { return Subcat{ids_of(m), kind}; }

ObjectMask CategoryModel::torsion_closure(ObjectMask m) const {
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& s : seqs_) {
            ObjectMask before = m;
            if (has_bit(m, s.mid))
                for (auto q : s.quot) m |= bit(q);
            if (all_in(s.sub, m) && all_in(s.quot, m)) m |= bit(s.mid);
            changed = changed || m != before;
        }
    }
    return m;
}

ObjectMask CategoryModel::right_perp(ObjectMask m) const {
    ObjectMask out = 0;
    for (std::size_t x = 0; x < ids_.size(); ++x) {
        bool orthogonal = true;
        for (std::size_t t = 0; t < ids_.size() && orthogonal; ++t) orthogonal = !(has_bit(m, t) && hom_[t][x]);
        if (orthogonal) out |= bit(x);
    }
    return out;
}

std::vector<std::string> CategoryModel::closure_violations(ObjectMask m, Closure kind) const {
    std::vector<std::string> out;
    bool quotients = kind == Closure::torsion || kind == Closure::serre;
    bool subs = kind == Closure::torsionfree || kind == Closure::serre;
    bool extensions = kind != Closure::none;
    for (std::size_t k = 0; k < seqs_.size(); ++k) {
        const auto& s = seqs_[k];
        std::string what = describe(data_.ses[k]);
        if (has_bit(m, s.mid)) {
            if (quotients && !all_in(s.quot, m)) out.push_back("not closed under the quotient in " + what);
            if (subs && !all_in(s.sub, m)) out.push_back("not closed under the subobject in " + what);
        } else if (extensions && all_in(s.sub, m) && all_in(s.quot, m)) {
            out.push_back("not closed under the extension " + what);
        }
    }
    return out;
}

std::set<LatticeVector> quotient_classes(const CategoryModel& m, const std::string& id) {
    std::set<LatticeVector> out;
    for (const auto& [c, nz] : m.quotients(m.index(id))) out.insert(c);
    return out;
}

std::set<LatticeVector> sub_classes(const CategoryModel& m, const std::string& id) {
    std::set<LatticeVector> out;
    for (const auto& [c, nz] : m.subobjects(m.index(id))) out.insert(c);
    return out;
}

std::vector<std::string> torsion_pair_violations(const CategoryModel& m, ObjectMask t, ObjectMask f) {
    std::vector<std::string> out;
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b)
            if (has_bit(t, a) && has_bit(f, b) && m.hom(a, b))
                out.push_back("nonzero map " + m.id(a) + " -> " + m.id(b) + " from torsion to torsionfree");
    for (auto& v : m.closure_violations(t, Closure::torsion)) out.push_back("torsion class " + v);
    for (auto& v : m.closure_violations(f, Closure::torsionfree)) out.push_back("torsionfree class " + v);
    for (std::size_t x = 0; x < m.size(); ++x) {
        if (has_bit(t, x) || has_bit(f, x)) continue;
        bool split = false;
        for (const auto& s : m.sequences())
            split = split || (s.mid == x && all_in(s.sub, t) && all_in(s.quot, f));
        if (!split) out.push_back(m.id(x) + " has no torsion/torsionfree decomposition");
    }
    return out;
}

std::vector<TorsionPair> torsion_pairs(const CategoryModel& m) {
    std::set<ObjectMask> seen;
    std::deque<ObjectMask> queue;
    ObjectMask start = m.torsion_closure(0);
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        ObjectMask t = queue.front();
        queue.pop_front();
        for (std::size_t x = 0; x < m.size(); ++x) {
            if (has_bit(t, x)) continue;
            ObjectMask next = m.torsion_closure(t | bit(x));
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::vector<TorsionPair> out;
    for (ObjectMask t : seen) {
        ObjectMask f = m.right_perp(t);
        if (!torsion_pair_violations(m, t, f).empty()) continue;
        out.push_back({m.subcat(t, Closure::torsion), m.subcat(f, Closure::torsionfree)});
    }
    std::sort(out.begin(), out.end(), [](const TorsionPair& a, const TorsionPair& b) {
        if (a.torsion.ids.size() != b.torsion.ids.size()) return a.torsion.ids.size() < b.torsion.ids.size();
        return a.torsion.ids < b.torsion.ids;
    });
    return out;
}

NumericalPairs numerical_tp(const CategoryModel& m, const DualVector& v) {
    require_rank(m.rank(), v.rank(), "charge");
    ObjectMask t_strict = 0, f_weak = 0, t_weak = 0, f_strict = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        bool ts = true, tw = true, fs = true, fw = true;
        for (const auto& [c, nz] : m.quotients(i)) {
            int s = sign(pair(v, c));
            if (nz && s <= 0) ts = false;
            if (s < 0) tw = false;
        }
        for (const auto& [c, nz] : m.subobjects(i)) {
            int s = sign(pair(v, c));
            if (s > 0) fw = false;
            if (nz && s >= 0) fs = false;
        }
        if (ts) t_strict |= bit(i);
        if (tw) t_weak |= bit(i);
        if (fs) f_strict |= bit(i);
        if (fw) f_weak |= bit(i);
    }
    return {{m.subcat(t_strict, Closure::torsion), m.subcat(f_weak, Closure::torsionfree)},
            {m.subcat(t_weak, Closure::torsion), m.subcat(f_strict, Closure::torsionfree)}};
}

SemistableSet semistable(const CategoryModel& m, const DualVector& v) {
    require_rank(m.rank(), v.rank(), "charge");
    SemistableSet out;
    out.objects.kind = Closure::wide;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (pair(v, m.cls(i)) != 0) continue;
        bool ok = true, stable = true;
        for (const auto& [c, nz] : m.subobjects(i)) {
            Rational x = pair(v, c);
            if (x > 0) ok = false;
            if (x == 0 && !c.is_zero() && c != m.cls(i)) stable = false;
        }
        if (!ok) continue;
        out.objects.ids.insert(m.id(i));
        if (stable) out.stable.insert(m.id(i));
    }
    return out;
}

std::vector<std::pair<IntCone, Subcat>> face_subcats(const CategoryModel& m) {
    std::vector<LatticeVector> classes;
    for (std::size_t i = 0; i < m.size(); ++i) classes.push_back(m.cls(i));
    IntCone eff(m.rank(), classes);
    IntFacePoset fp = faces(eff);
    std::vector<std::pair<IntCone, Subcat>> out;
    for (std::size_t k = 0; k < fp.real.size(); ++k) {
        ObjectMask s = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (fp.real[k].cone.contains(m.cls(i))) s |= bit(i);
        auto bad = m.closure_violations(s, Closure::serre);
        if (!bad.empty())
            throw InvariantError(m.name() + ": face subcategory of " + fp.real[k].cone.str() + " is not Serre: " +
                                 bad.front());
        out.emplace_back(fp.cones[k], m.subcat(s, Closure::serre));
    }
    return out;
}

Subcat null_subcat(const CategoryModel& m) {
    ObjectMask s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.cls(i).is_zero()) s |= bit(i);
    return m.subcat(s, Closure::serre);
}

CategoryModel restrict_model(const CategoryModel& m, const std::set<std::string>& ids) {
    const ModelData& d = m.data();
    ModelData r;
    r.name = d.name + "|restricted";
    r.rank = d.rank;
    r.approximate = d.approximate;
    auto keep = [&](const std::string& id) { return ids.count(id) > 0; };
    for (const auto& id : ids) r.classes.emplace(id, m.cls(id));
    std::set<std::string> mids;
    for (const auto& e : d.ses) {
        if (keep(e.mid) && std::all_of(e.sub.begin(), e.sub.end(), keep) &&
            std::all_of(e.quot.begin(), e.quot.end(), keep)) {
            r.ses.push_back(e);
            mids.insert(e.mid);
        }
    }
    for (const auto& id : ids)
        if (!mids.count(id)) r.simples.push_back(id);
    for (const auto& h : d.hom)
        if (keep(h.first) && keep(h.second)) r.hom.push_back(h);
    return CategoryModel(std::move(r));
}

}  // namespace heartfan
