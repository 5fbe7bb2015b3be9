#pragma once

// Exhaustive torsion-pair search over all subsets of indecomposables, written against the
// raw dataset tables only.

#include "heartfan/category.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct BrutePair {
    std::set<std::string> torsion, torsionfree;
    bool operator<(const BrutePair& o) const {
        return std::tie(torsion, torsionfree) < std::tie(o.torsion, o.torsionfree);
    }
    bool operator==(const BrutePair& o) const = default;
};

inline std::vector<BrutePair> brute_torsion_pairs(const heartfan::ModelData& d) {
    std::vector<std::string> ids;
    for (const auto& [id, c] : d.classes) ids.push_back(id);
    std::set<std::pair<std::string, std::string>> hom(d.hom.begin(), d.hom.end());
    auto subset_of = [](const std::vector<std::string>& parts, const std::set<std::string>& s) {
        return std::all_of(parts.begin(), parts.end(), [&](const std::string& x) { return s.count(x) > 0; });
    };
    std::vector<BrutePair> out;
    for (unsigned long mask = 0; mask < (1ul << ids.size()); ++mask) {
        std::set<std::string> t, f;
        for (std::size_t i = 0; i < ids.size(); ++i)
            if ((mask >> i) & 1u) t.insert(ids[i]);
        for (const auto& x : ids) {
            bool perp = true;
            for (const auto& y : t) perp = perp && !hom.count({y, x});
            if (perp) f.insert(x);
        }
        bool ok = true;
        for (const auto& e : d.ses) {
            // torsion: quotients and extensions; torsionfree: subobjects and extensions
            if (t.count(e.mid) && !subset_of(e.quot, t)) ok = false;
            if (!t.count(e.mid) && subset_of(e.sub, t) && subset_of(e.quot, t)) ok = false;
            if (f.count(e.mid) && !subset_of(e.sub, f)) ok = false;
            if (!f.count(e.mid) && subset_of(e.sub, f) && subset_of(e.quot, f)) ok = false;
        }
        for (const auto& x : ids) {
            if (t.count(x) || f.count(x)) continue;
            bool split = false;
            for (const auto& e : d.ses)
                split = split || (e.mid == x && subset_of(e.sub, t) && subset_of(e.quot, f));
            ok = ok && split;
        }
        if (ok) out.push_back({t, f});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
