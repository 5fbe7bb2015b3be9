#include "double_description.hpp"

#include <cstdint>
#include <optional>

namespace heartfan::detail {

namespace {

class Bits {
public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
        return r;
    }
    bool superset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((o.words_[i] & ~words_[i]) != 0) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    LatticeVector v;
    Bits tight;
};

// (alpha * x) - (beta * y), made primitive. Caller guarantees a nonzero result.
LatticeVector combine(const Integer& alpha, const LatticeVector& x, const Integer& beta, const LatticeVector& y) {
    return primitive(alpha * x - beta * y);
}

}  // namespace

Generators double_description(std::size_t dim, const std::vector<LatticeVector>& inequalities,
                              const std::vector<LatticeVector>& equations) {
    std::vector<LatticeVector> lineality;
    for (std::size_t i = 0; i < dim; ++i) lineality.push_back(LatticeVector::unit(dim, i));
    std::vector<Ray> rays;
    std::size_t n_ineq = inequalities.size();

    auto absorb_lineality = [&](const LatticeVector& a) -> std::optional<LatticeVector> {
        std::size_t pick = lineality.size();
        for (std::size_t i = 0; i < lineality.size(); ++i)
            if (dot(a, lineality[i]) != 0) {
                pick = i;
                break;
            }
        if (pick == lineality.size()) return std::nullopt;
        LatticeVector l0 = lineality[pick];
        if (dot(a, l0) < 0) l0 = -l0;
        Integer al0 = dot(a, l0);
        lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(pick));
        for (auto& l : lineality) {
            Integer al = dot(a, l);
            if (al != 0) l = combine(al0, l, al, l0);
        }
        for (auto& r : rays) {
            Integer ar = dot(a, r.v);
            if (ar != 0) r.v = combine(al0, r.v, ar, l0);
        }
        return l0;
    };

    for (const auto& e : equations) absorb_lineality(e);

    for (std::size_t k = 0; k < n_ineq; ++k) {
        const auto& a = inequalities[k];
        if (auto l0 = absorb_lineality(a)) {
            // Every earlier constraint vanishes on the old lineality, so l0 is tight there.
            for (auto& r : rays) r.tight.set(k);
            Ray fresh{*l0, Bits(n_ineq)};
            for (std::size_t j = 0; j < k; ++j) fresh.tight.set(j);
            rays.push_back(std::move(fresh));
            continue;
        }
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            if (val[i] > 0) pos.push_back(i);
            else if (val[i] < 0) neg.push_back(i);
        }
        std::vector<Ray> next;
        next.reserve(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] < 0) continue;
            Ray r = rays[i];
            if (val[i] == 0) r.tight.set(k);
            next.push_back(std::move(r));
        }
        for (auto p : pos) {
            for (auto n : neg) {
                Bits common = rays[p].tight & rays[n].tight;
                bool adjacent = true;
                for (std::size_t i = 0; i < rays.size() && adjacent; ++i) {
                    if (i == p || i == n) continue;
                    if (rays[i].tight.superset_of(common)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray r{combine(val[p], rays[n].v, val[n], rays[p].v), common};
                r.tight.set(k);
                next.push_back(std::move(r));
            }
        }
        rays = std::move(next);
    }

    Generators out;
    out.lineality = std::move(lineality);
    out.rays.reserve(rays.size());
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    return out;
}

}  // namespace heartfan::detail
