#include "heartfan/lattice.hpp"

#include "heartfan/errors.hpp"

#include <ostream>

namespace heartfan {

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::zero(std::size_t rank) { return LatticeVector(std::vector<Integer>(rank, 0)); }

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t i) {
    std::vector<Integer> c(rank, 0);
    c.at(i) = 1;
    return LatticeVector(std::move(c));
}

bool LatticeVector::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

LatticeVector LatticeVector::operator-() const {
    std::vector<Integer> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
    return LatticeVector(std::move(c));
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
    require_rank(rank(), o.rank(), "vector sum");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
    require_rank(rank(), o.rank(), "vector difference");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

LatticeVector operator*(const Integer& k, const LatticeVector& a) {
    std::vector<Integer> c(a.rank());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a[i];
    return LatticeVector(std::move(c));
}

std::string LatticeVector::str(char open, char close) const {
    std::string s(1, open);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ",";
        s += coords_[i].get_str();
    }
    s += close;
    return s;
}

DualVector::DualVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (auto& c : coords_) c.canonicalize();
}

DualVector::DualVector(const LatticeVector& integral) {
    coords_.reserve(integral.rank());
    for (const auto& c : integral.coords()) coords_.emplace_back(c);
}

DualVector::DualVector(std::initializer_list<long> coords) {
    for (long c : coords) coords_.emplace_back(c);
}

bool DualVector::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

DualVector DualVector::operator-() const {
    std::vector<Rational> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
    return DualVector(std::move(c));
}

DualVector operator+(const DualVector& a, const DualVector& b) {
    require_rank(a.rank(), b.rank(), "dual vector sum");
    std::vector<Rational> c(a.rank());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return DualVector(std::move(c));
}

DualVector operator*(const Rational& k, const DualVector& a) {
    std::vector<Rational> c(a.rank());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a[i];
    return DualVector(std::move(c));
}

LatticeVector DualVector::clear_denominators() const {
    Integer l = 1;
    for (const auto& c : coords_) l = lcm(l, c.get_den());
    std::vector<Integer> out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Rational scaled = coords_[i] * l;
        out[i] = scaled.get_num();
    }
    LatticeVector v(std::move(out));
    return v.is_zero() ? v : primitive(v);
}

std::string DualVector::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ",";
        s += coords_[i].get_str();
    }
    return s + "]";
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.str(); }

std::ostream& operator<<(std::ostream& os, const DualVector& v) { return os << v.str(); }

void require_rank(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got)
        throw DimensionError(std::string(what) + ": rank " + std::to_string(got) + " where " +
                             std::to_string(expected) + " was expected");
}

Rational pair(const DualVector& w, const LatticeVector& x) {
    require_rank(w.rank(), x.rank(), "pairing");
    Rational s = 0;
    for (std::size_t i = 0; i < x.rank(); ++i) s += w[i] * x[i];
    return s;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
    require_rank(a.rank(), b.rank(), "dot product");
    Integer s = 0;
    for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const DualVector& a, const DualVector& b) {
    require_rank(a.rank(), b.rank(), "dot product");
    Rational s = 0;
    for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
    return s;
}

Integer content(const LatticeVector& x) {
    Integer g = 0;
    for (const auto& c : x.coords()) g = gcd(g, c);
    return g;
}

LatticeVector primitive(const LatticeVector& x) {
    Integer g = content(x);
    if (g == 0) throw DegenerateInput("primitive: zero vector has no ray");
    if (g == 1) return x;
    std::vector<Integer> c(x.rank());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x[i] / g;
    return LatticeVector(std::move(c));
}

LatticeHom::LatticeHom(std::size_t target_rank, std::size_t source_rank)
    : rows_(target_rank, std::vector<Integer>(source_rank, 0)), source_rank_(source_rank) {}

LatticeHom::LatticeHom(std::vector<std::vector<Integer>> rows, std::size_t source_rank)
    : rows_(std::move(rows)), source_rank_(source_rank) {
    for (const auto& r : rows_) require_rank(source_rank_, r.size(), "homomorphism row");
}

LatticeHom::LatticeHom(std::initializer_list<std::initializer_list<long>> rows) {
    source_rank_ = rows.size() ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        require_rank(source_rank_, r.size(), "homomorphism row");
        std::vector<Integer> row;
        for (long c : r) row.emplace_back(c);
        rows_.push_back(std::move(row));
    }
}

LatticeHom LatticeHom::identity(std::size_t rank) {
    LatticeHom f(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) f.rows_[i][i] = 1;
    return f;
}

LatticeVector LatticeHom::operator()(const LatticeVector& x) const {
    require_rank(source_rank_, x.rank(), "homomorphism argument");
    std::vector<Integer> out(rows_.size(), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < source_rank_; ++c) out[r] += rows_[r][c] * x[c];
    return LatticeVector(std::move(out));
}

DualVector LatticeHom::operator()(const DualVector& x) const {
    require_rank(source_rank_, x.rank(), "homomorphism argument");
    std::vector<Rational> out(rows_.size(), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < source_rank_; ++c) out[r] += rows_[r][c] * x[c];
    return DualVector(std::move(out));
}

LatticeHom dual_hom(const LatticeHom& f) {
    std::vector<std::vector<Integer>> rows(f.source_rank(), std::vector<Integer>(f.target_rank()));
    for (std::size_t r = 0; r < f.target_rank(); ++r)
        for (std::size_t c = 0; c < f.source_rank(); ++c) rows[c][r] = f.at(r, c);
    return LatticeHom(std::move(rows), f.target_rank());
}

}  // namespace heartfan
