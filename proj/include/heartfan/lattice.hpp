#pragma once

#include "heartfan/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace heartfan {

// Integer point of a lattice. Also used for integral points of the dual lattice
// (ray and facet representatives), where the distinction is only in interpretation.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    LatticeVector(std::initializer_list<long> coords);

    static LatticeVector zero(std::size_t rank);
    static LatticeVector unit(std::size_t rank, std::size_t i);

    std::size_t rank() const { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Integer>& coords() const { return coords_; }
    bool is_zero() const;

    LatticeVector operator-() const;
    LatticeVector& operator+=(const LatticeVector& o);
    LatticeVector& operator-=(const LatticeVector& o);
    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(const Integer& k, const LatticeVector& a);

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const LatticeVector& a, const LatticeVector& b) { return a.coords_ < b.coords_; }

    std::string str(char open = '(', char close = ')') const;

private:
    std::vector<Integer> coords_;
};

// Rational point of the dual space V = Hom(L, R), always in lowest terms.
class DualVector {
public:
    DualVector() = default;
    explicit DualVector(std::vector<Rational> coords);
    explicit DualVector(const LatticeVector& integral);
    DualVector(std::initializer_list<long> coords);

    std::size_t rank() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;

    DualVector operator-() const;
    friend DualVector operator+(const DualVector& a, const DualVector& b);
    friend DualVector operator*(const Rational& k, const DualVector& a);

    // Smallest positive multiple with integer coordinates, made primitive.
    LatticeVector clear_denominators() const;

    friend bool operator==(const DualVector& a, const DualVector& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const DualVector& a, const DualVector& b) { return a.coords_ < b.coords_; }

    std::string str() const;

private:
    std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const DualVector& v);

Rational pair(const DualVector& w, const LatticeVector& x);
Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const DualVector& a, const DualVector& b);

LatticeVector primitive(const LatticeVector& x);
Integer content(const LatticeVector& x);

// Integer matrix of a homomorphism, target-rank rows by source-rank columns.
class LatticeHom {
public:
    LatticeHom(std::size_t target_rank, std::size_t source_rank);
    explicit LatticeHom(std::vector<std::vector<Integer>> rows, std::size_t source_rank);
    LatticeHom(std::initializer_list<std::initializer_list<long>> rows);

    static LatticeHom identity(std::size_t rank);

    std::size_t source_rank() const { return source_rank_; }
    std::size_t target_rank() const { return rows_.size(); }
    const Integer& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    const std::vector<std::vector<Integer>>& rows() const { return rows_; }

    LatticeVector operator()(const LatticeVector& x) const;
    DualVector operator()(const DualVector& x) const;

    friend bool operator==(const LatticeHom& a, const LatticeHom& b) {
        return a.source_rank_ == b.source_rank_ && a.rows_ == b.rows_;
    }

private:
    std::vector<std::vector<Integer>> rows_;
    std::size_t source_rank_ = 0;
};

LatticeHom dual_hom(const LatticeHom& f);

void require_rank(std::size_t expected, std::size_t got, const char* what);

}  // namespace heartfan
