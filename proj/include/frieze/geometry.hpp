#pragma once

/**
 * @file geometry.hpp
 * @brief Combinatorics of convex polygons: diagonals, crossing, dissections
 *        and the cell decomposition a dissection induces.
 *
 * Vertices are labelled 1..n in cyclic order. A Diagonal is an unordered
 * pair of distinct vertices (boundary edges included); it is internal when
 * its endpoints are not cyclic neighbours.
 */

#include "frieze/error.hpp"

#include <compare>
#include <string>
#include <vector>

namespace frieze {

struct InvalidVertex : Error {
    using Error::Error;
};

class Diagonal {
public:
    Diagonal(int a, int b) : a_(std::min(a, b)), b_(std::max(a, b)) {
        if (a_ < 1 || a_ == b_) throw InvalidVertex("invalid diagonal {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    int a() const { return a_; }
    int b() const { return b_; }
    friend bool operator==(const Diagonal&, const Diagonal&) = default;
    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
    std::string str() const { return "{" + std::to_string(a_) + "," + std::to_string(b_) + "}"; }

private:
    int a_, b_;
};

struct NotInternal : Error {
    explicit NotInternal(Diagonal d) : Error("diagonal " + d.str() + " is not internal"), diagonal(d) {}
    Diagonal diagonal;
};

struct CrossingDiagonals : Error {
    CrossingDiagonals(Diagonal x, Diagonal y)
        : Error("diagonals " + x.str() + " and " + y.str() + " cross"), d1(x), d2(y) {}
    Diagonal d1, d2;
};

/// True iff the endpoints of d are not cyclic neighbours in the n-gon.
bool is_internal(const Diagonal& d, int n);

/// True iff the endpoints interleave cyclically; diagonals sharing a vertex
/// never cross.
bool crossing(const Diagonal& d1, const Diagonal& d2, int n);

/// A set of pairwise non-crossing internal diagonals of the n-gon, validated
/// on construction. The empty dissection is allowed.
class Dissection {
public:
    Dissection(int n, std::vector<Diagonal> diagonals);
    static Dissection empty(int n) { return Dissection(n, {}); }

    int polygon_size() const { return n_; }
    std::size_t size() const { return diagonals_.size(); }
    bool contains(const Diagonal& d) const;
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }
    auto begin() const { return diagonals_.begin(); }
    auto end() const { return diagonals_.end(); }
    friend bool operator==(const Dissection&, const Dissection&) = default;

private:
    int n_;
    std::vector<Diagonal> diagonals_; // sorted, unique
};

/// One piece of a cell decomposition: vertices in cyclic order, rotated so
/// the smallest label comes first.
struct Cell {
    std::vector<int> vertices;
    int size() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Cells of the decomposition induced by D, each in canonical rotation,
/// sorted by vertex list. Exactly |D|+1 cells.
std::vector<Cell> split_polygon(int n, const Dissection& D);

/// The diagonals of D crossing d, ordered along d starting from endpoint
/// d.a().
std::vector<Diagonal> crossed_by(const Diagonal& d, const Dissection& D);

/// All n(n-1)/2 diagonals of the n-gon (boundary edges included), sorted.
std::vector<Diagonal> all_diagonals(int n);

} // namespace frieze
