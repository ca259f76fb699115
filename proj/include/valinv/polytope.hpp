#pragma once

#include "valinv/linalg.hpp"

#include <vector>

namespace valinv {

/// Closed halfspace {x : <normal, x> >= bound}.
struct Halfspace {
    RVector normal;
    Rational bound{0};

    Rational slack(const RVector& x) const { return dot(normal, x) - bound; }
    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

using Simplex = std::vector<RVector>;  // n + 1 vertices

/// Convex polytope in Q^n carried in both representations. Construction
/// computes whichever representation is missing by brute-force enumeration,
/// which is exact and adequate for the handful of vertices/facets of desk models.
class RationalPolytope {
public:
    RationalPolytope() = default;

    /// Convex hull of the points. Non-extreme input points are dropped.
    static RationalPolytope from_vertices(unsigned dim, std::vector<RVector> points);
    /// Intersection of halfspaces; must be bounded. May come out empty or
    /// lower-dimensional, which is reported through empty()/full_dimensional().
    static RationalPolytope from_halfspaces(unsigned dim, std::vector<Halfspace> halfspaces);

    unsigned dim() const noexcept { return dim_; }
    /// Vertices in lexicographic order.
    const std::vector<RVector>& vertices() const noexcept { return vertices_; }
    /// Irredundant facet halfspaces with primitive integer normals (full-dimensional case).
    const std::vector<Halfspace>& facets() const noexcept { return facets_; }
    bool empty() const noexcept { return vertices_.empty(); }
    bool full_dimensional() const noexcept { return affine_dim_ == static_cast<int>(dim_); }
    int affine_dim() const noexcept { return affine_dim_; }

    bool contains(const RVector& x) const;

    /// Deterministic pulling triangulation: cone from the lexicographically
    /// smallest vertex over the triangulated facets not containing it.
    std::vector<Simplex> triangulate() const;
    /// Euclidean volume; zero for empty or lower-dimensional polytopes.
    Rational volume() const;

    RationalPolytope scaled(const Rational& lambda) const;
    RationalPolytope translated(const RVector& shift) const;
    /// this ∩ extra halfspaces.
    RationalPolytope cut(const std::vector<Halfspace>& extra) const;

    /// Integer points, in lexicographic order.
    std::vector<std::vector<Integer>> lattice_points() const;
    bool is_lattice() const;

    Rational min_of(const RVector& linear) const;
    Rational max_of(const RVector& linear) const;

private:
    void finish_from_vertices();
    unsigned dim_ = 0;
    int affine_dim_ = -1;
    std::vector<RVector> vertices_;
    std::vector<Halfspace> facets_;
};

/// Volume of a simplex given by n + 1 vertices.
Rational simplex_volume(const Simplex& s);

/// Scales a rational normal to a primitive integer vector (same direction).
RVector primitive_direction(const RVector& v);

}  // namespace valinv
