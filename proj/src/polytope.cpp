#include "valinv/polytope.hpp"

#include "valinv/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace valinv {

namespace {

/// Calls visit(indices) for every k-subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Halfspace normalized(Halfspace h) {
    // scale so the normal is a primitive integer vector; bound scales with it
    Integer den_lcm(1);
    for (const auto& x : h.normal) den_lcm = lcm(den_lcm, denominator(x));
    Integer g(0);
    for (const auto& x : h.normal) g = gcd(g, numerator(x * Rational(den_lcm)));
    if (g == 0) fail(ErrorKind::domain, "zero halfspace normal");
    const Rational factor = Rational(den_lcm) / Rational(g);
    for (auto& x : h.normal) x *= factor;
    h.bound *= factor;
    return h;
}

bool lex_less(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.bound < b.bound;
}

}  // namespace

RVector primitive_direction(const RVector& v) { return normalized(Halfspace{v, Rational(0)}).normal; }

Rational simplex_volume(const Simplex& s) {
    if (s.empty()) return Rational(0);
    const std::size_t n = s.size() - 1;
    RMatrix m;
    for (std::size_t i = 1; i <= n; ++i) {
        RVector row(n);
        for (std::size_t k = 0; k < n; ++k) row[k] = s[i][k] - s[0][k];
        m.push_back(std::move(row));
    }
    Rational det = determinant(std::move(m));
    if (det < 0) det = -det;
    return det / Rational(factorial(static_cast<unsigned>(n)));
}

RationalPolytope RationalPolytope::from_vertices(unsigned dim, std::vector<RVector> points) {
    for (const auto& p : points)
        if (p.size() != dim) fail(ErrorKind::input, "vertex dimension does not match polytope dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    RationalPolytope poly;
    poly.dim_ = dim;
    poly.vertices_ = std::move(points);
    poly.finish_from_vertices();
    return poly;
}

void RationalPolytope::finish_from_vertices() {
    affine_dim_ = affine_dimension(vertices_);
    facets_.clear();
    if (affine_dim_ != static_cast<int>(dim_) || dim_ == 0) return;

    std::vector<Halfspace> found;
    for_each_subset(vertices_.size(), dim_, [&](const std::vector<std::size_t>& idx) {
        RMatrix diffs;
        for (std::size_t i = 1; i < idx.size(); ++i) {
            RVector d(dim_);
            for (unsigned k = 0; k < dim_; ++k) d[k] = vertices_[idx[i]][k] - vertices_[idx[0]][k];
            diffs.push_back(std::move(d));
        }
        RMatrix normal_space = diffs.empty() ? RMatrix{RVector{Rational(1)}} : nullspace(diffs, dim_);
        if (normal_space.size() != 1) return;  // affinely dependent subset
        Halfspace h{normal_space.front(), dot(normal_space.front(), vertices_[idx[0]])};
        bool has_pos = false, has_neg = false;
        for (const auto& v : vertices_) {
            const Rational s = h.slack(v);
            if (s > 0) has_pos = true;
            if (s < 0) has_neg = true;
            if (has_pos && has_neg) return;
        }
        if (has_neg) {
            for (auto& x : h.normal) x = -x;
            h.bound = -h.bound;
        }
        found.push_back(normalized(std::move(h)));
    });
    std::sort(found.begin(), found.end(), lex_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    facets_ = std::move(found);

    // keep only extreme points: tight facet normals must span Q^n
    std::vector<RVector> extreme;
    for (const auto& v : vertices_) {
        RMatrix tight;
        for (const auto& f : facets_)
            if (f.slack(v) == 0) tight.push_back(f.normal);
        if (rank(tight) == dim_) extreme.push_back(v);
    }
    vertices_ = std::move(extreme);
}

RationalPolytope RationalPolytope::from_halfspaces(unsigned dim, std::vector<Halfspace> halfspaces) {
    for (const auto& h : halfspaces)
        if (h.normal.size() != dim) fail(ErrorKind::input, "halfspace dimension does not match polytope dimension");
    RationalPolytope poly;
    poly.dim_ = dim;
    std::vector<RVector> verts;
    for_each_subset(halfspaces.size(), dim, [&](const std::vector<std::size_t>& idx) {
        RMatrix a;
        RVector b;
        for (auto i : idx) {
            a.push_back(halfspaces[i].normal);
            b.push_back(halfspaces[i].bound);
        }
        if (rank(a) != dim) return;
        auto x = solve(a, b);
        if (!x) return;
        for (const auto& h : halfspaces)
            if (h.slack(*x) < 0) return;
        verts.push_back(std::move(*x));
    });
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    poly.vertices_ = std::move(verts);
    poly.affine_dim_ = affine_dimension(poly.vertices_);
    if (!poly.full_dimensional()) return poly;

    std::vector<Halfspace> facets;
    for (const auto& h : halfspaces) {
        std::vector<RVector> tight;
        for (const auto& v : poly.vertices_)
            if (h.slack(v) == 0) tight.push_back(v);
        if (affine_dimension(tight) == static_cast<int>(dim) - 1) facets.push_back(normalized(h));
    }
    std::sort(facets.begin(), facets.end(), lex_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    poly.facets_ = std::move(facets);
    return poly;
}

bool RationalPolytope::contains(const RVector& x) const {
    if (!full_dimensional()) fail(ErrorKind::domain, "containment test needs a full-dimensional polytope");
    for (const auto& f : facets_)
        if (f.slack(x) < 0) return false;
    return true;
}

std::vector<Simplex> RationalPolytope::triangulate() const {
    std::vector<Simplex> out;
    if (!full_dimensional()) return out;

    // faces are vertex-index sets; facets of a face F are the maximal F ∩ H
    std::function<std::vector<std::vector<std::size_t>>(const std::vector<std::size_t>&, int)> rec;
    rec = [&](const std::vector<std::size_t>& face, int k) -> std::vector<std::vector<std::size_t>> {
        if (k == 0) return {{face.front()}};
        const std::size_t apex = face.front();  // vertices_ sorted, so smallest index is lexicographically smallest
        std::set<std::vector<std::size_t>> subfaces;
        for (const auto& f : facets_) {
            std::vector<std::size_t> sub;
            for (auto i : face)
                if (f.slack(vertices_[i]) == 0) sub.push_back(i);
            if (sub.size() == face.size() || sub.empty()) continue;
            std::vector<RVector> pts;
            for (auto i : sub) pts.push_back(vertices_[i]);
            if (affine_dimension(pts) == k - 1) subfaces.insert(std::move(sub));
        }
        std::vector<std::vector<std::size_t>> simplices;
        for (const auto& sub : subfaces) {
            if (std::find(sub.begin(), sub.end(), apex) != sub.end()) continue;
            for (auto s : rec(sub, k - 1)) {
                s.insert(s.begin(), apex);
                simplices.push_back(std::move(s));
            }
        }
        return simplices;
    };

    std::vector<std::size_t> all(vertices_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    for (const auto& idx : rec(all, static_cast<int>(dim_))) {
        Simplex s;
        for (auto i : idx) s.push_back(vertices_[i]);
        out.push_back(std::move(s));
    }
    return out;
}

Rational RationalPolytope::volume() const {
    Rational total(0);
    for (const auto& s : triangulate()) total += simplex_volume(s);
    return total;
}

RationalPolytope RationalPolytope::scaled(const Rational& lambda) const {
    if (!(lambda > 0)) fail(ErrorKind::domain, "polytope scaling factor must be positive");
    RationalPolytope p = *this;
    for (auto& v : p.vertices_)
        for (auto& x : v) x *= lambda;
    for (auto& f : p.facets_) f.bound *= lambda;
    return p;
}

RationalPolytope RationalPolytope::translated(const RVector& shift) const {
    if (shift.size() != dim_) fail(ErrorKind::domain, "translation dimension mismatch");
    RationalPolytope p = *this;
    for (auto& v : p.vertices_)
        for (unsigned k = 0; k < dim_; ++k) v[k] += shift[k];
    for (auto& f : p.facets_) f.bound += dot(f.normal, shift);
    return p;
}

RationalPolytope RationalPolytope::cut(const std::vector<Halfspace>& extra) const {
    if (!full_dimensional()) {
        RationalPolytope p;
        p.dim_ = dim_;
        return p;  // measure zero already
    }
    std::vector<Halfspace> hs = facets_;
    hs.insert(hs.end(), extra.begin(), extra.end());
    return from_halfspaces(dim_, std::move(hs));
}

std::vector<std::vector<Integer>> RationalPolytope::lattice_points() const {
    std::vector<std::vector<Integer>> pts;
    if (empty()) return pts;
    if (!full_dimensional()) fail(ErrorKind::domain, "lattice points of a lower-dimensional polytope are not supported");
    std::vector<Integer> lo(dim_), hi(dim_);
    for (unsigned k = 0; k < dim_; ++k) {
        Rational mn = vertices_.front()[k], mx = vertices_.front()[k];
        for (const auto& v : vertices_) {
            mn = std::min(mn, v[k]);
            mx = std::max(mx, v[k]);
        }
        lo[k] = ceil(mn);
        hi[k] = floor(mx);
        if (lo[k] > hi[k]) return pts;
    }
    std::vector<Integer> cur = lo;
    while (true) {
        RVector x(dim_);
        for (unsigned k = 0; k < dim_; ++k) x[k] = Rational(cur[k]);
        if (contains(x)) pts.push_back(cur);
        int k = static_cast<int>(dim_) - 1;
        while (k >= 0 && cur[k] == hi[k]) {
            cur[k] = lo[k];
            --k;
        }
        if (k < 0) break;
        ++cur[k];
    }
    return pts;
}

bool RationalPolytope::is_lattice() const {
    for (const auto& v : vertices_)
        for (const auto& x : v)
            if (denominator(x) != 1) return false;
    return true;
}

Rational RationalPolytope::min_of(const RVector& linear) const {
    if (empty()) fail(ErrorKind::domain, "min over an empty polytope");
    Rational best = dot(linear, vertices_.front());
    for (const auto& v : vertices_) best = std::min(best, dot(linear, v));
    return best;
}

Rational RationalPolytope::max_of(const RVector& linear) const {
    if (empty()) fail(ErrorKind::domain, "max over an empty polytope");
    Rational best = dot(linear, vertices_.front());
    for (const auto& v : vertices_) best = std::max(best, dot(linear, v));
    return best;
}

}  // namespace valinv
