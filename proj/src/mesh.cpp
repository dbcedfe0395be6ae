#include "robincap/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_set>

namespace robincap {

namespace {

using Real = long double;

Real orient(Complex a, Complex b, Complex c) {
    const Real abx = Real(b.real()) - a.real(), aby = Real(b.imag()) - a.imag();
    const Real acx = Real(c.real()) - a.real(), acy = Real(c.imag()) - a.imag();
    return abx * acy - aby * acx;
}

// > 0 when d lies strictly inside the circumcircle of the counter-clockwise triangle abc
Real incircle(Complex a, Complex b, Complex c, Complex d) {
    const Real adx = Real(a.real()) - d.real(), ady = Real(a.imag()) - d.imag();
    const Real bdx = Real(b.real()) - d.real(), bdy = Real(b.imag()) - d.imag();
    const Real cdx = Real(c.real()) - d.real(), cdy = Real(c.imag()) - d.imag();
    const Real ad = adx * adx + ady * ady, bd = bdx * bdx + bdy * bdy, cd = cdx * cdx + cdy * cdy;
    return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_hash(std::uint64_t x) { return static_cast<double>(splitmix(x) >> 11) * 0x1.0p-53 * 2.0 - 1.0; }

std::uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

// Incremental Bowyer-Watson triangulation inside a large super triangle.
class Triangulator {
public:
    struct Tri {
        std::array<int, 3> v;
        std::array<int, 3> n;  // n[i] is across the edge opposite v[i]
    };

    Triangulator(Complex lo, Complex hi) {
        const Complex c = 0.5 * (lo + hi);
        const double L = std::max({hi.real() - lo.real(), hi.imag() - lo.imag(), 1e-300});
        pts_ = {c + Complex(-20 * L, -10 * L), c + Complex(20 * L, -10 * L), c + Complex(0, 20 * L)};
        tris_.push_back({{0, 1, 2}, {-1, -1, -1}});
        alive_.push_back(1);
        dup_tol_ = 1e-13 * L;
    }

    static constexpr int kSuper = 3;

    /// Inserts p and returns its vertex index (an existing index for duplicates).
    int insert(Complex p) {
        const int t = locate(p);
        for (int v : tris_[t].v)
            if (std::abs(pts_[v] - p) <= dup_tol_) return v;
        const int pi = static_cast<int>(pts_.size());
        pts_.push_back(p);

        ++stamp_;
        if (mark_.size() < tris_.size()) mark_.resize(tris_.size() * 2, 0);
        cavity_.clear();
        stack_.clear();
        stack_.push_back(t);
        mark_[t] = stamp_;
        while (!stack_.empty()) {
            const int c = stack_.back();
            stack_.pop_back();
            cavity_.push_back(c);
            for (int nb : tris_[c].n) {
                if (nb < 0 || mark_[nb] == stamp_) continue;
                const auto& v = tris_[nb].v;
                if (incircle(pts_[v[0]], pts_[v[1]], pts_[v[2]], p) > 0) {
                    mark_[nb] = stamp_;
                    stack_.push_back(nb);
                }
            }
        }
        // enlarge the cavity until every boundary edge sees p on its left
        for (bool grown = true; grown;) {
            grown = false;
            rim_.clear();
            for (int c : cavity_) {
                for (int i = 0; i < 3; ++i) {
                    const int nb = tris_[c].n[i];
                    if (nb >= 0 && mark_[nb] == stamp_) continue;
                    const int a = tris_[c].v[(i + 1) % 3], b = tris_[c].v[(i + 2) % 3];
                    if (orient(pts_[a], pts_[b], p) <= 0 && nb >= 0) {
                        mark_[nb] = stamp_;
                        cavity_.push_back(nb);
                        grown = true;
                        break;
                    }
                    rim_.push_back({a, b, nb});
                }
                if (grown) break;
            }
        }

        for (int c : cavity_) {
            alive_[c] = 0;
            free_.push_back(c);
        }
        fresh_.clear();
        for (const auto& e : rim_) {
            int id;
            if (!free_.empty()) {
                id = free_.back();
                free_.pop_back();
            } else {
                id = static_cast<int>(tris_.size());
                tris_.push_back({});
                alive_.push_back(0);
            }
            tris_[id] = {{e.a, e.b, pi}, {-1, -1, e.outer}};
            alive_[id] = 1;
            if (e.outer >= 0) {
                auto& o = tris_[e.outer];
                for (int j = 0; j < 3; ++j)
                    if (o.v[(j + 1) % 3] == e.b && o.v[(j + 2) % 3] == e.a) o.n[j] = id;
            }
            fresh_.push_back(id);
        }
        for (int id : fresh_) {
            const int a = tris_[id].v[0], b = tris_[id].v[1];
            for (int other : fresh_) {
                if (tris_[other].v[0] == b) tris_[id].n[0] = other;
                if (tris_[other].v[1] == a) tris_[id].n[1] = other;
            }
        }
        last_ = fresh_.front();
        return pi;
    }

    const std::vector<Complex>& points() const { return pts_; }
    const std::vector<Tri>& tris() const { return tris_; }
    bool alive(int t) const { return alive_[t] != 0; }

private:
    struct RimEdge {
        int a, b, outer;
    };

    int locate(Complex p) {
        int t = last_;
        if (!alive_[t]) {
            for (t = static_cast<int>(tris_.size()) - 1; t >= 0 && !alive_[t]; --t) {
            }
        }
        const std::size_t limit = 4 * tris_.size() + 64;
        for (std::size_t step = 0; step < limit; ++step) {
            bool moved = false;
            for (int k = 0; k < 3; ++k) {
                const int i = static_cast<int>((k + step) % 3);
                const auto& tr = tris_[t];
                if (orient(pts_[tr.v[(i + 1) % 3]], pts_[tr.v[(i + 2) % 3]], p) < 0) {
                    if (tr.n[i] < 0) throw NumericError("point lies outside the triangulation bounds");
                    t = tr.n[i];
                    moved = true;
                    break;
                }
            }
            if (!moved) return t;
        }
        // walking failed to terminate; fall back to a scan
        for (int s = 0; s < static_cast<int>(tris_.size()); ++s) {
            if (!alive_[s]) continue;
            const auto& v = tris_[s].v;
            if (orient(pts_[v[0]], pts_[v[1]], p) >= 0 && orient(pts_[v[1]], pts_[v[2]], p) >= 0 &&
                orient(pts_[v[2]], pts_[v[0]], p) >= 0)
                return s;
        }
        throw NumericError("point location failed");
    }

    std::vector<Complex> pts_;
    std::vector<Tri> tris_;
    std::vector<char> alive_;
    std::vector<int> free_, cavity_, stack_, fresh_;
    std::vector<RimEdge> rim_;
    std::vector<unsigned> mark_;
    unsigned stamp_ = 0;
    int last_ = 0;
    double dup_tol_ = 0;
};

struct SizeField {
    double h;
    std::vector<SizeSource> sources;
    double operator()(Complex z) const {
        double s = h;
        for (const auto& src : sources)
            s = std::min(s, src.size + src.growth * std::max(0.0, std::abs(z - src.center) - src.radius));
        return s;
    }
};

struct EdgeRec {
    int a, b;
    int loop, arc;
    double ta, tb;
    int tag;
};

}  // namespace

SizeSource point_source(Complex z, double h) { return {z, 0.0, h / 64.0, 0.2}; }

SizeSource plate_source(Complex center, double rho, double h) {
    const double n = std::max(32.0, std::round(1.28 / h));
    return {center, rho, 2 * kPi * rho / n, 2 * kPi / n};
}

std::vector<std::array<int, 3>> delaunay(const std::vector<Complex>& points) {
    if (points.size() < 3) return {};
    Complex lo(std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());
    Complex hi = -lo;
    for (auto p : points) {
        lo = {std::min(lo.real(), p.real()), std::min(lo.imag(), p.imag())};
        hi = {std::max(hi.real(), p.real()), std::max(hi.imag(), p.imag())};
    }
    Triangulator tr(lo, hi);
    std::vector<int> ids;
    for (auto p : points) ids.push_back(tr.insert(p));
    std::vector<int> back(tr.points().size(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (back[ids[i]] < 0) back[ids[i]] = static_cast<int>(i);
    std::vector<std::array<int, 3>> out;
    for (int t = 0; t < static_cast<int>(tr.tris().size()); ++t) {
        if (!tr.alive(t)) continue;
        const auto& v = tr.tris()[t].v;
        if (v[0] < Triangulator::kSuper || v[1] < Triangulator::kSuper || v[2] < Triangulator::kSuper) continue;
        out.push_back({back[v[0]], back[v[1]], back[v[2]]});
    }
    return out;
}

Mesh mesh_domain(const MarkedDomain& md, double h, const std::vector<Complex>& refine_at) {
    MeshOptions opt;
    opt.h = h;
    for (auto z : refine_at) {
        opt.sources.push_back(point_source(z, h));
        opt.forced_points.push_back(z);
    }
    return mesh_domain(md, opt);
}

Mesh mesh_domain(const MarkedDomain& md, const MeshOptions& options) {
    const double h = options.h;
    if (!(h > 0) || !std::isfinite(h)) throw InputError("mesh size h must be positive");
    if (md.domain.kind != DomainKind::Bounded) throw InputError("only bounded domains are meshed directly");

    DomainSpec dom = md.domain;
    const int first_plate = static_cast<int>(dom.loops.size());
    if (!options.plates.empty()) {
        for (const auto& p : options.plates) dom.loops.push_back(p);
        dom = make_domain(std::move(dom));
    }

    for (int li = 0; li < first_plate; ++li) {
        double len = 0.0;
        for (const auto& a : dom.loops[li].arcs) len += a.length();
        if (h > len / 6.0)
            throw InputError("h = " + std::to_string(h) + " is too large to resolve loop '" + dom.loops[li].name +
                             "' and its gamma endpoints");
    }
    for (auto z : options.forced_points)
        if (!dom.contains(z)) throw InputError("refine point lies outside the domain");

    SizeField size{h, options.sources};
    double scale = 1.0;
    for (const auto& loop : dom.loops)
        for (const auto& a : loop.arcs) scale = std::max({scale, std::abs(a.head()), std::abs(a.tail())});
    for (const auto& p : md.gamma) {
        const auto& arc = dom.loops[p.component].arcs[p.arc];
        for (double s : {p.s0, p.s1}) {
            const Complex z = arc.point(s);
            if (md.distance_to_free(z) < 1e-12 * scale) size.sources.push_back(point_source(z, h));
        }
    }

    // Boundary nodes: equidistribute the integral of 1/size along every arc,
    // with arc joints and gamma endpoints always kept as nodes.
    std::vector<Complex> bnodes;
    std::vector<EdgeRec> edges;
    for (int li = 0; li < static_cast<int>(dom.loops.size()); ++li) {
        const auto& loop = dom.loops[li];
        const int loop_start = static_cast<int>(bnodes.size());
        for (int ai = 0; ai < static_cast<int>(loop.arcs.size()); ++ai) {
            const auto& arc = loop.arcs[ai];
            const bool fwd = arc.orientation() == Orientation::Positive;
            const double ta = fwd ? arc.t0() : arc.t1();
            const double tb = fwd ? arc.t1() : arc.t0();
            std::vector<double> breaks = {ta, tb};
            if (li < first_plate) {
                for (const auto& p : md.gamma) {
                    if (p.component != li || p.arc != ai) continue;
                    for (double s : {p.s0, p.s1})
                        if (s > arc.param_lo() + 1e-14 && s < arc.param_hi() - 1e-14) breaks.push_back(s);
                }
            }
            std::sort(breaks.begin(), breaks.end());
            breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
            if (ta > tb) std::reverse(breaks.begin(), breaks.end());

            for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
                const double u = breaks[k], v = breaks[k + 1];
                // cumulative integral of ds/size by midpoint marching
                std::vector<double> ts = {u}, F = {0.0};
                double t = u;
                const double dir = v > u ? 1.0 : -1.0;
                while (dir * (v - t) > 0) {
                    const double step = std::min(0.125 * size(arc.point(t)) / arc.speed(), dir * (v - t));
                    const double mid = t + 0.5 * dir * step;
                    F.push_back(F.back() + step * arc.speed() / size(arc.point(mid)));
                    t += dir * step;
                    ts.push_back(t);
                }
                ts.back() = v;
                const int n = std::max(1, static_cast<int>(std::ceil(F.back() - 1e-9)));
                std::size_t j = 0;
                for (int m = 0; m < n; ++m) {
                    const double target = F.back() * m / n;
                    while (j + 1 < F.size() && F[j + 1] < target) ++j;
                    double tp = ts[j];
                    if (j + 1 < F.size() && F[j + 1] > F[j])
                        tp = ts[j] + (ts[j + 1] - ts[j]) * (target - F[j]) / (F[j + 1] - F[j]);
                    const int idx = static_cast<int>(bnodes.size());
                    bnodes.push_back(arc.point(tp));
                    edges.push_back({idx, idx + 1, li, ai, tp, v, 0});
                }
                // patch the parameter ends of this run
                for (int m = 0; m < n; ++m) {
                    auto& e = edges[edges.size() - n + m];
                    e.tb = m + 1 < n ? edges[edges.size() - n + m + 1].ta : v;
                }
            }
        }
        // close the loop: the last edge returns to the loop's first node
        if (static_cast<int>(bnodes.size()) - loop_start < 3)
            throw InputError("h is too large to resolve loop '" + loop.name + "'");
        edges.back().b = loop_start;
    }
    const auto edge_tag = [&](const EdgeRec& e) {
        if (e.loop >= first_plate) return e.loop - first_plate + 1;
        const double mid = 0.5 * (e.ta + e.tb);
        for (const auto& p : md.gamma)
            if (p.component == e.loop && p.arc == e.arc && mid >= p.s0 && mid <= p.s1) return kGammaTag;
        return kFreeTag;
    };
    for (auto& e : edges) e.tag = edge_tag(e);

    // Interior candidates: quadtree leaf centres.
    Complex lo(std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()), hi = -lo;
    for (auto z : bnodes) {
        lo = {std::min(lo.real(), z.real()), std::min(lo.imag(), z.imag())};
        hi = {std::max(hi.real(), z.real()), std::max(hi.imag(), z.imag())};
    }
    std::vector<Complex> interior;
    const double root_half = 0.5 * std::max(hi.real() - lo.real(), hi.imag() - lo.imag()) * (1 + 1e-9);
    const Complex root_center = 0.5 * (lo + hi);
    struct Cell {
        Complex c;
        double half;
        std::uint64_t code;
        int depth;
    };
    std::vector<Cell> stack = {{root_center, root_half, 1, 0}};
    while (!stack.empty()) {
        const Cell cell = stack.back();
        stack.pop_back();
        const double s = size(cell.c);
        const double dist = dom.distance_to_boundary(cell.c);
        const bool inside = dom.contains(cell.c);
        if (!inside && dist > cell.half * 1.4143) continue;
        if (2 * cell.half > 0.7 * s && cell.depth < 40) {
            // push in reverse so children pop in Morton order
            for (int q = 3; q >= 0; --q) {
                const Complex off((q & 1) ? 0.5 : -0.5, (q & 2) ? 0.5 : -0.5);
                stack.push_back({cell.c + off * cell.half, 0.5 * cell.half, cell.code * 4 + q, cell.depth + 1});
            }
            continue;
        }
        const Complex z = cell.c + 1e-6 * cell.half *
                                       Complex(unit_hash(cell.code * 2 + 1), unit_hash(cell.code * 2 + 2));
        if (!dom.contains(z)) continue;
        const double sz = size(z);
        if (dom.distance_to_boundary(z) < 0.55 * sz) continue;
        bool near_forced = false;
        for (auto f : options.forced_points) near_forced |= std::abs(z - f) < 0.55 * sz;
        if (!near_forced) interior.push_back(z);
    }

    // Triangulate: boundary nodes first, then forced points, then the interior.
    Triangulator tr(lo - Complex(root_half, root_half) * 0.01, hi + Complex(root_half, root_half) * 0.01);
    std::vector<int> bid;
    for (auto z : bnodes) bid.push_back(tr.insert(z));
    for (auto& e : edges) {
        e.a = bid[e.a];
        e.b = bid[e.b];
    }
    for (auto z : options.forced_points) tr.insert(z);
    for (auto z : interior) tr.insert(z);

    // Boundary recovery by midpoint insertion on the true curve.
    auto recover = [&] {
    for (int round = 0;; ++round) {
        std::unordered_set<std::uint64_t> present;
        for (int t = 0; t < static_cast<int>(tr.tris().size()); ++t) {
            if (!tr.alive(t)) continue;
            const auto& v = tr.tris()[t].v;
            for (int i = 0; i < 3; ++i) present.insert(edge_key(v[i], v[(i + 1) % 3]));
        }
        std::vector<EdgeRec> next;
        bool missing = false;
        for (const auto& e : edges) {
            if (present.count(edge_key(e.a, e.b))) {
                next.push_back(e);
                continue;
            }
            missing = true;
            const double tm = 0.5 * (e.ta + e.tb);
            const int m = tr.insert(dom.loops[e.loop].arcs[e.arc].point(tm));
            next.push_back({e.a, m, e.loop, e.arc, e.ta, tm, e.tag});
            next.push_back({m, e.b, e.loop, e.arc, tm, e.tb, e.tag});
        }
        edges = std::move(next);
        if (!missing) break;
        if (round >= 30) throw NumericError("boundary recovery did not converge");
    }
    };
    recover();

    // Centroid insertion until no inside element is longer than the local size.
    for (int pass = 0; pass < 12; ++pass) {
        std::vector<Complex> extra;
        const auto& pts = tr.points();
        for (int t = 0; t < static_cast<int>(tr.tris().size()); ++t) {
            if (!tr.alive(t)) continue;
            const auto& v = tr.tris()[t].v;
            if (v[0] < Triangulator::kSuper || v[1] < Triangulator::kSuper || v[2] < Triangulator::kSuper) continue;
            const Complex c = (pts[v[0]] + pts[v[1]] + pts[v[2]]) / 3.0;
            if (!dom.contains(c)) continue;
            double longest = 0;
            for (int i = 0; i < 3; ++i) longest = std::max(longest, std::abs(pts[v[i]] - pts[v[(i + 1) % 3]]));
            if (longest > size(c)) extra.push_back(c);
        }
        if (extra.empty()) break;
        for (auto z : extra) tr.insert(z);
        recover();
    }

    // Flood-fill inside/outside from the oriented boundary edges.
    const auto& tris = tr.tris();
    std::unordered_set<std::uint64_t> barrier;
    for (const auto& e : edges) barrier.insert(edge_key(e.a, e.b));
    std::vector<signed char> side(tris.size(), 0);
    std::vector<int> queue;
    {
        // directed edge -> triangle on its left
        std::unordered_set<std::uint64_t> left;
        for (const auto& e : edges) left.insert((static_cast<std::uint64_t>(e.a) << 32) | static_cast<std::uint32_t>(e.b));
        for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
            if (!tr.alive(t)) continue;
            const auto& v = tris[t].v;
            for (int i = 0; i < 3; ++i) {
                const std::uint64_t fwd = (static_cast<std::uint64_t>(v[i]) << 32) | static_cast<std::uint32_t>(v[(i + 1) % 3]);
                const std::uint64_t rev = (static_cast<std::uint64_t>(v[(i + 1) % 3]) << 32) | static_cast<std::uint32_t>(v[i]);
                if (left.count(fwd)) side[t] = 1;
                else if (left.count(rev) && side[t] == 0) side[t] = -1;
            }
            if (v[0] < Triangulator::kSuper || v[1] < Triangulator::kSuper || v[2] < Triangulator::kSuper) side[t] = -1;
            if (side[t] != 0) queue.push_back(t);
        }
    }
    while (!queue.empty()) {
        const int t = queue.back();
        queue.pop_back();
        for (int i = 0; i < 3; ++i) {
            const int nb = tris[t].n[i];
            if (nb < 0 || side[nb] != 0) continue;
            if (barrier.count(edge_key(tris[t].v[(i + 1) % 3], tris[t].v[(i + 2) % 3]))) continue;
            side[nb] = side[t];
            queue.push_back(nb);
        }
    }

    Mesh mesh;
    mesh.h = h;
    mesh.sources = size.sources;
    std::vector<int> remap(tr.points().size(), -1);
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
        if (!tr.alive(t) || side[t] != 1) continue;
        std::array<int, 3> tri;
        for (int i = 0; i < 3; ++i) {
            const int v = tris[t].v[i];
            if (remap[v] < 0) {
                remap[v] = static_cast<int>(mesh.vertices.size());
                mesh.vertices.push_back(tr.points()[v]);
            }
            tri[i] = remap[v];
        }
        mesh.triangles.push_back(tri);
    }
    mesh.vertex_tag.assign(mesh.vertices.size(), kInteriorTag);
    for (const auto& e : edges) {
        if (remap[e.a] < 0 || remap[e.b] < 0) throw NumericError("boundary edge lost during meshing");
        mesh.boundary.push_back({remap[e.a], remap[e.b], e.tag, e.loop, e.arc});
        for (int v : {remap[e.a], remap[e.b]}) {
            int& tag = mesh.vertex_tag[v];
            if (tag == kInteriorTag || tag == kFreeTag) tag = e.tag;
        }
    }
    mesh.build_locator();
    return mesh;
}

// ---------------------------------------------------------------------------
// Queries

void Mesh::build_locator() {
    if (vertices.empty()) return;
    double x0 = vertices[0].real(), x1 = x0, y0 = vertices[0].imag(), y1 = y0;
    for (auto z : vertices) {
        x0 = std::min(x0, z.real());
        x1 = std::max(x1, z.real());
        y0 = std::min(y0, z.imag());
        y1 = std::max(y1, z.imag());
    }
    const double span = std::max(x1 - x0, y1 - y0) * (1 + 1e-9) + 1e-300;
    const int n = std::clamp(static_cast<int>(std::sqrt(static_cast<double>(triangles.size()) / 2.0)), 1, 2048);
    cell_ = span / n;
    gx0_ = x0;
    gy0_ = y0;
    gnx_ = std::max(1, static_cast<int>((x1 - x0) / cell_) + 1);
    gny_ = std::max(1, static_cast<int>((y1 - y0) / cell_) + 1);
    buckets_.assign(static_cast<std::size_t>(gnx_) * gny_, {});
    for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
        double tx0 = 1e300, tx1 = -1e300, ty0 = 1e300, ty1 = -1e300;
        for (int v : triangles[t]) {
            tx0 = std::min(tx0, vertices[v].real());
            tx1 = std::max(tx1, vertices[v].real());
            ty0 = std::min(ty0, vertices[v].imag());
            ty1 = std::max(ty1, vertices[v].imag());
        }
        const int i0 = std::clamp(static_cast<int>((tx0 - gx0_) / cell_), 0, gnx_ - 1);
        const int i1 = std::clamp(static_cast<int>((tx1 - gx0_) / cell_), 0, gnx_ - 1);
        const int j0 = std::clamp(static_cast<int>((ty0 - gy0_) / cell_), 0, gny_ - 1);
        const int j1 = std::clamp(static_cast<int>((ty1 - gy0_) / cell_), 0, gny_ - 1);
        for (int j = j0; j <= j1; ++j)
            for (int i = i0; i <= i1; ++i) buckets_[static_cast<std::size_t>(j) * gnx_ + i].push_back(t);
    }
}

std::array<double, 3> Mesh::barycentric(int t, Complex z) const {
    const Complex a = vertices[triangles[t][0]], b = vertices[triangles[t][1]], c = vertices[triangles[t][2]];
    const double det = (b - a).real() * (c - a).imag() - (b - a).imag() * (c - a).real();
    const double l1 = ((z - a).real() * (c - a).imag() - (z - a).imag() * (c - a).real()) / det;
    const double l2 = ((b - a).real() * (z - a).imag() - (b - a).imag() * (z - a).real()) / det;
    return {1.0 - l1 - l2, l1, l2};
}

int Mesh::locate(Complex z) const {
    if (buckets_.empty()) return -1;
    const int i = static_cast<int>(std::floor((z.real() - gx0_) / cell_));
    const int j = static_cast<int>(std::floor((z.imag() - gy0_) / cell_));
    if (i < 0 || j < 0 || i >= gnx_ || j >= gny_) return -1;
    int best = -1;
    double best_min = -std::numeric_limits<double>::infinity();
    for (int t : buckets_[static_cast<std::size_t>(j) * gnx_ + i]) {
        const auto l = barycentric(t, z);
        const double m = std::min({l[0], l[1], l[2]});
        if (m >= 0) return t;
        if (m > best_min) {
            best_min = m;
            best = t;
        }
    }
    return best_min > -1e-9 ? best : -1;
}

double Mesh::max_edge_length() const {
    double m = 0.0;
    for (const auto& t : triangles)
        for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(vertices[t[i]] - vertices[t[(i + 1) % 3]]));
    return m;
}

double Mesh::area() const {
    double s = 0.0;
    for (const auto& t : triangles) {
        const Complex a = vertices[t[0]], b = vertices[t[1]], c = vertices[t[2]];
        s += 0.5 * ((b - a).real() * (c - a).imag() - (b - a).imag() * (c - a).real());
    }
    return s;
}

int Mesh::nearest_vertex(Complex z) const {
    int best = -1;
    double d = std::numeric_limits<double>::infinity();
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
        const double dv = std::abs(vertices[v] - z);
        if (dv < d) {
            d = dv;
            best = v;
        }
    }
    return best;
}

}  // namespace robincap
