#include "dsg/planar.hpp"
#include "dsg/scene.hpp"

#include <algorithm>

namespace dsg {

PlanarObject PlanarObject::disk(std::string label, Pt2 center, Rat radius) {
  if (sgn(radius) <= 0) throw std::invalid_argument("disk radius must be > 0");
  PlanarObject o;
  o.kind = Kind::Disk;
  o.label = std::move(label);
  o.center = std::move(center);
  o.radius = std::move(radius);
  return o;
}

PlanarObject PlanarObject::hull(std::string label, Rat inner_radius,
                                std::vector<int> generators) {
  if (sgn(inner_radius) <= 0 || inner_radius >= 1)
    throw std::invalid_argument("hull inner radius must lie in (0,1)");
  if (generators.empty())
    throw std::invalid_argument("hull needs at least one generator point");
  PlanarObject o;
  o.kind = Kind::Hull;
  o.label = std::move(label);
  o.inner_radius = std::move(inner_radius);
  o.generators = std::move(generators);
  return o;
}

Rat fatness_lower_bound(const PlanarObject& o) {
  if (o.kind == PlanarObject::Kind::Disk) return Rat(1);
  return o.inner_radius;
}

namespace {

Rat cross(const Pt2& a, const Pt2& b) { return a.x * b.y - a.y * b.x; }
Rat dot(const Pt2& a, const Pt2& b) { return a.x * b.x + a.y * b.y; }
Pt2 sub(const Pt2& a, const Pt2& b) { return {a.x - b.x, a.y - b.y}; }
Rat norm_sq(const Pt2& a) { return dot(a, a); }

// Angular order around the origin for nonzero points.
bool angle_less(const Pt2& a, const Pt2& b) {
  auto half = [](const Pt2& p) {
    return (sgn(p.y) > 0 || (sgn(p.y) == 0 && sgn(p.x) > 0)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

// A point with coordinates in Q(sqrt(s)); used for the tangent touch points
// of a hull boundary.
struct RPt {
  RadExpr x, y;
};

RPt rpt_of(const Pt2& p) { return {RadExpr::rational(p.x), RadExpr::rational(p.y)}; }

RadExpr rcross(const RPt& a, const RPt& b) {
  return a.x.mul(b.y).sub(a.y.mul(b.x));
}
RadExpr rdot(const RPt& a, const RPt& b) {
  return a.x.mul(b.x).add(a.y.mul(b.y));
}
RPt rsub(const RPt& a, const RPt& b) { return {a.x.sub(b.x), a.y.sub(b.y)}; }

// Membership of rational P in the ccw circular sector from A to B (possibly
// reflex); A and B are nonzero directions with coordinates in Q(sqrt(s)).
bool in_ccw_sector(const RPt& A, const RPt& B, const Pt2& P) {
  RPt rp = rpt_of(P);
  int cab = rcross(A, B).sign();
  int cap = rcross(A, rp).sign();
  int cpb = rcross(rp, B).sign();
  if (cab > 0) return cap >= 0 && cpb >= 0;
  if (cab < 0) return cap >= 0 || cpb >= 0;
  // A and B parallel: opposite -> half-turn arc; same direction -> the
  // degenerate ray (does not arise for proper hull gaps, kept for safety).
  if (rdot(A, B).sign() < 0) return cap >= 0;
  return cap == 0 && rdot(A, rp).sign() > 0;
}

// One gap of the hull boundary between angularly consecutive generators
// ga -> gb (ccw). Either the straight chord [ga,gb], or the chain
// ga -> Ta (tangent edge), arc Ta..Tb on the inner circle, Tb -> gb.
struct Gap {
  Pt2 ga, gb;
  bool chord = false;
  RPt Ta, Tb;  // tangent-arc case only
};

struct HullGeom {
  Rat rho, s;             // s = 1 - rho^2 > 0
  std::vector<Pt2> gens;  // sorted ccw, distinct
  std::vector<Gap> gaps;
};

HullGeom build_hull(const PlanarObject& h, const std::vector<Pt2>& table) {
  HullGeom geo;
  geo.rho = h.inner_radius;
  geo.s = 1 - h.inner_radius * h.inner_radius;
  if (h.generators.empty())
    throw std::invalid_argument("degenerate hull '" + h.label +
                                "': no generators");
  for (int idx : h.generators) {
    if (idx < 0 || idx >= static_cast<int>(table.size()))
      throw std::invalid_argument("hull '" + h.label +
                                  "': generator index out of range");
    const Pt2& p = table[idx];
    if (norm_sq(p) != 1)
      throw std::invalid_argument("hull '" + h.label +
                                  "': generator not on the unit circle");
    geo.gens.push_back(p);
  }
  std::sort(geo.gens.begin(), geo.gens.end(), angle_less);
  for (std::size_t i = 1; i < geo.gens.size(); ++i)
    if (geo.gens[i] == geo.gens[i - 1])
      throw std::invalid_argument("hull '" + h.label +
                                  "': repeated generator point");

  Rat rho2 = geo.rho * geo.rho;
  std::size_t n = geo.gens.size();
  for (std::size_t i = 0; i < n; ++i) {
    Gap gap;
    gap.ga = geo.gens[i];
    gap.gb = geo.gens[(i + 1) % n];
    bool self = (n == 1);
    Rat c = cross(gap.ga, gap.gb);
    // Chord boundary iff the ccw gap is < pi and the chord clears the inner
    // circle: dist(O, line)^2 >= rho^2, i.e. c^2 >= rho^2 |gb-ga|^2.
    if (!self && sgn(c) > 0 && c * c >= rho2 * norm_sq(sub(gap.gb, gap.ga))) {
      gap.chord = true;
    } else {
      // Tangent touch points: Ta = rho^2*ga + rho*sqrt(s)*perp(ga) (ccw
      // ahead of ga), Tb = rho^2*gb - rho*sqrt(s)*perp(gb).
      auto touch = [&](const Pt2& g, int dir) {
        RPt t;
        t.x = RadExpr::make(rho2 * g.x, -dir * geo.rho * g.y, geo.s);
        t.y = RadExpr::make(rho2 * g.y, dir * geo.rho * g.x, geo.s);
        return t;
      };
      gap.Ta = touch(gap.ga, +1);
      gap.Tb = touch(gap.gb, -1);
    }
    geo.gaps.push_back(std::move(gap));
  }
  return geo;
}

bool point_in_hull(const HullGeom& geo, const Pt2& P) {
  Rat rho2 = geo.rho * geo.rho;
  if (norm_sq(P) <= rho2) return true;
  RPt rp = rpt_of(P);
  for (const Gap& gap : geo.gaps) {
    if (gap.chord) {
      // Interior lies left of the ccw-directed chord.
      if (sgn(cross(sub(gap.gb, gap.ga), sub(P, gap.ga))) < 0) return false;
    } else {
      // Outside a supporting tangent line: P . T > rho^2.
      if (rdot(rp, gap.Ta).compare(RadExpr::rational(rho2)) > 0) return false;
      if (rdot(rp, gap.Tb).compare(RadExpr::rational(rho2)) > 0) return false;
      // In the free-arc sector the boundary is the inner circle itself.
      if (in_ccw_sector(gap.Ta, gap.Tb, P) && norm_sq(P) > rho2) return false;
    }
  }
  return true;
}

// Aggregated comparison of dist(P, hull)^2 with r^2 for P strictly outside
// the hull: -1 overlap, 0 tangent, +1 disjoint.
int hull_distance_vs(const HullGeom& geo, const Pt2& P, const Rat& r) {
  Rat r2 = r * r;
  Rat rho2 = geo.rho * geo.rho;
  RPt rp = rpt_of(P);
  int best = +1;
  auto consider = [&](int sign_vs_r2) {
    sign_vs_r2 = sign_vs_r2 > 0 ? 1 : (sign_vs_r2 < 0 ? -1 : 0);
    if (sign_vs_r2 < best) best = sign_vs_r2;
  };

  for (const Pt2& g : geo.gens)
    consider(cmp(norm_sq(sub(P, g)), r2));

  for (const Gap& gap : geo.gaps) {
    if (gap.chord) {
      Pt2 d = sub(gap.gb, gap.ga);
      Rat len2 = norm_sq(d);
      Rat t = dot(sub(P, gap.ga), d);
      if (sgn(t) > 0 && t < len2) {
        Rat c = cross(d, sub(P, gap.ga));
        // line distance^2 = c^2 / len2, compared against r^2
        consider(cmp(c * c, r2 * len2));
      }
      continue;
    }
    // Tangent touch points as vertices.
    for (const RPt* T : {&gap.Ta, &gap.Tb}) {
      RPt diff = rsub(rp, *T);
      RadExpr d2 = rdot(diff, diff);
      consider(d2.compare(RadExpr::rational(r2)));
    }
    // Tangent edges [g, T]; distance to the supporting line is
    // |P.T - rho^2| / rho when the projection falls inside the edge.
    auto edge = [&](const Pt2& g, const RPt& T) {
      RPt gp = rpt_of(g);
      RPt dir = rsub(T, gp);
      RadExpr t = rdot(rsub(rp, gp), dir);
      RadExpr len2 = rdot(dir, dir);
      if (t.sign() > 0 && t.compare(len2) < 0) {
        RadExpr f = rdot(rp, T).sub(RadExpr::rational(rho2));
        RadExpr d2 = f.mul(f);  // times 1/rho^2
        consider(d2.compare(RadExpr::rational(r2 * rho2)));
      }
    };
    edge(gap.ga, gap.Ta);
    edge(gap.gb, gap.Tb);
    // Free arc: radial distance |P| - rho applies when P's direction lies in
    // the arc sector. (|P| - rho)^2 vs r^2 is a single-radical comparison.
    if (in_ccw_sector(gap.Ta, gap.Tb, P)) {
      Rat p2 = norm_sq(P);
      consider(sign_single_radical(p2 + rho2 - r2, -2 * geo.rho, p2));
    }
  }
  return best;
}

PairClass classify_disk_disk(const PlanarObject& a, const PlanarObject& b) {
  Rat d2 = norm_sq(sub(a.center, b.center));
  Rat sum = a.radius + b.radius;
  int s = cmp(d2, sum * sum);
  if (s > 0) return PairClass::Disjoint;
  if (s == 0) return PairClass::Tangent;
  return PairClass::Overlap;
}

PairClass classify_hull_disk(const PlanarObject& hull, const PlanarObject& disk,
                             const std::vector<Pt2>& table) {
  HullGeom geo = build_hull(hull, table);
  if (point_in_hull(geo, disk.center)) return PairClass::Overlap;
  int s = hull_distance_vs(geo, disk.center, disk.radius);
  if (s > 0) return PairClass::Disjoint;
  if (s == 0) return PairClass::Tangent;
  return PairClass::Overlap;
}

}  // namespace

PairClass planar_classify(const PlanarObject& a, const PlanarObject& b,
                          const std::vector<Pt2>& circle_points) {
  using Kind = PlanarObject::Kind;
  if (a.kind == Kind::Disk && b.kind == Kind::Disk)
    return classify_disk_disk(a, b);
  if (a.kind == Kind::Hull && b.kind == Kind::Hull) {
    // Both contain the inner disk around the origin.
    build_hull(a, circle_points);
    build_hull(b, circle_points);
    return PairClass::Overlap;
  }
  const PlanarObject& h = a.kind == Kind::Hull ? a : b;
  const PlanarObject& d = a.kind == Kind::Hull ? b : a;
  return classify_hull_disk(h, d, circle_points);
}

}  // namespace dsg
