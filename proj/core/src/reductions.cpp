#include "dsg/reductions.hpp"

#include <algorithm>
#include <map>

namespace dsg {

std::string target_kind_name(TargetKind k) {
  switch (k) {
    case TargetKind::DominatingSet: return "dominating-set";
    case TargetKind::WeightedDominatingSet: return "weighted-dominating-set";
    case TargetKind::ConnectedDominatingSet: return "connected-dominating-set";
    case TargetKind::SteinerTree: return "steiner-tree";
  }
  return "?";
}

namespace {

struct LitOcc {
  int var;        // original variable index
  int var_pos;    // 1..n over occurring variables
  bool positive;
  int clause;     // 0-based
};

struct Layout {
  int n = 0, t = 0, m = 0;
  std::vector<int> vars;                      // occurring, ascending
  std::map<int, int> var_pos;                 // original index -> 1..n
  std::vector<LitOcc> lits;                   // global order, index i-1
  std::vector<std::pair<int, int>> clause_span;  // (first global index 1-based, size)
};

Layout analyze(const CnfFormula& f) {
  Layout lay;
  lay.m = f.num_clauses();
  for (const auto& clause : f.clauses) {
    if (clause.size() < 2 || clause.size() > 3)
      throw std::invalid_argument(
          "gadget builders need clauses of size 2 or 3; run unit-clause "
          "preprocessing first");
    for (int lit : clause) lay.var_pos[std::abs(lit)] = 0;
  }
  for (auto& [v, pos] : lay.var_pos) {
    lay.vars.push_back(v);
    pos = static_cast<int>(lay.vars.size());
  }
  lay.n = static_cast<int>(lay.vars.size());
  int next = 1;
  for (int k = 0; k < lay.m; ++k) {
    const auto& clause = f.clauses[k];
    lay.clause_span.push_back({next, static_cast<int>(clause.size())});
    for (int lit : clause) {
      lay.lits.push_back(
          {std::abs(lit), lay.var_pos[std::abs(lit)], lit > 0, k});
      ++next;
    }
  }
  lay.t = static_cast<int>(lay.lits.size());
  return lay;
}

std::string xl(int var, const char* suffix) {
  return "x" + std::to_string(var) + "_" + suffix;
}
std::string ll(int i, const char* suffix) {
  return "l" + std::to_string(i) + "_" + suffix;
}
std::string cl(int k) { return "c" + std::to_string(k); }

}  // namespace

ReductionOutput build_gphi_unweighted(const CnfFormula& f) {
  Layout lay = analyze(f);
  ReductionOutput out;
  out.target = TargetKind::DominatingSet;
  out.n = lay.n;
  out.t = lay.t;
  out.m = lay.m;
  out.budget = Rat(lay.n + lay.t);
  LabeledGraph& g = out.graph;

  std::map<int, int> xt, xf;  // original var index -> vertex id
  for (int v : lay.vars) {
    int a = g.add_vertex(xl(v, "T"));
    int b = g.add_vertex(xl(v, "F"));
    int e = g.add_vertex(xl(v, "ear"));
    g.add_edge(a, b);
    g.add_edge(a, e);
    g.add_edge(b, e);
    xt[v] = a;
    xf[v] = b;
  }
  std::vector<int> c_ids;
  for (int k = 1; k <= lay.m; ++k) c_ids.push_back(g.add_vertex(cl(k)));
  std::vector<int> l1_ids;
  for (int i = 1; i <= lay.t; ++i) {
    const LitOcc& lit = lay.lits[i - 1];
    int l1 = g.add_vertex(ll(i, "1"));
    int l2 = g.add_vertex(ll(i, "2"));
    int l3 = g.add_vertex(ll(i, "3"));
    int ear = g.add_vertex(ll(i, "ear"));
    g.add_edge(l1, l2);
    g.add_edge(l2, l3);
    g.add_edge(ear, l2);
    g.add_edge(ear, l3);
    g.add_edge(c_ids[lit.clause], l3);
    g.add_edge(lit.positive ? xt[lit.var] : xf[lit.var], l1);
    l1_ids.push_back(l1);
  }
  for (std::size_t i = 0; i < l1_ids.size(); ++i)
    for (std::size_t j = i + 1; j < l1_ids.size(); ++j)
      g.add_edge(l1_ids[i], l1_ids[j]);

  if (g.size() != 3 * lay.n + 4 * lay.t + lay.m)
    throw std::logic_error("unweighted gadget graph has the wrong order");
  return out;
}

ReductionOutput build_gphi_weighted(const CnfFormula& f) {
  Layout lay = analyze(f);
  ReductionOutput out;
  out.target = TargetKind::WeightedDominatingSet;
  out.n = lay.n;
  out.t = lay.t;
  out.m = lay.m;
  out.budget = Rat(lay.n + lay.t);
  LabeledGraph& g = out.graph;

  auto clique = [&](const std::vector<int>& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        g.add_edge(ids[i], ids[j]);
  };

  std::vector<int> c1, c2, c3, c4, c5, c6, c7;
  std::map<int, int> x1, x2t, x2f;
  for (int v : lay.vars) {
    x1[v] = g.add_vertex(xl(v, "1"), Weight::inf());
    c1.push_back(x1[v]);
    x2t[v] = g.add_vertex(xl(v, "2T"), Weight::one());
    x2f[v] = g.add_vertex(xl(v, "2F"), Weight::one());
    c2.push_back(x2t[v]);
    c2.push_back(x2f[v]);
  }
  std::vector<int> l3(lay.t), l4(lay.t), l5(lay.t), l6(lay.t);
  for (int i = 1; i <= lay.t; ++i) {
    l3[i - 1] = g.add_vertex(ll(i, "3"), Weight::inf());
    l4[i - 1] = g.add_vertex(ll(i, "4"), Weight::one());
    l5[i - 1] = g.add_vertex(ll(i, "5"), Weight::inf());
    l6[i - 1] = g.add_vertex(ll(i, "6"), Weight::one());
    c3.push_back(l3[i - 1]);
    c4.push_back(l4[i - 1]);
    c5.push_back(l5[i - 1]);
    c6.push_back(l6[i - 1]);
  }
  int d4 = g.add_vertex("d4", Weight::finite(Rat(0)));
  int d6 = g.add_vertex("d6", Weight::finite(Rat(0)));
  c4.push_back(d4);
  c6.push_back(d6);
  std::vector<int> ck(lay.m);
  for (int k = 1; k <= lay.m; ++k) {
    ck[k - 1] = g.add_vertex(cl(k) + "_7", Weight::inf());
    c7.push_back(ck[k - 1]);
  }
  for (const auto& ids : {c1, c2, c3, c4, c5, c6, c7}) clique(ids);

  for (int v : lay.vars) {
    g.add_edge(x1[v], x2t[v]);
    g.add_edge(x1[v], x2f[v]);
  }
  for (int i = 1; i <= lay.t; ++i) {
    const LitOcc& lit = lay.lits[i - 1];
    g.add_edge(lit.positive ? x2t[lit.var] : x2f[lit.var], l3[i - 1]);
    g.add_edge(l3[i - 1], l4[i - 1]);
    g.add_edge(l4[i - 1], l5[i - 1]);
    g.add_edge(l5[i - 1], l6[i - 1]);
    g.add_edge(ck[lit.clause], l6[i - 1]);
  }

  if (g.size() != 3 * lay.n + 4 * lay.t + lay.m + 2)
    throw std::logic_error("weighted gadget graph has the wrong order");
  return out;
}

ReductionOutput build_split_double_cover(const LabeledGraph& g,
                                         std::optional<Rat> budget) {
  g.require_unique_labels();
  ReductionOutput out;
  out.target = TargetKind::DominatingSet;
  out.budget = budget;
  out.n = g.size();
  LabeledGraph& gp = out.graph;
  int n = g.size();
  std::vector<int> a(n), b(n);
  for (int i = 0; i < n; ++i)
    a[i] = gp.add_vertex("a_" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) {
    b[i] = gp.add_vertex("b_" + std::to_string(i + 1));
    out.terminals.push_back(gp.vertices[b[i]].label);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) gp.add_edge(a[i], a[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j || g.has_edge(i, j)) gp.add_edge(a[i], b[j]);
  if (gp.size() != 2 * n)
    throw std::logic_error("split double cover has the wrong order");
  return out;
}

// ---------------------------------------------------------------------------
// 3D realization of the unweighted gadget graph
// ---------------------------------------------------------------------------

Scene realize_unweighted_3d(const CnfFormula& f) {
  Layout lay = analyze(f);
  ReductionOutput red = build_gphi_unweighted(f);

  Rat three_n_plus_1 = Rat(3 * lay.n + 1);
  Rat spaced_t = Rat(11, 10) * lay.t;
  Rat N = std::max(three_n_plus_1, spaced_t);
  Rat h = 20 * N * N;

  Scene s;
  s.dimension = 3;
  s.expected = red.graph;
  s.params["h"] = h;
  s.params["N"] = N;
  s.params["n"] = Rat(lay.n);
  s.params["t"] = Rat(lay.t);
  s.params["m"] = Rat(lay.m);
  s.params["k"] = *red.budget;

  Rat half(1, 2), spacing(11, 10);
  Rat ear_rsq(1, 400);
  auto ball3 = [&](std::string label, Rat x, Rat y, Rat z, Rat rsq) {
    Ball b;
    b.label = std::move(label);
    b.center = {Coord::of(x), Coord::of(y), Coord::of(z)};
    b.radius_sq = std::move(rsq);
    s.balls.push_back(std::move(b));
  };

  // Variable gadgets ride the upper line at height h: truth balls touch it
  // at (0, 3p, h) and (0, 3p+1, h), the ear sits at their touching point.
  for (int v : lay.vars) {
    int p = lay.var_pos[v];
    ball3(xl(v, "T"), Rat(0), Rat(3 * p), h + half, Rat(1, 4));
    ball3(xl(v, "F"), Rat(0), Rat(3 * p + 1), h + half, Rat(1, 4));
    ball3(xl(v, "ear"), Rat(0), Rat(3 * p) + half, h + half, ear_rsq);
  }
  // Clause balls below the x-axis at the clause's literal window.
  for (int k = 1; k <= lay.m; ++k) {
    auto [first, size] = lay.clause_span[k - 1];
    Rat istar = size == 2 ? Rat(first) + half : Rat(first + 1);
    ball3(cl(k), istar * spacing, Rat(0), Rat(-2), Rat(81, 100));
  }
  // Literal gadgets: l2/l3 hang under the x-axis, the l1 ball is the unique
  // ball tangent to the x-axis at the gadget base and to the upper line at
  // its variable's truth point.
  for (int i = 1; i <= lay.t; ++i) {
    const LitOcc& lit = lay.lits[i - 1];
    Rat xi = Rat(i) * spacing;
    ball3(ll(i, "2"), xi, Rat(0), -half, Rat(1, 4));
    ball3(ll(i, "3"), xi, Rat(0), Rat(-3, 2), Rat(1, 4));
    ball3(ll(i, "ear"), xi, Rat(0), Rat(-1), ear_rsq);
    Rat y = Rat(3 * lit.var_pos + (lit.positive ? 0 : 1));
    Ball l1 = tangent_ball_skew_lines(xi, y, h);
    l1.label = ll(i, "1");
    s.balls.push_back(std::move(l1));
  }

  if (s.balls.size() != static_cast<std::size_t>(3 * lay.n + 4 * lay.t + lay.m))
    throw std::logic_error("unweighted scene has the wrong ball count");
  RealizationReport rep = verify_realization(s);
  if (!rep.matches) throw RealizationError(std::move(rep));
  return s;
}

// ---------------------------------------------------------------------------
// Unit-ball realization of the weighted gadget graph
// ---------------------------------------------------------------------------

WeightedUnitParams WeightedUnitParams::certified(int n, int t) {
  WeightedUnitParams p;
  n = std::max(n, 1);
  t = std::max(t, 1);
  p.eps = Rat(1) / (Rat(64) * t * n * n);
  p.angle_scale = std::min(Rat(1, 4 * n), Rat(1, 2 * t));
  p.contact_margin = Rat(0);
  return p;
}

WeightedUnitParams WeightedUnitParams::paper(int n, int t) {
  WeightedUnitParams p;
  n = std::max(n, 1);
  t = std::max(t, 1);
  p.eps = Rat(1) / (Rat(3) * t * n * n);
  p.angle_scale = Rat(1, 2 * n);
  p.contact_margin = Rat(0);
  return p;
}

namespace {

Pt2 half_angle_point(const Rat& u) {
  Rat u2 = u * u;
  return {(1 - u2) / (1 + u2), 2 * u / (1 + u2)};
}

}  // namespace

Scene realize_weighted_unit(const CnfFormula& f,
                            std::optional<WeightedUnitParams> params) {
  Layout lay = analyze(f);
  ReductionOutput red = build_gphi_weighted(f);
  WeightedUnitParams prm =
      params ? *params : WeightedUnitParams::certified(lay.n, lay.t);
  const Rat& eps = prm.eps;
  if (sgn(eps) <= 0) throw std::invalid_argument("eps must be positive");
  if (sgn(prm.contact_margin) < 0 || prm.contact_margin + eps * eps >= 1)
    throw std::invalid_argument("contact margin out of range");

  Scene s;
  s.dimension = 3;
  s.expected = red.graph;
  s.params["eps"] = eps;
  s.params["angle_scale"] = prm.angle_scale;
  s.params["contact_margin"] = prm.contact_margin;
  s.params["n"] = Rat(lay.n);
  s.params["t"] = Rat(lay.t);
  s.params["m"] = Rat(lay.m);
  s.params["k"] = *red.budget;

  Rat quarter(1, 4);
  auto rational_ball = [&](std::string label, Rat x, Rat y, Rat z) {
    Ball b;
    b.label = std::move(label);
    b.center = {Coord::of(x), Coord::of(y), Coord::of(z)};
    b.radius_sq = quarter;
    s.balls.push_back(std::move(b));
  };
  // Columns at angle pi carry the single square-root coordinate
  // x = -sqrt(radial_sq); all such coordinates share the x-axis.
  auto radical_ball = [&](std::string label, Rat radial_sq, Rat z) {
    Ball b;
    b.label = std::move(label);
    b.center = {Coord::pure_sqrt(Rat(-1), radial_sq), Coord::of(Rat(0)),
                Coord::of(z)};
    b.radius_sq = quarter;
    s.balls.push_back(std::move(b));
  };

  // C2 on the axis near z = 0, C1 at angle pi tangent to its two truth
  // balls (z offset eps/2 each, radial sqrt(1 - eps^2/4)).
  for (int v : lay.vars) {
    int p = lay.var_pos[v];
    rational_ball(xl(v, "2T"), Rat(0), Rat(0), Rat(2 * p - 1) * eps);
    rational_ball(xl(v, "2F"), Rat(0), Rat(0), Rat(2 * p) * eps);
    radical_ball(xl(v, "1"),
                 1 - eps * eps / 4 - prm.contact_margin,
                 (Rat(2 * p) - Rat(1, 2)) * eps);
  }
  // Literal columns on the unit cylinder at rationalized angles
  // u_i = angle_scale * i.
  for (int i = 1; i <= lay.t; ++i) {
    const LitOcc& lit = lay.lits[i - 1];
    Pt2 pt = half_angle_point(prm.angle_scale * i);
    Rat zvar = Rat(lit.positive ? 2 * lit.var_pos - 1 : 2 * lit.var_pos) * eps;
    rational_ball(ll(i, "3"), pt.x, pt.y, zvar);
    rational_ball(ll(i, "4"), pt.x, pt.y, Rat(1));
    rational_ball(ll(i, "5"), pt.x, pt.y, 2 - Rat(i) * eps);
    rational_ball(ll(i, "6"), Rat(0), Rat(0), 2 - Rat(i) * eps);
  }
  // Clause balls at angle pi, tangent to the first and last literal of the
  // clause in C6.
  for (int k = 1; k <= lay.m; ++k) {
    auto [first, size] = lay.clause_span[k - 1];
    if (size == 3) {
      Rat z = 2 - Rat(first + 1) * eps;
      radical_ball(cl(k) + "_7", 1 - eps * eps - prm.contact_margin, z);
    } else {
      Rat mid = Rat(first) + Rat(1, 2);
      Rat z = prm.printed_two_clause_z ? Rat(-mid * eps) : Rat(2 - mid * eps);
      radical_ball(cl(k) + "_7", 1 - eps * eps / 4 - prm.contact_margin, z);
    }
  }
  // Dummies: d4 floats outside the cylinder at the middle of the literal
  // angle range, meeting exactly the C4 layer; d6 sits above the C6 column.
  {
    Rat w = prm.angle_scale * (1 + lay.t) / 2;
    Pt2 pw = half_angle_point(w);
    rational_ball("d4", Rat(3, 2) * pw.x, Rat(3, 2) * pw.y, Rat(1));
    rational_ball("d6", Rat(0), Rat(0), Rat(5, 2));
  }

  if (s.balls.size() !=
      static_cast<std::size_t>(3 * lay.n + 4 * lay.t + lay.m + 2))
    throw std::logic_error("weighted scene has the wrong ball count");
  RealizationReport rep = verify_realization(s);
  if (!rep.matches) throw RealizationError(std::move(rep));
  return s;
}

// ---------------------------------------------------------------------------
// Planar realization of the split double cover
// ---------------------------------------------------------------------------

Scene realize_split_planar(const LabeledGraph& g, const Rat& eps) {
  int n = g.size();
  if (n < 3)
    throw std::invalid_argument("planar split realization needs >= 3 vertices");
  if (sgn(eps) <= 0 || eps >= 1)
    throw std::invalid_argument("eps must lie in (0,1)");
  ReductionOutput red = build_split_double_cover(g);

  Scene s;
  s.dimension = 2;
  s.expected = red.graph;
  s.params["epsilon"] = eps;
  s.params["n"] = Rat(n);

  // Near-equally spaced rational points around the unit circle: uniform
  // tangent-half-angle parameters over the right half, mirrored for the
  // left half. Angular gaps stay within a factor two of 2*pi/n.
  for (int j = 0; j < n; ++j) {
    if (2 * j < n) {
      s.circle_points.push_back(half_angle_point(rat(4 * j - n, n)));
    } else {
      Pt2 p = half_angle_point(rat(3 * n - 4 * j, n));
      s.circle_points.push_back({-p.x, p.y});
    }
  }

  Rat disk_r = Rat(1, n);
  Rat lift = 1 + disk_r;
  for (int i = 0; i < n; ++i) {
    const Pt2& p = s.circle_points[i];
    s.objects.push_back(PlanarObject::disk("b_" + std::to_string(i + 1),
                                           {lift * p.x, lift * p.y}, disk_r));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> gens;
    for (int j = 0; j < n; ++j)
      if (i == j || g.has_edge(i, j)) gens.push_back(j);
    s.objects.push_back(
        PlanarObject::hull("a_" + std::to_string(i + 1), 1 - eps, gens));
  }

  RealizationReport rep = verify_realization(s);
  if (!rep.matches) throw RealizationError(std::move(rep));
  return s;
}

}  // namespace dsg
