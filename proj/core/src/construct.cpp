#include "strebel/construct.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace strebel {

const char* to_string(ThreePoleClass cls) {
  switch (cls) {
    case ThreePoleClass::Theta: return "Theta";
    case ThreePoleClass::Tangent: return "Tangent";
    case ThreePoleClass::Dumbbell: return "Dumbbell";
  }
  return "?";
}

namespace {

// Mutable rotation-system under construction. Rotations are counterclockwise
// lists per vertex; faces are never stored, they are walked on demand via
// phi = sigma∘alpha. Surgery never deletes a half-edge, so handles obtained
// earlier stay valid across splits and attachments.
class Builder {
 public:
  Builder() = default;

  static Builder from(const MetricRibbonGraph& mg) {
    require_metric(mg);
    Builder b;
    const int n = mg.graph.half_edge_count;
    b.count_ = n;
    b.twin_ = mg.graph.alpha;
    b.at_.assign(n, -1);
    b.len_.assign(n, Rational(0));
    const auto edge_of = edge_index_by_halfedge(mg.graph);
    for (int h = 0; h < n; ++h) b.len_[h] = mg.lengths[edge_of[h]];
    for (const auto& cycle : vertex_cycles(mg.graph)) {
      const int v = b.add_vertex();
      for (int h : cycle) {
        b.rot_[v].push_back(h);
        b.at_[h] = v;
      }
    }
    return b;
  }

  int add_vertex() {
    rot_.emplace_back();
    return static_cast<int>(rot_.size()) - 1;
  }

  std::pair<int, int> add_edge(const Rational& len) {
    if (len <= 0) throw std::logic_error("surgery produced a non-positive edge length");
    const int h = alloc();
    const int t = alloc();
    twin_[h] = t;
    twin_[t] = h;
    len_[h] = len;
    len_[t] = len;
    return {h, t};
  }

  void place(int v, int h) {
    rot_[v].push_back(h);
    at_[h] = v;
  }

  void place_after(int v, int after, int h) {
    auto& r = rot_[v];
    auto it = std::find(r.begin(), r.end(), after);
    if (it == r.end()) throw std::logic_error("place_after: anchor half-edge not at vertex");
    r.insert(it + 1, h);
    at_[h] = v;
  }

  int twin(int h) const { return twin_[h]; }
  const Rational& length(int h) const { return len_[h]; }

  int next_at_vertex(int h) const {
    const auto& r = rot_[at_[h]];
    const auto it = std::find(r.begin(), r.end(), h);
    return r[(static_cast<size_t>(it - r.begin()) + 1) % r.size()];
  }

  int phi(int h) const { return next_at_vertex(twin_[h]); }

  std::vector<int> face_walk(int start) const {
    std::vector<int> walk;
    int h = start;
    do {
      walk.push_back(h);
      h = phi(h);
    } while (h != start);
    return walk;
  }

  Rational face_perimeter(int start) const {
    Rational total = 0;
    for (int h : face_walk(start)) total += len_[h];
    return total;
  }

  // All face perimeters, cycles of phi by ascending smallest half-edge.
  std::vector<Rational> perimeters() const {
    std::vector<char> seen(count_, 0);
    std::vector<Rational> out;
    for (int h = 0; h < count_; ++h) {
      if (seen[h]) continue;
      Rational total = 0;
      int cur = h;
      do {
        seen[cur] = 1;
        total += len_[cur];
        cur = phi(cur);
      } while (cur != h);
      out.push_back(total);
    }
    return out;
  }

  struct Split {
    int w, j, k;
  };

  // Split the edge of h at distance d from the tail of h: the piece keeping
  // h has length d, the new valency-2 vertex w carries rotation (j, k) with
  // alpha pairs {h, j} and {k, old twin}. Faces are preserved.
  Split split_edge(int h, const Rational& d) {
    const Rational total = len_[h];
    if (d <= 0 || d >= total) throw std::logic_error("split distance outside the edge");
    const int t = twin_[h];
    const int w = add_vertex();
    const int j = alloc();
    const int k = alloc();
    twin_[h] = j;
    twin_[j] = h;
    twin_[k] = t;
    twin_[t] = k;
    len_[h] = d;
    len_[j] = d;
    len_[k] = total - d;
    len_[t] = total - d;
    place(w, j);
    place(w, k);
    return {w, j, k};
  }

  // Split the face containing h_start at walk distance dist from the tail
  // of h_start. Fails (nullopt) when dist lands on a vertex or beyond the
  // perimeter, leaving the builder untouched.
  std::optional<Split> split_on_walk(int h_start, const Rational& dist) {
    Rational acc = 0;
    for (int h : face_walk(h_start)) {
      const Rational next = acc + len_[h];
      if (dist < next) {
        const Rational offset = dist - acc;
        if (offset <= 0) return std::nullopt;
        return split_edge(h, offset);
      }
      acc = next;
    }
    return std::nullopt;
  }

  struct Pendant {
    int solo_rep;  // half-edge whose face is the inside of the new loop
  };

  // Hang a loop through a connector into the face of h_target: split the
  // target edge at half length, insert the connector stub between the two
  // pieces (so it points into that face), and give the new loop vertex the
  // rotation (loop, loop, stub). The target face gains loop + 2*connector.
  Pendant attach_pendant_loop(int h_target, const Rational& conn_len, const Rational& loop_len) {
    const Split sp = split_edge(h_target, len_[h_target] / 2);
    const auto [s, sb] = add_edge(conn_len);
    place_after(sp.w, sp.j, s);
    const int v = add_vertex();
    const auto [a, b] = add_edge(loop_len);
    place(v, a);
    place(v, b);
    place(v, sb);
    return {b};
  }

  struct Chord {
    int rep_near;  // face: walk arc between the two cuts, plus the chord
    int rep_far;   // face: remaining arc plus the chord
  };

  // Cut the face of h_start at walk distances d1 < d2 and join the cuts by
  // a chord, splitting the face in two.
  Chord attach_chord(int h_start, const Rational& d1, const Rational& d2, const Rational& chord_len) {
    const auto s1 = split_on_walk(h_start, d1);
    if (!s1) throw std::logic_error("chord cut 1 landed on a vertex");
    const auto s2 = split_on_walk(h_start, d2);
    if (!s2) throw std::logic_error("chord cut 2 landed on a vertex");
    const auto [c, cb] = add_edge(chord_len);
    place_after(s1->w, s1->j, c);
    place_after(s2->w, s2->j, cb);
    return {cb, c};
  }

  MetricRibbonGraph finish() const {
    MetricRibbonGraph mg;
    mg.graph.half_edge_count = count_;
    mg.graph.alpha = twin_;
    mg.graph.sigma.assign(count_, -1);
    for (const auto& r : rot_) {
      for (size_t i = 0; i < r.size(); ++i) mg.graph.sigma[r[i]] = r[(i + 1) % r.size()];
    }
    require_valid(mg.graph);
    const auto edges = edge_list(mg.graph);
    mg.lengths.reserve(edges.size());
    for (const auto& [h, t] : edges) mg.lengths.push_back(len_[h]);
    return mg;
  }

 private:
  int alloc() {
    twin_.push_back(-1);
    at_.push_back(-1);
    len_.emplace_back(0);
    return count_++;
  }

  int count_ = 0;
  std::vector<int> twin_;
  std::vector<int> at_;
  std::vector<Rational> len_;
  std::vector<std::vector<int>> rot_;
};

struct BaseReps {
  int d_rep;  // face of perimeter x - 2*eps, the disc the chain grows into
  int y_rep;
  int z_rep;
};

// Planar theta on perimeters (x - 2eps applied to the x-face only): mirror
// rotations at the two vertices keep the other two faces at exactly y and z.
BaseReps theta_base(Builder& b, const Rational& x, const Rational& y, const Rational& z, const Rational& eps) {
  const Rational e0 = (x + y - z) / 2 - eps;
  const Rational e1 = (x + z - y) / 2 - eps;
  const Rational e2 = (y + z - x) / 2 + eps;
  const int u = b.add_vertex();
  const int v = b.add_vertex();
  const auto [h0, h1] = b.add_edge(e0);
  const auto [h2, h3] = b.add_edge(e1);
  const auto [h4, h5] = b.add_edge(e2);
  b.place(u, h0);
  b.place(u, h2);
  b.place(u, h4);
  b.place(v, h1);
  b.place(v, h5);
  b.place(v, h3);
  return {h1, h0, h3};  // faces (h1 h2) = x-2eps, (h0 h5) = y, (h3 h4) = z
}

// Two loops joined by a bridge. Covers both the x+y < z graph and, with
// bridge length eps, the broken-up valency-4 graph of the x+y = z case.
BaseReps dumbbell_base(Builder& b, const Rational& x, const Rational& y, const Rational& z, const Rational& eps) {
  const Rational bridge = (z - x - y) / 2 + eps;
  const int u = b.add_vertex();
  const int v = b.add_vertex();
  const auto [h0, h1] = b.add_edge(x - 2 * eps);  // loop at u
  const auto [h2, h3] = b.add_edge(y);            // loop at v
  const auto [h4, h5] = b.add_edge(bridge);
  b.place(u, h0);
  b.place(u, h1);
  b.place(u, h4);
  b.place(v, h2);
  b.place(v, h3);
  b.place(v, h5);
  return {h1, h3, h0};  // solo faces (h1) = x-2eps and (h3) = y, outer = z
}

// Relabel half-edges so that face ids follow the caller's label order: the
// walk of label 0 gets ids 0.., then label 1, and so on. Afterwards the
// face-relabeling map demanded by the metric layer is the identity.
MetricRibbonGraph canonicalize_faces(const MetricRibbonGraph& mg, const std::vector<int>& rep_by_label) {
  const auto faces = face_cycles(mg.graph);
  if (rep_by_label.size() != faces.size()) throw std::logic_error("face label count differs from face count");
  std::vector<int> face_of(mg.graph.half_edge_count, -1);
  for (const auto& f : faces)
    for (int h : f.walk) face_of[h] = f.face_id;

  std::vector<int> perm(mg.graph.half_edge_count, -1);
  std::vector<char> used(faces.size(), 0);
  int next = 0;
  for (int rep : rep_by_label) {
    const int f = face_of.at(rep);
    if (used[f]) throw std::logic_error("two labels map to one face");
    used[f] = 1;
    const auto& walk = faces[f].walk;
    const auto at = std::find(walk.begin(), walk.end(), rep);
    for (size_t i = 0; i < walk.size(); ++i) perm[walk[(static_cast<size_t>(at - walk.begin()) + i) % walk.size()]] = next++;
  }
  if (next != mg.graph.half_edge_count) throw std::logic_error("face labels do not cover the graph");
  return relabel_metric(mg, perm);
}

std::vector<size_t> ascending_order(const std::vector<Rational>& values) {
  std::vector<size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return values[a] < values[b]; });
  return order;
}

std::string order_string(const std::vector<size_t>& order) {
  std::ostringstream os;
  for (size_t i = 0; i < order.size(); ++i) os << (i ? "," : "") << order[i];
  return os.str();
}

void require_positive_residues(const std::vector<Rational>& alpha) {
  for (const auto& a : alpha)
    if (a <= 0) throw std::invalid_argument("residues must be positive");
}

SurgeryStep snapshot(const Builder& b, std::string name, std::vector<std::pair<std::string, std::string>> params) {
  SurgeryStep step;
  step.name = std::move(name);
  step.params = std::move(params);
  step.residues = b.perimeters();
  return step;
}

void check_build_postconditions(const MetricRibbonGraph& mg, const std::vector<Rational>& alpha, int expected_genus) {
  const auto report = strebel_admissible(mg);
  if (!report.admissible) throw std::logic_error("constructed graph not admissible");
  const auto rv = residue_vector(mg);
  if (rv.genus != expected_genus) throw std::logic_error("constructed graph has wrong genus");
  if (rv.entries != alpha) throw std::logic_error("constructed graph has wrong residue vector");
}

}  // namespace

ThreePoleResult build_three_pole(const Rational& a1, const Rational& a2, const Rational& a3) {
  const std::vector<Rational> alpha{a1, a2, a3};
  require_positive_residues(alpha);
  const auto order = ascending_order(alpha);
  const Rational x = alpha[order[0]], y = alpha[order[1]], z = alpha[order[2]];

  ThreePoleResult result;
  result.trace.steps.push_back({"sort", {{"order", order_string(order)}}, {x, y, z}});

  Builder b;
  std::vector<int> rep_sorted(3, -1);
  const Rational gap = x + y - z;
  if (gap > 0) {
    result.cls = ThreePoleClass::Theta;
    const BaseReps reps = theta_base(b, x, y, z, Rational(0));
    rep_sorted = {reps.d_rep, reps.y_rep, reps.z_rep};
  } else if (gap == 0) {
    result.cls = ThreePoleClass::Tangent;
    // One valency-4 vertex, two loops; the outer face has perimeter x + y = z.
    const int v = b.add_vertex();
    const auto [h0, h1] = b.add_edge(x);
    const auto [h2, h3] = b.add_edge(y);
    b.place(v, h0);
    b.place(v, h1);
    b.place(v, h2);
    b.place(v, h3);
    rep_sorted = {h1, h3, h0};  // solo faces (h1), (h3); outer (h0 h2)
  } else {
    result.cls = ThreePoleClass::Dumbbell;
    const BaseReps reps = dumbbell_base(b, x, y, z, Rational(0));
    rep_sorted = {reps.d_rep, reps.y_rep, reps.z_rep};
  }
  result.trace.steps.push_back(snapshot(b, to_string(result.cls), {}));

  std::vector<int> rep_by_label(3, -1);
  for (int p = 0; p < 3; ++p) rep_by_label[order[p]] = rep_sorted[p];
  result.graph = canonicalize_faces(b.finish(), rep_by_label);

  const auto rv = residue_vector(result.graph);
  if (rv.entries != alpha) throw std::logic_error("three-pole graph has wrong residue vector");
  result.trace.steps.push_back({"relabel-faces", {}, rv.entries});
  return result;
}

BuildResult build_sphere_simple(const std::vector<Rational>& alpha) {
  const int n = static_cast<int>(alpha.size());
  if (n < 3) throw std::invalid_argument("sphere construction needs at least 3 residues");
  require_positive_residues(alpha);
  const auto order = ascending_order(alpha);
  std::vector<Rational> a(n);
  for (int p = 0; p < n; ++p) a[p] = alpha[order[p]];

  if (n == 3) {
    if (a[0] + a[1] == a[2])
      throw std::invalid_argument("excluded case (0,3) with a1+a2=a3: no trivalent realization");
    auto three = build_three_pole(alpha[0], alpha[1], alpha[2]);
    return {std::move(three.graph), std::move(three.trace)};
  }

  BuildResult result;
  result.trace.steps.push_back({"sort", {{"order", order_string(order)}}, a});

  // Boundary lengths of the nested circles. With a tie a[0] == a[1] the
  // innermost circle is cut by a chord into two cells instead, and every
  // second length carries a -2*delta correction to stay positive.
  const bool tie = (a[0] == a[1]);
  std::vector<Rational> l(n - 2);
  Rational delta = 0;
  if (!tie) {
    l[0] = a[0];
    for (int i = 1; i <= n - 3; ++i) l[i] = a[i] - l[i - 1];
  } else {
    std::vector<Rational> l0(n - 2);
    l0[1] = a[1];
    for (int i = 2; i <= n - 3; ++i) l0[i] = a[i] - l0[i - 1];
    Rational slack = l0[1];
    for (int i = 3; i <= n - 3; i += 2) slack = std::min(slack, l0[i]);
    delta = slack / 4;
    l[1] = a[1] - 2 * delta;
    for (int i = 2; i <= n - 3; ++i) l[i] = a[i] - l[i - 1];
    result.trace.steps.push_back({"split-tie", {{"delta", fraction_string(delta)}}, {}});
  }
  for (int i = tie ? 1 : 0; i <= n - 3; ++i)
    if (l[i] <= 0) throw std::logic_error("circle length schedule went non-positive");

  const Rational x = l[n - 3], y = a[n - 2], z = a[n - 1];
  const bool theta_shape = (x + y > z);
  Rational eps_bound = theta_shape ? std::min(Rational((x + y - z) / 2), Rational((x + z - y) / 2))
                                   : Rational(x / 2);
  if (tie && n == 4) eps_bound = std::min(eps_bound, Rational(a[0] / 2 - delta));
  const Rational eps = eps_bound / 4;
  if (eps <= 0) throw std::logic_error("no room for the vertex-breaking parameter");

  Builder b;
  const BaseReps base = theta_shape ? theta_base(b, x, y, z, eps) : dumbbell_base(b, x, y, z, eps);
  result.trace.steps.push_back(snapshot(b, theta_shape ? "base-theta" : "base-dumbbell",
                                        {{"x", fraction_string(x)},
                                         {"y", fraction_string(y)},
                                         {"z", fraction_string(z)},
                                         {"eps", fraction_string(eps)}}));

  std::vector<int> rep_sorted(n, -1);
  rep_sorted[n - 2] = base.y_rep;
  rep_sorted[n - 1] = base.z_rep;

  // Shrink per circle; the innermost circle of the no-tie case keeps its
  // length so the loop face alone realizes a[0].
  const int lowest = tie ? 1 : 0;
  std::vector<Rational> mu(std::max(n - 3, 1), Rational(0));
  for (int i = std::max(lowest, 1); i <= n - 4; ++i) mu[i] = l[i] / 8;

  int target = base.d_rep;
  for (int i = n - 4; i >= lowest; --i) {
    const Rational conn = (i == n - 4) ? mu[i] + eps : mu[i] + mu[i + 1];
    const Rational circle = l[i] - 2 * mu[i];
    const auto pendant = b.attach_pendant_loop(target, conn, circle);
    rep_sorted[i + 1] = target;
    target = pendant.solo_rep;
    result.trace.steps.push_back(snapshot(
        b, "attach-circle",
        {{"index", std::to_string(i)}, {"circle", fraction_string(circle)}, {"connector", fraction_string(conn)}}));
  }

  if (!tie) {
    rep_sorted[0] = target;
  } else {
    // Chord across the innermost cell: both sides come out at exactly a[0].
    const Rational perimeter = b.face_perimeter(target);
    const Rational chord = a[0] - perimeter / 2;
    if (chord <= 0) throw std::logic_error("chord length went non-positive");
    const std::vector<std::pair<int, int>> fracs{{1, 4}, {1, 6},  {1, 5},  {3, 16}, {5, 16}, {7, 32},
                                                 {9, 32}, {3, 8}, {5, 32}, {2, 7},  {3, 10}, {5, 14}};
    std::optional<Builder::Chord> cut;
    for (const auto& [num, den] : fracs) {
      const Rational d1 = perimeter * num / den;
      const Rational d2 = d1 + perimeter / 2;
      // Probe both landing spots before mutating.
      Rational acc = 0;
      bool clean = true;
      for (int h : b.face_walk(target)) {
        acc += b.length(h);
        if (acc == d1 || acc == d2) {
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      cut = b.attach_chord(target, d1, d2, chord);
      break;
    }
    if (!cut) throw std::logic_error("no clean chord position found");
    rep_sorted[0] = cut->rep_near;
    rep_sorted[1] = cut->rep_far;
    result.trace.steps.push_back(snapshot(b, "attach-chord", {{"chord", fraction_string(chord)}}));
  }

  std::vector<int> rep_by_label(n, -1);
  for (int p = 0; p < n; ++p) rep_by_label[order[p]] = rep_sorted[p];
  result.graph = canonicalize_faces(b.finish(), rep_by_label);

  check_build_postconditions(result.graph, alpha, 0);
  result.trace.steps.push_back({"relabel-faces", {}, residue_vector(result.graph).entries});
  return result;
}

BuildResult build_torus_gadget(const std::vector<Rational>& perimeters) {
  require_positive_residues(perimeters);
  BuildResult result;
  Builder b;
  std::vector<int> rep_by_label;

  if (perimeters.size() == 1) {
    // Two trivalent vertices with equal rotations: one face that traverses
    // each of the three edges twice.
    const Rational edge = perimeters[0] / 6;
    const int u = b.add_vertex();
    const int v = b.add_vertex();
    const auto [h0, h1] = b.add_edge(edge);
    const auto [h2, h3] = b.add_edge(edge);
    const auto [h4, h5] = b.add_edge(edge);
    b.place(u, h0);
    b.place(u, h2);
    b.place(u, h4);
    b.place(v, h1);
    b.place(v, h3);
    b.place(v, h5);
    rep_by_label = {h0};
    result.trace.steps.push_back(snapshot(b, "torus-one-face", {{"edge", fraction_string(edge)}}));
  } else if (perimeters.size() == 2) {
    // Two latitude circles A and B joined by two meridian arcs; each face
    // walk is A + B + 2*t_i.
    const Rational r1 = perimeters[0], r2 = perimeters[1];
    const Rational s = std::min(r1, r2) / 2;
    const Rational arc = s / 4;  // half of each latitude
    const Rational t1 = (r1 - s) / 2;
    const Rational t2 = (r2 - s) / 2;
    const int a1 = b.add_vertex();
    const int a2 = b.add_vertex();
    const int b1 = b.add_vertex();
    const int b2 = b.add_vertex();
    const auto [h0, h1] = b.add_edge(arc);    // latitude A, arc 1
    const auto [h2, h3] = b.add_edge(arc);    // latitude A, arc 2
    const auto [h4, h5] = b.add_edge(t1);     // meridian 1
    const auto [h6, h7] = b.add_edge(arc);    // latitude B, arc 1
    const auto [h8, h9] = b.add_edge(arc);    // latitude B, arc 2
    const auto [h10, h11] = b.add_edge(t2);   // meridian 2
    b.place(a1, h0);
    b.place(a1, h4);
    b.place(a1, h3);
    b.place(a2, h2);
    b.place(a2, h1);
    b.place(a2, h11);
    b.place(b1, h6);
    b.place(b1, h9);
    b.place(b1, h5);
    b.place(b2, h8);
    b.place(b2, h10);
    b.place(b2, h7);
    rep_by_label = {h1, h0};  // the face through meridian 1 has perimeter r1
    result.trace.steps.push_back(snapshot(
        b, "torus-two-faces",
        {{"arc", fraction_string(arc)}, {"t1", fraction_string(t1)}, {"t2", fraction_string(t2)}}));
  } else {
    throw std::invalid_argument("torus gadget takes 1 or 2 perimeters");
  }

  result.graph = canonicalize_faces(b.finish(), rep_by_label);
  check_build_postconditions(result.graph, perimeters, 1);
  result.trace.steps.push_back({"relabel-faces", {}, residue_vector(result.graph).entries});
  return result;
}

MetricRibbonGraph bridge_handle(const MetricRibbonGraph& mg, int face_id, const Rational& eta, const Rational& beta) {
  const auto report = strebel_admissible(mg);
  if (!report.admissible) {
    std::string why;
    for (const auto& r : report.reasons) why += (why.empty() ? "" : "; ") + r;
    throw std::invalid_argument("bridge_handle needs an admissible graph: " + why);
  }
  if (eta <= 0 || beta <= 0) throw std::invalid_argument("handle perturbations must be positive");
  const auto faces = face_cycles(mg.graph);
  if (face_id < 0 || face_id >= static_cast<int>(faces.size())) throw std::invalid_argument("face id out of range");

  Builder b = Builder::from(mg);
  const int h_target = faces[face_id].walk.front();
  const auto sp = b.split_edge(h_target, b.length(h_target) / 2);
  const auto [s, sb] = b.add_edge(beta);
  b.place_after(sp.w, sp.j, s);

  // One-face torus gadget of perimeter eta, entered through a split vertex.
  const int u = b.add_vertex();
  const int v = b.add_vertex();
  const auto [p0, p1] = b.add_edge(eta / 6);
  const auto [q0, q1] = b.add_edge(eta / 6);
  const auto [r0, r1] = b.add_edge(eta / 6);
  b.place(u, p0);
  b.place(u, q0);
  b.place(u, r0);
  b.place(v, p1);
  b.place(v, q1);
  b.place(v, r1);
  const auto gate = b.split_edge(p0, b.length(p0) / 2);
  b.place_after(gate.w, gate.j, sb);

  return b.finish();
}

BuildResult build(int genus_target, const std::vector<Rational>& alpha) {
  const int n = static_cast<int>(alpha.size());
  if (genus_target < 0) throw std::invalid_argument("genus must be non-negative");
  if (n < 1) throw std::invalid_argument("at least one residue required");
  require_positive_residues(alpha);
  if (2 - 2 * genus_target - n >= 0)
    throw std::invalid_argument("need 2 - 2g - n < 0");

  if (genus_target == 0) return build_sphere_simple(alpha);

  // Each handle adds eta + 2*beta to the face it is grafted into, so the
  // base prescription starts short by exactly the bridged amount.
  BuildResult result;
  if (n >= 3) {
    Rational unit = alpha[0] / (4 * genus_target + 4);
    std::vector<Rational> shrunk = alpha;
    if (n == 3) {
      for (int attempt = 0; attempt < 4; ++attempt) {
        shrunk[0] = alpha[0] - genus_target * unit;
        auto s = shrunk;
        std::sort(s.begin(), s.end());
        if (s[0] + s[1] != s[2]) break;
        unit /= 2;
      }
    }
    shrunk[0] = alpha[0] - genus_target * unit;
    result = build_sphere_simple(shrunk);
    const Rational eta = unit / 2, beta = unit / 4;
    for (int k = 0; k < genus_target; ++k) {
      result.graph = bridge_handle(result.graph, 0, eta, beta);
      result.trace.steps.push_back({"bridge-handle",
                                    {{"face", "0"}, {"eta", fraction_string(eta)}, {"beta", fraction_string(beta)}},
                                    residue_vector(result.graph).entries});
    }
  } else {
    const Rational unit = alpha[0] / (4 * genus_target + 4);
    const int bridges = genus_target - 1;
    std::vector<Rational> base = alpha;
    base[0] = alpha[0] - bridges * unit;
    result = build_torus_gadget(base);
    const Rational eta = unit / 2, beta = unit / 4;
    for (int k = 0; k < bridges; ++k) {
      result.graph = bridge_handle(result.graph, 0, eta, beta);
      result.trace.steps.push_back({"bridge-handle",
                                    {{"face", "0"}, {"eta", fraction_string(eta)}, {"beta", fraction_string(beta)}},
                                    residue_vector(result.graph).entries});
    }
  }

  check_build_postconditions(result.graph, alpha, genus_target);
  const auto zp = zero_partition(result.graph);
  for (int m : zp.parts)
    if (m != 1) throw std::logic_error("constructed graph is not trivalent");
  return result;
}

}  // namespace strebel
