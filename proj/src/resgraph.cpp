#include "qhd/resgraph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace qhd {

int ResolutionGraph::add_vertex(std::int64_t weight, std::int64_t genus) {
  const int id = static_cast<int>(vertices_.size());
  vertices_.push_back({id, weight, genus});
  return id;
}

void ResolutionGraph::add_edge(int a, int b) {
  const int n = static_cast<int>(vertices_.size());
  if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw std::invalid_argument("add_edge: bad endpoints");
  for (const auto& [x, y] : edges_)
    if ((x == a && y == b) || (x == b && y == a)) throw std::invalid_argument("add_edge: duplicate edge");
  edges_.push_back({std::min(a, b), std::max(a, b)});
}

int ResolutionGraph::add_chain(int anchor, const std::vector<std::int64_t>& ds) {
  int last = anchor;
  for (std::int64_t d : ds) {
    int v = add_vertex(-d);
    if (last >= 0) add_edge(last, v);
    last = v;
  }
  return last;
}

std::vector<int> ResolutionGraph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  return out;
}

bool ResolutionGraph::is_tree() const {
  if (vertices_.empty()) return false;
  if (edges_.size() + 1 != vertices_.size()) return false;
  std::vector<char> seen(size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == size();
}

nlohmann::json ResolutionGraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : vertices_) j["vertices"].push_back({{"id", v.id}, {"weight", v.weight}, {"genus", v.genus}});
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : edges_) j["edges"].push_back({vertices_[a].id, vertices_[b].id});
  return j;
}

ResolutionGraph ResolutionGraph::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j["vertices"].is_array() ||
      !j["edges"].is_array())
    throw std::invalid_argument("graph JSON: expected {\"vertices\": [...], \"edges\": [...]}");
  ResolutionGraph g;
  std::map<std::int64_t, int> index;
  for (const auto& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v.contains("weight") || !v["id"].is_number_integer() ||
        !v["weight"].is_number_integer())
      throw std::invalid_argument("graph JSON: vertex needs integer id and weight");
    std::int64_t genus = 0;
    if (v.contains("genus")) {
      if (!v["genus"].is_number_integer()) throw std::invalid_argument("graph JSON: genus must be an integer");
      genus = v["genus"].get<std::int64_t>();
    }
    const std::int64_t w = v["weight"].get<std::int64_t>();
    if (w > -1) throw std::invalid_argument("graph JSON: weights are self-intersections and must be <= -1");
    if (genus < 0) throw std::invalid_argument("graph JSON: negative genus");
    const std::int64_t id = v["id"].get<std::int64_t>();
    if (index.count(id)) throw std::invalid_argument("graph JSON: duplicate vertex id " + std::to_string(id));
    index[id] = g.add_vertex(w, genus);
    g.vertices_.back().id = static_cast<int>(id);
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::invalid_argument("graph JSON: edges are pairs of vertex ids");
    auto a = index.find(e[0].get<std::int64_t>()), b = index.find(e[1].get<std::int64_t>());
    if (a == index.end() || b == index.end()) throw std::invalid_argument("graph JSON: edge names an unknown vertex");
    g.add_edge(a->second, b->second);
  }
  return g;
}

std::vector<std::int64_t> hj_expand(std::int64_t n, std::int64_t q) {
  if (n < 2 || q <= 0 || q >= n || gcd64(n, q) != 1)
    throw std::invalid_argument("hj_expand: need 0 < q < n with gcd(q, n) = 1, got " + std::to_string(n) + "/" +
                                std::to_string(q));
  std::vector<std::int64_t> a;
  while (q != 0) {
    const std::int64_t c = (n + q - 1) / q;
    a.push_back(c);
    const std::int64_t nq = c * q - n;
    n = q;
    q = nq;
  }
  return a;
}

CyclicQuotientType hj_contract(const std::vector<std::int64_t>& a) {
  if (a.empty()) throw std::invalid_argument("hj_contract: empty chain");
  for (auto x : a)
    if (x < 2) throw std::invalid_argument("hj_contract: entries must be >= 2");
  Integer num = a.back(), den = 1;
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    Integer t = a[k] * num - den;
    den = num;
    num = t;
  }
  if (!num.fits_slong_p()) throw std::overflow_error("hj_contract: result too large");
  return make_quotient_type(num.get_si(), den.get_si());
}

IntMatrix intersection_matrix(const ResolutionGraph& g) {
  IntMatrix m(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = static_cast<long>(g.vertices()[i].weight);
  for (const auto& [a, b] : g.edges()) {
    m(a, b) = 1;
    m(b, a) = 1;
  }
  return m;
}

Integer discriminant(const ResolutionGraph& g) { return abs(determinant(intersection_matrix(g))); }

bool is_negative_definite(const ResolutionGraph& g) {
  IntMatrix m = intersection_matrix(g);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
  for (std::size_t k = 1; k <= m.rows(); ++k)
    if (determinant(m.leading(k)) <= 0) return false;
  return !g.vertices().empty();
}

Rational star_discriminant(std::int64_t d, const std::vector<CyclicQuotientType>& arms) {
  Rational prod = 1, s = d;
  for (const auto& a : arms) {
    prod *= a.n;
    s -= make_rational(a.q, a.n);
  }
  Rational r = prod * s;
  r.canonicalize();
  return r;
}

ResolutionGraph star_graph(std::int64_t d, const std::vector<CyclicQuotientType>& arms, std::int64_t central_genus) {
  ResolutionGraph g;
  const int c = g.add_vertex(-d, central_genus);
  for (const auto& a : arms)
    if (a.n > 1) g.add_chain(c, hj_expand(a.n, a.q));
  return g;
}

std::optional<StarShape> star_shape(const ResolutionGraph& g) {
  if (g.size() == 0 || !g.is_tree()) return std::nullopt;
  StarShape s;
  int branch = 0;
  for (int v = 0; v < static_cast<int>(g.size()); ++v)
    if (g.valency(v) >= 3) {
      ++branch;
      s.center = v;
    }
  if (branch > 1) return std::nullopt;
  s.d = -g.vertices()[s.center].weight;
  for (int first : g.neighbors(s.center)) {
    std::vector<std::int64_t> chain;
    int prev = s.center, cur = first;
    while (true) {
      chain.push_back(-g.vertices()[cur].weight);
      int next = -1;
      for (int w : g.neighbors(cur))
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    for (auto a : chain)
      if (a < 2) return std::nullopt;
    s.arms.push_back(hj_contract(chain));
  }
  return s;
}

std::int64_t solve_central_weight(const std::vector<CyclicQuotientType>& arms, const Integer& target) {
  if (target <= 0) throw std::invalid_argument("solve_central_weight: target must be positive");
  Rational prod = 1, s = 0;
  for (const auto& a : arms) {
    prod *= a.n;
    s += make_rational(a.q, a.n);
  }
  Rational d = Rational(target) / prod + s;
  d.canonicalize();
  if (d.get_den() != 1 || !d.get_num().fits_slong_p())
    throw NoIntegralSolution("solve_central_weight: d = " + to_string(d) + " is not an integer");
  return d.get_num().get_si();
}

Integer DiscriminantGroup::order() const {
  Integer o = 1;
  for (const auto& f : factors) o *= f;
  return o;
}

namespace {

Rational frac(Rational q) {
  q.canonicalize();
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

std::vector<std::vector<Rational>> inverse_of(const ResolutionGraph& g) {
  IntMatrix m = intersection_matrix(g);
  if (determinant(m) == 0) throw std::invalid_argument("intersection matrix is singular");
  return rational_inverse(m);
}

Rational pairing(const std::vector<std::vector<Rational>>& inv, const std::vector<Integer>& x,
                 const std::vector<Integer>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s += Rational(x[i] * y[j]) * inv[i][j];
  }
  return frac(-s);
}

}  // namespace

Rational linking_pairing(const ResolutionGraph& g, const std::vector<Integer>& x, const std::vector<Integer>& y) {
  if (x.size() != g.size() || y.size() != g.size()) throw std::invalid_argument("linking_pairing: size mismatch");
  return pairing(inverse_of(g), x, y);
}

DiscriminantGroup discriminant_group(const ResolutionGraph& g) {
  auto inv = inverse_of(g);
  IntMatrix m = intersection_matrix(g);
  SmithForm s = smith_normal_form(m);
  auto uinv = rational_inverse(s.U);
  DiscriminantGroup dg;
  const std::size_t r = g.size();
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
    Integer f = abs(s.diagonal[i]);
    if (f == 1) continue;
    dg.factors.push_back(f);
    std::vector<Integer> gen(r);
    for (std::size_t k = 0; k < r; ++k) gen[k] = uinv[k][i].get_num();
    dg.generators.push_back(std::move(gen));
  }
  for (const auto& a : dg.generators) {
    std::vector<Rational> row;
    for (const auto& b : dg.generators) row.push_back(pairing(inv, a, b));
    dg.linking.push_back(std::move(row));
  }
  return dg;
}

std::vector<IsotropicSubgroup> enumerate_self_isotropic(const DiscriminantGroup& dg, std::int64_t order,
                                                        std::int64_t max_group_order) {
  const Integer total = dg.order();
  if (total > max_group_order)
    throw CapacityError("isotropic enumeration limited to groups of order <= " + std::to_string(max_group_order));
  const std::int64_t G = total.get_si();
  if (order < 1 || G % order) return {};
  const std::size_t k = dg.factors.size();
  std::vector<std::int64_t> f(k);
  for (std::size_t i = 0; i < k; ++i) f[i] = dg.factors[i].get_si();

  // Pairing values scaled to integers mod N.
  std::int64_t N = 1;
  for (const auto& row : dg.linking)
    for (const auto& q : row) N = lcm64(N, q.get_den().get_si());
  std::vector<std::vector<std::int64_t>> c(k, std::vector<std::int64_t>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational t = dg.linking[i][j] * N;
      c[i][j] = t.get_num().get_si();
    }

  auto coords = [&](std::int64_t idx) {
    std::vector<std::int64_t> a(k);
    for (std::size_t i = 0; i < k; ++i) {
      a[i] = idx % f[i];
      idx /= f[i];
    }
    return a;
  };
  auto index = [&](const std::vector<std::int64_t>& a) {
    std::int64_t idx = 0;
    for (std::size_t i = k; i-- > 0;) idx = idx * f[i] + a[i];
    return idx;
  };
  std::vector<std::vector<std::int64_t>> el(G);
  for (std::int64_t x = 0; x < G; ++x) el[x] = coords(x);
  auto pair_val = [&](std::int64_t x, std::int64_t y) {
    __int128 s = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) s += static_cast<__int128>(el[x][i]) * el[y][j] * c[i][j];
    return static_cast<std::int64_t>(((s % N) + N) % N);
  };
  auto add = [&](std::int64_t x, std::int64_t y) {
    std::vector<std::int64_t> a(k);
    for (std::size_t i = 0; i < k; ++i) a[i] = (el[x][i] + el[y][i]) % f[i];
    return index(a);
  };
  std::vector<std::int64_t> isotropic;
  for (std::int64_t x = 1; x < G; ++x)
    if (pair_val(x, x) == 0) isotropic.push_back(x);

  struct Node {
    std::vector<std::int64_t> elems;  // sorted
    std::vector<std::int64_t> gens;
  };
  std::set<std::vector<std::int64_t>> seen;
  std::deque<Node> queue;
  queue.push_back({{0}, {}});
  seen.insert({0});
  std::vector<IsotropicSubgroup> out;
  while (!queue.empty()) {
    Node h = std::move(queue.front());
    queue.pop_front();
    const std::int64_t sz = static_cast<std::int64_t>(h.elems.size());
    if (sz == order) {
      IsotropicSubgroup s;
      for (auto x : h.elems) s.elements.push_back(el[x]);
      for (auto x : h.gens) s.generators.push_back(el[x]);
      out.push_back(std::move(s));
      continue;
    }
    for (std::int64_t x : isotropic) {
      if (std::binary_search(h.elems.begin(), h.elems.end(), x)) continue;
      bool orth = true;
      for (auto y : h.gens)
        if (pair_val(x, y) != 0) {
          orth = false;
          break;
        }
      if (!orth) continue;
      std::vector<char> in(G, 0);
      std::vector<std::int64_t> elems;
      for (auto y : h.elems) {
        in[y] = 1;
        elems.push_back(y);
      }
      // H + <x>
      std::int64_t mult = x;
      while (!in[mult]) {
        for (auto y : h.elems) {
          std::int64_t z = add(y, mult);
          if (!in[z]) {
            in[z] = 1;
            elems.push_back(z);
          }
        }
        mult = add(mult, x);
      }
      const std::int64_t nsz = static_cast<std::int64_t>(elems.size());
      if (nsz > order || order % nsz) continue;
      std::sort(elems.begin(), elems.end());
      if (!seen.insert(elems).second) continue;
      Node nh{std::move(elems), h.gens};
      nh.gens.push_back(x);
      queue.push_back(std::move(nh));
    }
  }
  return out;
}

std::vector<std::int64_t> fundamental_cycle(const ResolutionGraph& g, int start) {
  if (!is_negative_definite(g)) throw std::invalid_argument("fundamental_cycle: graph is not negative definite");
  const int n = static_cast<int>(g.size());
  if (start < 0 || start >= n) throw std::invalid_argument("fundamental_cycle: bad start vertex");
  IntMatrix m = intersection_matrix(g);
  std::vector<std::int64_t> z(n, 0);
  z[start] = 1;
  for (;;) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      std::int64_t dot = 0;
      for (int j = 0; j < n; ++j) dot += z[j] * m(j, i).get_si();
      if (dot > 0) {
        ++z[i];
        changed = true;
        break;
      }
    }
    if (!changed) return z;
  }
}

Integer cycle_euler_characteristic(const ResolutionGraph& g, const std::vector<std::int64_t>& z) {
  IntMatrix m = intersection_matrix(g);
  Integer zz = 0, zk = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) zz += Integer(z[i]) * z[j] * m(i, j);
    const auto& v = g.vertices()[i];
    zk += Integer(z[i]) * (-v.weight - 2 + 2 * v.genus);
  }
  Integer s = zz + zk;
  return -s / 2;
}

bool is_rational(const ResolutionGraph& g) { return cycle_euler_characteristic(g, fundamental_cycle(g)) == 1; }

std::int64_t sum_d_minus_3(const ResolutionGraph& g) {
  std::int64_t s = 0;
  for (const auto& v : g.vertices()) s += -v.weight - 3;
  return s;
}

CanonicalData canonical_data(const ResolutionGraph& g) {
  auto inv = inverse_of(g);
  const std::size_t n = g.size();
  std::vector<Rational> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = g.vertices()[i];
    b[i] = -v.weight - 2 + 2 * v.genus;
  }
  CanonicalData cd;
  cd.K.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cd.K[i] += inv[i][j] * b[j];
  cd.KK = 0;
  for (std::size_t i = 0; i < n; ++i) cd.KK += cd.K[i] * b[i];
  cd.KK.canonicalize();
  cd.sum_d_minus_3 = sum_d_minus_3(g);
  return cd;
}

ScreenReport qhd_screen(const ResolutionGraph& g) {
  ScreenReport r;
  r.sum_d_minus_3 = sum_d_minus_3(g);
  r.negative_definite = is_negative_definite(g);
  r.discriminant = discriminant(g);
  r.discriminant_square = mpz_perfect_square_p(r.discriminant.get_mpz_t()) != 0;
  if (!r.negative_definite) return r;
  auto cd = canonical_data(g);
  r.KK = cd.KK;
  r.KK_integral = cd.KK.get_den() == 1;
  r.rational = is_rational(g);
  return r;
}

namespace {

std::string encode(const ResolutionGraph& g, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : g.neighbors(v))
    if (w != parent) kids.push_back(encode(g, w, v));
  std::sort(kids.begin(), kids.end());
  const auto& x = g.vertices()[v];
  std::string s = "(" + std::to_string(x.weight);
  if (x.genus) s += "g" + std::to_string(x.genus);
  for (const auto& k : kids) s += k;
  return s + ")";
}

}  // namespace

std::string canonical_encoding(const ResolutionGraph& g) {
  if (!g.is_tree()) throw std::invalid_argument("canonical_encoding: graph is not a tree");
  const int n = static_cast<int>(g.size());
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.valency(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer)
      for (int w : g.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = next;
  }
  std::string best;
  for (int c : layer) {
    std::string e = encode(g, c, -1);
    if (best.empty() || e < best) best = e;
  }
  return best;
}

bool graphs_isomorphic(const ResolutionGraph& a, const ResolutionGraph& b) {
  return a.size() == b.size() && canonical_encoding(a) == canonical_encoding(b);
}

namespace {

struct Triple {
  std::int64_t a, b, c, d;
};

Triple family_triple(Family f) {
  switch (f) {
    case Family::A4:
      return {3, 3, 3, 4};
    case Family::B4:
      return {2, 4, 4, 3};
    case Family::C4:
      return {2, 3, 6, 2};
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

ResolutionGraph log_canonical_graph(Family f) {
  // center, top, right, left
  std::array<std::int64_t, 4> w{};
  switch (f) {
    case Family::A4:
      w = {4, 3, 3, 3};
      break;
    case Family::B4:
      w = {3, 4, 4, 2};
      break;
    case Family::C4:
      w = {2, 3, 6, 2};
      break;
  }
  ResolutionGraph g;
  const int c = g.add_vertex(-w[0]);
  for (int k = 1; k < 4; ++k) g.add_chain(c, {w[k]});
  return g;
}

ResolutionGraph family_graph(const FamilyId& f) {
  if (f.p < 1) throw std::invalid_argument("family_graph: p must be >= 1");
  if (f.p == 1) return log_canonical_graph(f.tag);
  const Triple t = family_triple(f.tag);
  ResolutionGraph g;
  const int c = g.add_vertex(-3);
  g.add_chain(c, {t.c});  // top
  g.add_chain(c, {t.a});  // bottom
  g.add_chain(c, {t.b});  // left
  std::vector<std::int64_t> tail(f.p - 2, 2);
  tail.push_back(t.d);
  tail.push_back(f.p);
  g.add_chain(c, tail);
  return g;
}

ResolutionGraph h_graph(std::int64_t a, std::int64_t b, std::int64_t e, const std::vector<std::int64_t>& left_chain,
                        const std::vector<std::int64_t>& right_chain, const std::vector<std::int64_t>& top_chain) {
  if (left_chain.empty()) throw std::invalid_argument("h_graph: left chain must contain the left node");
  ResolutionGraph g;
  const int node = g.add_vertex(-left_chain[0]);
  g.add_chain(node, {b});
  g.add_chain(node, {a});
  const int last = g.add_chain(node, std::vector<std::int64_t>(left_chain.begin() + 1, left_chain.end()));
  const int en = g.add_chain(last, {e});
  g.add_chain(en, top_chain);
  g.add_chain(en, right_chain);
  return g;
}

ResolutionGraph y_n_graph(int n) {
  if (n < 1) throw std::invalid_argument("y_n_graph: n must be >= 1");
  std::vector<std::int64_t> right{4};
  right.insert(right.end(), n - 1, 2);
  return h_graph(3, 3, n + 1, {3}, right, {2, 4});
}

ResolutionGraph rational_nontaut_graph() { return h_graph(3, 3, 2, {4}, {2, 2, 4}, {4}); }

}  // namespace qhd
