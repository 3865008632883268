#include "bianchi/racg.hpp"

#include "bianchi/phi.hpp"
#include "bianchi/sampling.hpp"

#include <map>
#include <set>

namespace bianchi {

RacgGraph RacgGraph::make(std::size_t n, const std::vector<std::pair<int, int>>& edges,
                          std::vector<std::string> names) {
  RacgGraph g;
  g.adj.assign(n, std::vector<bool>(n, false));
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  if (names.size() != n) throw std::invalid_argument("RacgGraph: name count mismatch");
  g.names = std::move(names);
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n ||
        static_cast<std::size_t>(j) >= n || i == j)
      throw std::invalid_argument("RacgGraph: bad edge");
    g.adj[i][j] = g.adj[j][i] = true;
  }
  return g;
}

RacgGraph RacgGraph::from_json(const nlohmann::json& j) {
  std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  const std::size_t n = names.size();
  return make(n, edges, std::move(names));
}

bool RacgGraph::edge(int i, int j) const {
  if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= size() ||
      static_cast<std::size_t>(j) >= size())
    throw std::out_of_range("RacgGraph::edge");
  return adj[i][j];
}

int RacgGraph::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

QMat tits_generator(const RacgGraph& g, int i) {
  const std::size_t n = g.size();
  if (i < 0 || static_cast<std::size_t>(i) >= n)
    throw std::out_of_range("tits_generator: bad vertex");
  QMat m = QMat::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    // B(e_i, e_j): 1 on the diagonal, 0 across an edge, -1 otherwise.
    int b;
    if (static_cast<std::size_t>(i) == j)
      b = 1;
    else if (g.adj[i][j])
      b = 0;
    else
      b = -1;
    m.at(i, j) = m.at(i, j) - Rational(2 * b);
  }
  return m;
}

QMat tits_eval(const RacgGraph& g, const RacgWord& w) {
  QMat acc = QMat::identity(g.size());
  for (int letter : w) acc = acc * tits_generator(g, letter);
  return acc;
}

RacgWord retract_word(const RacgGraph& g, const std::vector<bool>& keep,
                      const RacgWord& w) {
  if (keep.size() != g.size())
    throw std::invalid_argument("retract_word: keep mask size mismatch");
  RacgWord out;
  for (int letter : w) {
    if (letter < 0 || static_cast<std::size_t>(letter) >= g.size())
      throw std::out_of_range("retract_word: bad letter");
    if (keep[letter]) out.push_back(letter);
  }
  return out;
}

RacgGraph induced_subgraph(const RacgGraph& g, const std::vector<bool>& keep,
                           std::vector<int>* new_index) {
  if (keep.size() != g.size())
    throw std::invalid_argument("induced_subgraph: keep mask size mismatch");
  std::vector<int> remap(g.size(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (keep[i]) {
      remap[i] = static_cast<int>(names.size());
      names.push_back(g.names[i]);
    }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (keep[i] && keep[j] && g.adj[i][j]) edges.emplace_back(remap[i], remap[j]);
  if (new_index) *new_index = remap;
  const std::size_t n = names.size();
  return RacgGraph::make(n, edges, std::move(names));
}

QMat tits_eval_in_subgraph(const RacgGraph& g, const std::vector<bool>& keep,
                           const RacgWord& w) {
  std::vector<int> remap;
  const RacgGraph sub = induced_subgraph(g, keep, &remap);
  RacgWord mapped;
  for (int letter : w) {
    if (letter < 0 || static_cast<std::size_t>(letter) >= g.size() || remap[letter] < 0)
      throw std::invalid_argument("tits_eval_in_subgraph: letter outside subset");
    mapped.push_back(remap[letter]);
  }
  return tits_eval(sub, mapped);
}

namespace {

// PSL(2, Z)-canonical key of an integer 2x2 matrix: the lexicographically
// smaller coordinate tuple of {M, -M}.
std::vector<BigInt> psl_key(const Mat2O& m) {
  std::vector<BigInt> a{m.a.c0(), m.b.c0(), m.c.c0(), m.d.c0()};
  std::vector<BigInt> b{-m.a.c0(), -m.b.c0(), -m.c.c0(), -m.d.c0()};
  return std::min(a, b);
}

bool level2_over_z(const Mat2O& m) {
  return floor_mod(m.a.c0(), 2) == 1 && floor_mod(m.b.c0(), 2) == 0 &&
         floor_mod(m.c.c0(), 2) == 0 && floor_mod(m.d.c0(), 2) == 1;
}

}  // namespace

Certificate free_retraction_witness(std::int64_t m, int max_word_len) {
  Certificate cert;
  cert.claim = "free-retract";
  cert.m = m;

  const Mat2O f1 = Mat2O::from_int(m, 1, 2, 0, 1);
  const Mat2O f2 = Mat2O::from_int(m, 1, 0, 2, 1);
  Certificate::Check c1{"[[1,2],[0,1]]", {{"in_delta", in_delta_m(f1)}}, std::nullopt};
  Certificate::Check c2{"[[1,0],[2,1]]", {{"in_delta", in_delta_m(f2)}}, std::nullopt};
  cert.checks.push_back(std::move(c1));
  cert.checks.push_back(std::move(c2));

  // Ball of PSL(2, Z) inside PSL(2, O_m): words in T, T^{-1}, S.
  const Mat2O t = gen_T(m), ti = inverse_unimodular(t), s = gen_S(m);
  std::set<std::vector<BigInt>> seen{psl_key(Mat2O::identity(m))};
  std::vector<Mat2O> frontier{Mat2O::identity(m)}, elements{Mat2O::identity(m)};
  for (int len = 1; len <= max_word_len; ++len) {
    std::vector<Mat2O> next;
    for (const Mat2O& e : frontier)
      for (const Mat2O* g : {&t, &ti, &s}) {
        Mat2O p = e * *g;
        if (seen.insert(psl_key(p)).second) {
          next.push_back(p);
          elements.push_back(p);
        }
      }
    frontier = std::move(next);
  }

  bool equivalence = true;
  for (const Mat2O& e : elements)
    if (in_delta_m(e) != level2_over_z(e)) equivalence = false;

  cert.checks.push_back({"ball:len<=" + std::to_string(max_word_len) +
                             ":size=" + std::to_string(elements.size()),
                         {{"delta_matches_level2", equivalence}},
                         std::nullopt});
  cert.index = BigInt(elements.size());
  cert.pass = true;
  for (const auto& c : cert.checks)
    if (!c.ok()) cert.pass = false;
  return cert;
}

bool reverify_free_retract(const Certificate& cert) {
  if (cert.claim != "free-retract") return false;
  // The ball size is stored in the check word; rebuild with the same radius.
  int radius = -1;
  for (const auto& c : cert.checks) {
    const auto pos = c.word.find("len<=");
    if (pos != std::string::npos)
      radius = std::stoi(c.word.substr(pos + 5, c.word.find(':', pos) - pos - 5));
  }
  if (radius < 0) return false;
  const Certificate fresh = free_retraction_witness(cert.m, radius);
  return fresh.to_json() == cert.to_json();
}

}  // namespace bianchi
