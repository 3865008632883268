#pragma once

#include "bianchi/certificate.hpp"
#include "bianchi/matrix.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bianchi {

// Right-angled Coxeter graph: one involutive generator per vertex, with
// (rs)^2 = 1 exactly when {r, s} is an edge.
struct RacgGraph {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> adj;

  static RacgGraph make(std::size_t n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> names = {});
  static RacgGraph from_json(const nlohmann::json& j);

  std::size_t size() const { return adj.size(); }
  bool edge(int i, int j) const;
  int vertex_index(const std::string& name) const;  // -1 if absent
};

using RacgWord = std::vector<int>;

// Reflection representation matrices: r_i acts on Z^V by
// e_j -> e_j - 2B(e_i, e_j) e_i with B(e_i,e_i) = 1, B = 0 on edges and
// B = -1 on non-edges. Matrix equality decides word equality in the group.
QMat tits_generator(const RacgGraph& g, int i);
QMat tits_eval(const RacgGraph& g, const RacgWord& w);

// Kill every letter outside `keep`: the retraction onto the special
// subgroup generated by the kept vertices.
RacgWord retract_word(const RacgGraph& g, const std::vector<bool>& keep,
                      const RacgWord& w);

RacgGraph induced_subgraph(const RacgGraph& g, const std::vector<bool>& keep,
                           std::vector<int>* new_index = nullptr);

// Evaluate a word whose letters all lie in `keep`, in the Tits
// representation of the induced subgraph.
QMat tits_eval_in_subgraph(const RacgGraph& g, const std::vector<bool>& keep,
                           const RacgWord& w);

// Certifies the two computable ingredients of the free retraction:
// [[1,2],[0,1]] and [[1,0],[2,1]] lie in Delta_m, and over the entire
// ball of PSL(2, Z) words of length <= max_word_len, membership in
// Delta_m coincides with membership in the level-2 subgroup of PSL(2, Z).
Certificate free_retraction_witness(std::int64_t m, int max_word_len = 10);

bool reverify_free_retract(const Certificate& cert);

}  // namespace bianchi
