#pragma once

#include "bianchi/matrix.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bianchi {

// Serializable record of one verified claim: inputs, witnesses, and the
// boolean outcome of every check. All big integers and matrix entries go
// over the wire as decimal strings so nothing is rounded.
struct Certificate {
  struct Check {
    std::string word;                      // input word / check identifier
    std::map<std::string, bool> verdict;   // named boolean checks
    std::optional<QMat> witness;           // matrix evidence, when there is one

    bool ok() const {
      for (const auto& [_, v] : verdict)
        if (!v) return false;
      return true;
    }
  };

  std::string claim;
  std::int64_t m = 0;
  std::vector<BigInt> foursquare;  // empty when not applicable
  std::vector<Check> checks;
  BigInt index = 0;
  bool pass = false;

  nlohmann::json to_json() const;
  static Certificate from_json(const nlohmann::json& j);
  std::string dump(int indent = 2) const;
};

nlohmann::json matrix_to_json(const QMat& m);
QMat matrix_from_json(const nlohmann::json& j);

// Full recomputation from the serialized data: words are re-evaluated,
// witnesses re-checked, indices re-derived. Dispatches on `claim`.
bool reverify(const Certificate& cert);

}  // namespace bianchi
