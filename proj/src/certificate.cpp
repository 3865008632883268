#include "bianchi/certificate.hpp"

#include "bianchi/cocompact.hpp"
#include "bianchi/embed.hpp"
#include "bianchi/racg.hpp"

namespace bianchi {

nlohmann::json matrix_to_json(const QMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

QMat matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix_from_json: bad shape");
  const std::size_t rows = j.size(), cols = j.at(0).size();
  QMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw std::invalid_argument("matrix_from_json: ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = parse_rational(j.at(i).at(c).get<std::string>());
  }
  return m;
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["claim"] = claim;
  j["m"] = m;
  nlohmann::json fs = nlohmann::json::array();
  for (const BigInt& v : foursquare) fs.push_back(v.str());
  j["foursquare"] = std::move(fs);
  nlohmann::json cs = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json jc;
    jc["word"] = c.word;
    jc["verdict"] = c.verdict;
    if (c.witness) jc["witness"] = matrix_to_json(*c.witness);
    cs.push_back(std::move(jc));
  }
  j["checks"] = std::move(cs);
  j["index"] = index.str();
  j["pass"] = pass;
  return j;
}

Certificate Certificate::from_json(const nlohmann::json& j) {
  Certificate cert;
  cert.claim = j.at("claim").get<std::string>();
  cert.m = j.at("m").get<std::int64_t>();
  for (const auto& v : j.at("foursquare"))
    cert.foursquare.emplace_back(v.get<std::string>());
  for (const auto& jc : j.at("checks")) {
    Check c;
    c.word = jc.at("word").get<std::string>();
    c.verdict = jc.at("verdict").get<std::map<std::string, bool>>();
    if (jc.contains("witness")) c.witness = matrix_from_json(jc.at("witness"));
    cert.checks.push_back(std::move(c));
  }
  cert.index = BigInt(j.at("index").get<std::string>());
  cert.pass = j.at("pass").get<bool>();
  return cert;
}

std::string Certificate::dump(int indent) const { return to_json().dump(indent); }

bool reverify(const Certificate& cert) {
  if (cert.claim == "embed-family") return reverify_embed(cert);
  if (cert.claim == "cocompact") return reverify_cocompact(cert);
  if (cert.claim == "free-retract") return reverify_free_retract(cert);
  return false;
}

}  // namespace bianchi
