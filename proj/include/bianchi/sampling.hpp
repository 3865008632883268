#pragma once

#include "bianchi/quadint.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace bianchi {

// Fixed generators used throughout for word sampling in SL(2, O_m).
Mat2O gen_T(std::int64_t m);  // [[1,1],[0,1]]
Mat2O gen_W(std::int64_t m);  // [[1,0],[omega,1]]
Mat2O gen_S(std::int64_t m);  // [[0,-1],[1,0]]

struct WordSample {
  std::string word;
  Mat2O mat;
};

// Re-evaluate a sampled word (any of the sampler alphabets) in SL(2, O_m).
Mat2O eval_word(std::int64_t m, const std::string& word);

// Seeded random words. mt19937_64 plus modulo draws keeps the streams
// bit-identical across platforms, which is what makes certificates
// reproducible from (m, seed, budget) alone.
class WordSampler {
 public:
  WordSampler(std::int64_t m, std::uint64_t seed);

  // Word in T, W, S and their inverses; letters T t W w S s.
  WordSample random_word(int length);
  // Word in the level-2 elementary generators [[1,2],[0,1]], [[1,0],[2,1]],
  // [[1,2w],[0,1]], [[1,0],[2w,1]] and inverses; letters A a B b C c D d.
  WordSample random_level2_word(int length);
  // Same with 4 in place of 2; letters E e F f G g H h.
  WordSample random_level4_word(int length);

  // `count` samples of Delta_m: full-group words filtered by membership.
  // Throws if max_attempts is exhausted first.
  std::vector<WordSample> sample_delta(int count, int length = 12,
                                       std::uint64_t max_attempts = 4000000);
  // `count` level-2 words by construction.
  std::vector<WordSample> sample_level2(int count, int length = 10);

 private:
  std::uint64_t next(std::uint64_t bound) { return rng_() % bound; }
  WordSample compose(const std::vector<std::pair<char, Mat2O>>& alphabet, int length);

  std::int64_t m_;
  std::mt19937_64 rng_;
  std::vector<std::pair<char, Mat2O>> full_, level2_, level4_;
};

}  // namespace bianchi
