#include "bianchi/sampling.hpp"

#include "bianchi/phi.hpp"

namespace bianchi {

Mat2O gen_T(std::int64_t m) { return Mat2O::from_int(m, 1, 1, 0, 1); }

Mat2O gen_W(std::int64_t m) {
  return {QuadInt::integer(m, 1), QuadInt::integer(m, 0), QuadInt::omega(m),
          QuadInt::integer(m, 1)};
}

Mat2O gen_S(std::int64_t m) { return Mat2O::from_int(m, 0, -1, 1, 0); }

namespace {

Mat2O upper(std::int64_t m, const QuadInt& t) {
  return {QuadInt::integer(m, 1), t, QuadInt::integer(m, 0), QuadInt::integer(m, 1)};
}

Mat2O lower(std::int64_t m, const QuadInt& t) {
  return {QuadInt::integer(m, 1), QuadInt::integer(m, 0), t, QuadInt::integer(m, 1)};
}

}  // namespace

WordSampler::WordSampler(std::int64_t m, std::uint64_t seed) : m_(m), rng_(seed) {
  m_class(m);
  const Mat2O t = gen_T(m), w = gen_W(m), s = gen_S(m);
  full_ = {{'T', t},
           {'t', inverse_unimodular(t)},
           {'W', w},
           {'w', inverse_unimodular(w)},
           {'S', s},
           {'s', inverse_unimodular(s)}};
  const QuadInt two = QuadInt::integer(m, 2);
  const QuadInt two_w = two * QuadInt::omega(m);
  const Mat2O a = upper(m, two), b = lower(m, two), c = upper(m, two_w),
              d = lower(m, two_w);
  level2_ = {{'A', a}, {'a', inverse_unimodular(a)}, {'B', b}, {'b', inverse_unimodular(b)},
             {'C', c}, {'c', inverse_unimodular(c)}, {'D', d}, {'d', inverse_unimodular(d)}};
  const QuadInt four = QuadInt::integer(m, 4);
  const QuadInt four_w = four * QuadInt::omega(m);
  const Mat2O e = upper(m, four), f = lower(m, four), g = upper(m, four_w),
              h = lower(m, four_w);
  level4_ = {{'E', e}, {'e', inverse_unimodular(e)}, {'F', f}, {'f', inverse_unimodular(f)},
             {'G', g}, {'g', inverse_unimodular(g)}, {'H', h}, {'h', inverse_unimodular(h)}};
}

WordSample WordSampler::compose(const std::vector<std::pair<char, Mat2O>>& alphabet,
                                int length) {
  WordSample out{"", Mat2O::identity(m_)};
  out.word.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const auto& [letter, mat] = alphabet[next(alphabet.size())];
    out.word.push_back(letter);
    out.mat = out.mat * mat;
  }
  return out;
}

WordSample WordSampler::random_word(int length) { return compose(full_, length); }

WordSample WordSampler::random_level2_word(int length) { return compose(level2_, length); }

WordSample WordSampler::random_level4_word(int length) { return compose(level4_, length); }

std::vector<WordSample> WordSampler::sample_delta(int count, int length,
                                                  std::uint64_t max_attempts) {
  std::vector<WordSample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t attempt = 0; attempt < max_attempts && out.size() < static_cast<std::size_t>(count);
       ++attempt) {
    WordSample s = random_word(length);
    if (in_delta_m(s.mat)) out.push_back(std::move(s));
  }
  if (out.size() < static_cast<std::size_t>(count))
    throw std::runtime_error("sample_delta: attempt budget exhausted");
  return out;
}

std::vector<WordSample> WordSampler::sample_level2(int count, int length) {
  std::vector<WordSample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_level2_word(length));
  return out;
}

Mat2O eval_word(std::int64_t m, const std::string& word) {
  const QuadInt two = QuadInt::integer(m, 2);
  const QuadInt four = QuadInt::integer(m, 4);
  const QuadInt w = QuadInt::omega(m);
  Mat2O acc = Mat2O::identity(m);
  for (char ch : word) {
    Mat2O g = Mat2O::identity(m);
    switch (ch) {
      case 'T': g = gen_T(m); break;
      case 't': g = inverse_unimodular(gen_T(m)); break;
      case 'W': g = gen_W(m); break;
      case 'w': g = inverse_unimodular(gen_W(m)); break;
      case 'S': g = gen_S(m); break;
      case 's': g = inverse_unimodular(gen_S(m)); break;
      case 'A': g = upper(m, two); break;
      case 'a': g = inverse_unimodular(upper(m, two)); break;
      case 'B': g = lower(m, two); break;
      case 'b': g = inverse_unimodular(lower(m, two)); break;
      case 'C': g = upper(m, two * w); break;
      case 'c': g = inverse_unimodular(upper(m, two * w)); break;
      case 'D': g = lower(m, two * w); break;
      case 'd': g = inverse_unimodular(lower(m, two * w)); break;
      case 'E': g = upper(m, four); break;
      case 'e': g = inverse_unimodular(upper(m, four)); break;
      case 'F': g = lower(m, four); break;
      case 'f': g = inverse_unimodular(lower(m, four)); break;
      case 'G': g = upper(m, four * w); break;
      case 'g': g = inverse_unimodular(upper(m, four * w)); break;
      case 'H': g = lower(m, four * w); break;
      case 'h': g = inverse_unimodular(lower(m, four * w)); break;
      default:
        throw std::invalid_argument(std::string("eval_word: unknown letter '") + ch + "'");
    }
    acc = acc * g;
  }
  return acc;
}

}  // namespace bianchi
