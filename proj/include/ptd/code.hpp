#pragma once

// Linear codes over prime fields: full-rank generator matrices, exhaustive
// weight enumeration (message spaces here are tiny), and support extraction
// for building incidence structures from codewords.

#include "ptd/linalg.hpp"

namespace ptd {

class LinearCode {
 public:
  // The generator matrix must have full row rank.
  explicit LinearCode(FqMatrix generator) : gen_(std::move(generator)) {
    if (gen_.rows() < 1 || gen_.cols() < gen_.rows())
      throw error("code: generator matrix shape");
    if (gen_.rank() != gen_.rows())
      throw error("code: generator matrix is rank deficient");
    long long words = 1;
    for (int i = 0; i < gen_.rows(); ++i) {
      words *= gen_.field().size();
      if (words > (1 << 24)) throw error("code: message space too large");
    }
    enumerator_.assign(gen_.cols() + 1, 0);
    std::vector<int> word(gen_.cols());
    for (long long msg = 0; msg < words; ++msg) {
      encode(msg, word);
      enumerator_[weight_of(word)]++;
    }
  }

  const GF& field() const { return gen_.field(); }
  int length() const { return gen_.cols(); }
  int dimension() const { return gen_.rows(); }
  const FqMatrix& generator() const { return gen_; }

  long long word_count() const {
    long long words = 1;
    for (int i = 0; i < dimension(); ++i) words *= field().size();
    return words;
  }

  // counts of codewords by Hamming weight, index 0..length
  const std::vector<long long>& weight_enumerator() const { return enumerator_; }

  int minimum_weight() const {
    for (int w = 1; w <= length(); ++w)
      if (enumerator_[w] > 0) return w;
    throw error("code: zero code has no minimum weight");
  }

  std::vector<std::vector<int>> words_of_weight(int w) const {
    std::vector<std::vector<int>> out;
    std::vector<int> word(length());
    for (long long msg = 0; msg < word_count(); ++msg) {
      encode(msg, word);
      if (weight_of(word) == w) out.push_back(word);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool contains(const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) != length())
      throw error("code: word length mismatch");
    // append the word below the generator and compare ranks
    FqMatrix stacked(gen_.field_ptr(), dimension() + 1, length());
    for (int i = 0; i < dimension(); ++i)
      for (int j = 0; j < length(); ++j) stacked.set(i, j, gen_.at(i, j));
    for (int j = 0; j < length(); ++j) stacked.set(dimension(), j, word[j]);
    return stacked.rank() == dimension();
  }

 private:
  void encode(long long msg, std::vector<int>& word) const {
    const GF& f = field();
    std::fill(word.begin(), word.end(), 0);
    for (int i = 0; i < dimension(); ++i) {
      int digit = static_cast<int>(msg % f.size());
      msg /= f.size();
      if (digit == 0) continue;
      for (int j = 0; j < length(); ++j)
        word[j] = f.add(word[j], f.mul(digit, gen_.at(i, j)));
    }
  }

  static int weight_of(const std::vector<int>& word) {
    int w = 0;
    for (int d : word)
      if (d != 0) ++w;
    return w;
  }

  FqMatrix gen_;
  std::vector<long long> enumerator_;
};

// indices of the nonzero entries
inline std::vector<int> support(const std::vector<int>& word) {
  std::vector<int> s;
  for (size_t i = 0; i < word.size(); ++i)
    if (word[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

// indices carrying a given value
inline std::vector<int> entries_equal(const std::vector<int>& word, int value) {
  std::vector<int> s;
  for (size_t i = 0; i < word.size(); ++i)
    if (word[i] == value) s.push_back(static_cast<int>(i));
  return s;
}

}  // namespace ptd
