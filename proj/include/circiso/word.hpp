#pragma once

// Irreducible words over {1..l}: the free product of l copies of Z/2 acting
// on a circle through reversions. Multiplication is concatenation followed by
// cancellation of equal adjacent letters.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circiso {

using Letter = int;

class WordError : public std::invalid_argument {
 public:
  enum class Kind {
    letter_out_of_range,
    reducible,
    alphabet_mismatch,
    unrealizable_signature,
    precondition,
    invalid_permutation,
    wrong_dimension,
    parse,
  };

  WordError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class Word {
 public:
  explicit Word(int alphabet_size);

  // Throws WordError if `letters` is not irreducible or has a letter outside
  // {1..alphabet_size}.
  Word(int alphabet_size, std::vector<Letter> letters);

  int alphabet_size() const noexcept { return alphabet_size_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int alphabet_size_;
  std::vector<Letter> letters_;
};

/// Integer l-vector of alternating-sign letter counts. Entry i (0-based) holds
/// the sum over occurrences of letter i+1 of (-1)^(position+1), positions
/// counted from 1.
class SignatureVector {
 public:
  SignatureVector() = default;
  explicit SignatureVector(std::vector<std::int64_t> entries)
      : entries_(std::move(entries)) {}
  SignatureVector(std::initializer_list<std::int64_t> entries)
      : entries_(entries) {}

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::int64_t sum() const noexcept;
  bool is_zero() const noexcept;

  friend bool operator==(const SignatureVector&, const SignatureVector&) = default;
  friend auto operator<=>(const SignatureVector&, const SignatureVector&) = default;

  friend SignatureVector operator+(const SignatureVector& a, const SignatureVector& b);
  friend SignatureVector operator-(const SignatureVector& a, const SignatureVector& b);
  friend SignatureVector operator-(const SignatureVector& a);
  friend SignatureVector operator*(std::int64_t k, const SignatureVector& a);

 private:
  std::vector<std::int64_t> entries_;
};

/// A bijection of {1..l}, stored as images: image(i) = sigma(i).
class LetterPermutation {
 public:
  explicit LetterPermutation(std::vector<Letter> images);
  static LetterPermutation identity(int l);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  Letter operator()(Letter i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Letter>& images() const noexcept { return images_; }
  LetterPermutation inverse() const;

  friend bool operator==(const LetterPermutation&, const LetterPermutation&) = default;

 private:
  std::vector<Letter> images_;
};

/// Cancels adjacent equal pairs until none remain. The result does not depend
/// on the order of cancellation.
Word reduce(std::span<const Letter> raw, int alphabet_size);

Word mul(const Word& g, const Word& h);
inline Word operator*(const Word& g, const Word& h) { return mul(g, h); }

Word inverse(const Word& g);

/// g^k for k >= 0; negative k uses the inverse.
Word power(const Word& g, int k);

SignatureVector signature(const Word& g);

bool is_balanced(const SignatureVector& v);

/// Sorts the letters of g separately on odd and even positions using only
/// parity-preserving position swaps and cancellations. Letters are processed
/// from l down to 1; each pass moves every occurrence of the current letter to
/// the front of its parity class and then reduces.
Word normal_form(const Word& g);

/// Positive-count letters on odd positions, negative-count letters on even
/// positions, each class ascending. Requires sum(v) in {0, 1}.
Word word_from_signature(const SignatureVector& v);

/// (2,1)^|v1| (2,3)^|v3| for a balanced 3-vector with v2 >= 1, v1, v3 <= -1.
Word canonical_word(const SignatureVector& v);

/// Greatest common divisor of the absolute entries; 0 for the zero vector.
std::int64_t gcd_vec(const SignatureVector& v);

/// (v1, v2, v3) -> (v3, v2, v1).
SignatureVector pi13(const SignatureVector& v);

/// Letterwise image under sigma; an automorphism of the group.
Word apply_letter_permutation(const Word& g, const LetterPermutation& sigma);

/// Signature vectors move along with their letters: entry sigma(i) of the
/// result is entry i of v.
SignatureVector permute_signature(const SignatureVector& v, const LetterPermutation& sigma);

/// All irreducible words of exactly the given length, in lexicographic order.
std::vector<Word> words_of_length(int alphabet_size, int length);

/// All irreducible words of length <= max_length, shortest first.
std::vector<Word> words_up_to(int alphabet_size, int max_length);

/// "2,1,2,3"; the empty word is "e".
std::string to_string(const Word& g);
Word parse_word(std::string_view text, int alphabet_size);

/// Parses a comma-separated raw letter list (or "e") without reducing it.
std::vector<Letter> parse_letters(std::string_view text);

/// Space-separated entries, e.g. "-1 2 -1".
std::string to_string(const SignatureVector& v);
/// Comma-separated signed integers, e.g. "-1,2,-1".
SignatureVector parse_signature(std::string_view text);

}  // namespace circiso
