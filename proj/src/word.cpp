#include "circiso/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace circiso {

namespace {

void check_letter(Letter letter, int alphabet_size) {
  if (letter < 1 || letter > alphabet_size) {
    throw WordError(WordError::Kind::letter_out_of_range,
                    "letter " + std::to_string(letter) + " outside {1.." +
                        std::to_string(alphabet_size) + "}");
  }
}

void check_alphabet(int alphabet_size) {
  if (alphabet_size < 1) {
    throw WordError(WordError::Kind::precondition, "alphabet size must be >= 1");
  }
}

}  // namespace

Word::Word(int alphabet_size) : alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size);
}

Word::Word(int alphabet_size, std::vector<Letter> letters)
    : alphabet_size_(alphabet_size), letters_(std::move(letters)) {
  check_alphabet(alphabet_size);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    check_letter(letters_[i], alphabet_size);
    if (i > 0 && letters_[i] == letters_[i - 1]) {
      throw WordError(WordError::Kind::reducible,
                      "adjacent equal letters at positions " + std::to_string(i) +
                          " and " + std::to_string(i + 1));
    }
  }
}

std::int64_t SignatureVector::sum() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool SignatureVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t e) { return e == 0; });
}

namespace {

void check_same_size(const SignatureVector& a, const SignatureVector& b) {
  if (a.size() != b.size()) {
    throw WordError(WordError::Kind::wrong_dimension, "signature vectors differ in length");
  }
}

}  // namespace

SignatureVector operator+(const SignatureVector& a, const SignatureVector& b) {
  check_same_size(a, b);
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return SignatureVector(std::move(out));
}

SignatureVector operator-(const SignatureVector& a, const SignatureVector& b) {
  check_same_size(a, b);
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return SignatureVector(std::move(out));
}

SignatureVector operator-(const SignatureVector& a) { return std::int64_t{-1} * a; }

SignatureVector operator*(std::int64_t k, const SignatureVector& a) {
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return SignatureVector(std::move(out));
}

LetterPermutation::LetterPermutation(std::vector<Letter> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Letter image : images_) {
    if (image < 1 || image > static_cast<int>(images_.size()) ||
        seen[static_cast<std::size_t>(image - 1)]) {
      throw WordError(WordError::Kind::invalid_permutation, "not a bijection of {1..l}");
    }
    seen[static_cast<std::size_t>(image - 1)] = true;
  }
}

LetterPermutation LetterPermutation::identity(int l) {
  std::vector<Letter> images(static_cast<std::size_t>(l));
  std::iota(images.begin(), images.end(), 1);
  return LetterPermutation(std::move(images));
}

LetterPermutation LetterPermutation::inverse() const {
  std::vector<Letter> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<Letter>(i + 1);
  }
  return LetterPermutation(std::move(inv));
}

Word reduce(std::span<const Letter> raw, int alphabet_size) {
  check_alphabet(alphabet_size);
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (Letter letter : raw) {
    check_letter(letter, alphabet_size);
    if (!stack.empty() && stack.back() == letter) {
      stack.pop_back();
    } else {
      stack.push_back(letter);
    }
  }
  return Word(alphabet_size, std::move(stack));
}

Word mul(const Word& g, const Word& h) {
  if (g.alphabet_size() != h.alphabet_size()) {
    throw WordError(WordError::Kind::alphabet_mismatch, "words over different alphabets");
  }
  const auto& a = g.letters();
  const auto& b = h.letters();
  // k = length of the cancelling junction: a[n-1-p] == b[p] for all p < k.
  std::size_t k = 0;
  const std::size_t limit = std::min(a.size(), b.size());
  while (k < limit && a[a.size() - 1 - k] == b[k]) ++k;

  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * k);
  out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
  return Word(g.alphabet_size(), std::move(out));
}

Word inverse(const Word& g) {
  std::vector<Letter> out(g.letters().rbegin(), g.letters().rend());
  return Word(g.alphabet_size(), std::move(out));
}

Word power(const Word& g, int k) {
  const Word base = k < 0 ? inverse(g) : g;
  Word out(g.alphabet_size());
  for (int i = 0; i < std::abs(k); ++i) out = mul(out, base);
  return out;
}

SignatureVector signature(const Word& g) {
  std::vector<std::int64_t> entries(static_cast<std::size_t>(g.alphabet_size()), 0);
  for (std::size_t pos = 0; pos < g.length(); ++pos) {
    // 1-based position pos+1 contributes (-1)^(pos+2) = +1 for even pos.
    entries[static_cast<std::size_t>(g[pos] - 1)] += (pos % 2 == 0) ? 1 : -1;
  }
  return SignatureVector(std::move(entries));
}

bool is_balanced(const SignatureVector& v) { return v.sum() == 0; }

Word normal_form(const Word& g) {
  const int l = g.alphabet_size();
  std::vector<Letter> current = g.letters();
  for (Letter letter = l; letter >= 1; --letter) {
    std::vector<Letter> odd;
    std::vector<Letter> even;
    for (std::size_t i = 0; i < current.size(); ++i) {
      (i % 2 == 0 ? odd : even).push_back(current[i]);
    }
    auto front = [letter](Letter x) { return x == letter; };
    std::stable_partition(odd.begin(), odd.end(), front);
    std::stable_partition(even.begin(), even.end(), front);
    for (std::size_t i = 0; i < current.size(); ++i) {
      current[i] = (i % 2 == 0) ? odd[i / 2] : even[i / 2];
    }
    current = reduce(current, l).letters();
  }
  return Word(l, std::move(current));
}

Word word_from_signature(const SignatureVector& v) {
  const auto l = static_cast<int>(v.size());
  if (l < 1) throw WordError(WordError::Kind::wrong_dimension, "empty signature vector");
  const std::int64_t total = v.sum();
  if (total != 0 && total != 1) {
    throw WordError(WordError::Kind::unrealizable_signature,
                    "entry sum " + std::to_string(total) + " is not 0 or 1");
  }
  std::vector<Letter> odd;
  std::vector<Letter> even;
  for (int i = 0; i < l; ++i) {
    const std::int64_t count = v[static_cast<std::size_t>(i)];
    auto& target = count > 0 ? odd : even;
    for (std::int64_t k = 0; k < std::abs(count); ++k) target.push_back(i + 1);
  }
  std::vector<Letter> out;
  out.reserve(odd.size() + even.size());
  for (std::size_t i = 0; i < odd.size(); ++i) {
    out.push_back(odd[i]);
    if (i < even.size()) out.push_back(even[i]);
  }
  return Word(l, std::move(out));
}

Word canonical_word(const SignatureVector& v) {
  if (v.size() != 3) throw WordError(WordError::Kind::wrong_dimension, "expected a 3-vector");
  if (!is_balanced(v) || v[1] < 1 || v[0] > -1 || v[2] > -1) {
    throw WordError(WordError::Kind::precondition,
                    "canonical word needs balanced v with v2 >= 1 and v1, v3 <= -1; got (" +
                        to_string(v) + ")");
  }
  std::vector<Letter> out;
  for (std::int64_t k = 0; k < -v[0]; ++k) {
    out.push_back(2);
    out.push_back(1);
  }
  for (std::int64_t k = 0; k < -v[2]; ++k) {
    out.push_back(2);
    out.push_back(3);
  }
  return Word(3, std::move(out));
}

std::int64_t gcd_vec(const SignatureVector& v) {
  std::int64_t g = 0;
  for (std::int64_t e : v.entries()) g = std::gcd(g, e);
  return g;
}

SignatureVector pi13(const SignatureVector& v) {
  if (v.size() != 3) throw WordError(WordError::Kind::wrong_dimension, "expected a 3-vector");
  return SignatureVector{v[2], v[1], v[0]};
}

Word apply_letter_permutation(const Word& g, const LetterPermutation& sigma) {
  if (sigma.size() != g.alphabet_size()) {
    throw WordError(WordError::Kind::invalid_permutation, "permutation size differs from alphabet");
  }
  std::vector<Letter> out;
  out.reserve(g.length());
  for (Letter letter : g) out.push_back(sigma(letter));
  return Word(g.alphabet_size(), std::move(out));
}

SignatureVector permute_signature(const SignatureVector& v, const LetterPermutation& sigma) {
  if (static_cast<int>(v.size()) != sigma.size()) {
    throw WordError(WordError::Kind::wrong_dimension, "permutation size differs from vector");
  }
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[static_cast<std::size_t>(sigma(static_cast<Letter>(i + 1)) - 1)] = v[i];
  }
  return SignatureVector(std::move(out));
}

std::vector<Word> words_of_length(int alphabet_size, int length) {
  check_alphabet(alphabet_size);
  std::vector<Word> out;
  if (length < 0) return out;
  std::vector<Letter> current;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == length) {
      out.emplace_back(alphabet_size, current);
      return;
    }
    for (Letter letter = 1; letter <= alphabet_size; ++letter) {
      if (!current.empty() && current.back() == letter) continue;
      current.push_back(letter);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

std::vector<Word> words_up_to(int alphabet_size, int max_length) {
  std::vector<Word> out;
  for (int n = 0; n <= max_length; ++n) {
    auto layer = words_of_length(alphabet_size, n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string to_string(const Word& g) {
  if (g.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < g.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(g[i]);
  }
  return out;
}

namespace {

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view field = text.substr(start, comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw WordError(WordError::Kind::parse, "malformed integer list '" + std::string(text) + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<Letter> parse_letters(std::string_view text) {
  if (text == "e") return {};
  std::vector<Letter> out;
  for (std::int64_t value : parse_int_list(text)) out.push_back(static_cast<Letter>(value));
  return out;
}

Word parse_word(std::string_view text, int alphabet_size) {
  return Word(alphabet_size, parse_letters(text));
}

std::string to_string(const SignatureVector& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
  return out.str();
}

SignatureVector parse_signature(std::string_view text) {
  return SignatureVector(parse_int_list(text));
}

}  // namespace circiso
