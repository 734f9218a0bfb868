#include "platcover/braid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>

#include "platcover/errors.hpp"

namespace platcover {

namespace {

void check_strand_count(int strand_count) {
  if (strand_count < 2 || strand_count % 2 != 0) {
    throw ParseError(ParseError::Kind::BadStrandCount,
                     "strand count must be a positive even integer, got " +
                         std::to_string(strand_count));
  }
}

}  // namespace

BraidWord::BraidWord(int strand_count, std::vector<BraidLetter> letters)
    : strand_count_(strand_count), letters_(std::move(letters)) {
  check_strand_count(strand_count_);
  for (const BraidLetter& l : letters_) {
    if (l.sign != 1 && l.sign != -1) {
      throw PreconditionError("braid letter sign must be +1 or -1");
    }
    if (l.index < 1 || l.index > strand_count_ - 1) {
      throw PreconditionError("braid letter index " + std::to_string(l.index) +
                              " out of range for " +
                              std::to_string(strand_count_) + " strands");
    }
  }
}

BraidWord BraidWord::from_values(int strand_count,
                                 std::span<const int> values) {
  check_strand_count(strand_count);
  std::vector<BraidLetter> letters;
  letters.reserve(values.size());
  for (int v : values) {
    if (v == 0) {
      throw ParseError(ParseError::Kind::ZeroToken,
                       "generator value 0 is not a valid braid letter");
    }
    int index = v > 0 ? v : -v;
    if (index > strand_count - 1) {
      throw ParseError(ParseError::Kind::IndexOutOfRange,
                       "generator index " + std::to_string(index) +
                           " exceeds " + std::to_string(strand_count - 1) +
                           " on " + std::to_string(strand_count) + " strands");
    }
    letters.push_back(BraidLetter{index, v > 0 ? 1 : -1});
  }
  return BraidWord(strand_count, std::move(letters));
}

std::vector<int> BraidWord::values() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const BraidLetter& l : letters_) out.push_back(l.sign * l.index);
  return out;
}

EndpointPermutation::EndpointPermutation(std::vector<int> images)
    : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1]) {
      throw PreconditionError("endpoint permutation is not a bijection");
    }
    seen[v - 1] = true;
  }
}

EndpointPermutation EndpointPermutation::identity(int size) {
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 1);
  return EndpointPermutation(std::move(images));
}

int EndpointPermutation::preimage_of(int k) const {
  for (int i = 1; i <= size(); ++i) {
    if (images_[i - 1] == k) return i;
  }
  throw PreconditionError("value out of permutation range");
}

bool EndpointPermutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if (images_[i - 1] != i) return false;
  }
  return true;
}

BraidWord parse_braid(std::string_view text, int strand_count) {
  check_strand_count(strand_count);
  std::vector<int> values;
  std::istringstream stream{std::string(text)};
  std::string token;
  int position = 0;
  while (stream >> token) {
    ++position;
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(ParseError::Kind::NonIntegerToken,
                       "token " + std::to_string(position) + " ('" + token +
                           "') is not an integer");
    }
    values.push_back(v);
  }
  return BraidWord::from_values(strand_count, values);
}

std::string to_text(const BraidWord& word) {
  std::string out;
  for (const BraidLetter& l : word.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

EndpointPermutation permutation_of(const BraidWord& word) {
  const int n = word.strand_count();
  // occupant[c-1] = strand (named by its start column) currently in column c
  std::vector<int> occupant(n);
  std::iota(occupant.begin(), occupant.end(), 1);
  for (const BraidLetter& l : word.letters()) {
    std::swap(occupant[l.index - 1], occupant[l.index]);
  }
  std::vector<int> images(n);
  for (int c = 1; c <= n; ++c) images[occupant[c - 1] - 1] = c;
  return EndpointPermutation(std::move(images));
}

bool preserves_parity_classes(const EndpointPermutation& perm) {
  for (int k = 1; k <= perm.size(); ++k) {
    if ((perm.image_of(k) - k) % 2 != 0) return false;
  }
  return true;
}

BraidWord concatenate(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count() != b.strand_count()) {
    throw PreconditionError("cannot concatenate words on " +
                            std::to_string(a.strand_count()) + " and " +
                            std::to_string(b.strand_count()) + " strands");
  }
  std::vector<BraidLetter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strand_count(), std::move(letters));
}

BraidWord prepend(const BraidWord& word,
                  std::span<const BraidLetter> letters) {
  std::vector<BraidLetter> out(letters.begin(), letters.end());
  out.insert(out.end(), word.letters().begin(), word.letters().end());
  return BraidWord(word.strand_count(), std::move(out));
}

BraidWord append(const BraidWord& word, std::span<const BraidLetter> letters) {
  std::vector<BraidLetter> out = word.letters();
  out.insert(out.end(), letters.begin(), letters.end());
  return BraidWord(word.strand_count(), std::move(out));
}

}  // namespace platcover
