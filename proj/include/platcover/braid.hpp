#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace platcover {

// One Artin generator sigma_index^sign acting on adjacent strand columns
// (index, index+1). Sign +1 means the strand in column `index` passes over
// the strand in column index+1.
struct BraidLetter {
  int index;  // in [1, strand_count - 1]
  int sign;   // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// A word in the Artin generators of the braid group on an even number of
// strands, read from t=0 (top) toward t=1 (bottom). Words are elements of
// the free monoid: no group-theoretic reduction is ever applied.
class BraidWord {
public:
  explicit BraidWord(int strand_count, std::vector<BraidLetter> letters = {});

  int strand_count() const { return strand_count_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  // Builds a word from signed generator values (v -> sigma_|v|^sgn(v)).
  // Throws ParseError on zero or out-of-range values.
  static BraidWord from_values(int strand_count, std::span<const int> values);

  // Signed generator values, inverse of from_values.
  std::vector<int> values() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strand_count_;
  std::vector<BraidLetter> letters_;
};

// Bijection of the strand endpoint columns {1, ..., 2n} induced by a braid:
// maps the column a strand occupies at t=0 to the column it occupies at t=1.
class EndpointPermutation {
public:
  explicit EndpointPermutation(std::vector<int> images);
  static EndpointPermutation identity(int size);

  int size() const { return static_cast<int>(images_.size()); }
  int image_of(int k) const { return images_[k - 1]; }
  int preimage_of(int k) const;
  bool is_identity() const;
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const EndpointPermutation&,
                         const EndpointPermutation&) = default;

private:
  std::vector<int> images_;  // images_[k-1] = image of column k, 1-based
};

// Parses whitespace-separated nonzero signed integers into a braid word.
// Distinct ParseError kinds: non-integer token, zero token, out-of-range
// index, bad strand count.
BraidWord parse_braid(std::string_view text, int strand_count);

// Renders a word back to the text format ("2 -1 2").
std::string to_text(const BraidWord& word);

// Endpoint permutation of a word: the composition of the transpositions
// (index, index+1), applied in letter order. Letter signs are irrelevant.
EndpointPermutation permutation_of(const BraidWord& word);

// True iff odd columns map to odd columns and even columns map to even
// columns (the permutation fixes the classes F1 and F2 setwise).
bool preserves_parity_classes(const EndpointPermutation& perm);

BraidWord concatenate(const BraidWord& a, const BraidWord& b);
BraidWord prepend(const BraidWord& word, std::span<const BraidLetter> letters);
BraidWord append(const BraidWord& word, std::span<const BraidLetter> letters);

}  // namespace platcover
