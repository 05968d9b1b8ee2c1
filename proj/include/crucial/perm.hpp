#ifndef CRUCIAL_PERM_HPP
#define CRUCIAL_PERM_HPP

#include <compare>
#include <span>
#include <vector>

namespace crucial {

// A permutation of {1,...,n} in one-line notation. Values and positions are
// 1-based throughout the API; the empty permutation (n = 0) is allowed.
class Permutation {
public:
    Permutation() = default;
    // Validates that `word` is a bijection on {1,...,n}; throws
    // std::invalid_argument otherwise.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    // Skips validation; caller guarantees `word` is a permutation of 1..n.
    static Permutation unchecked(std::vector<int> word);

    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }
    const std::vector<int>& word() const { return word_; }
    std::span<const int> span() const { return word_; }

    // Value at 1-based position.
    int at(int pos) const { return word_.at(static_cast<size_t>(pos) - 1); }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

// Prohibited monotone patterns: increasing of length k, decreasing of length l.
// Both bounds must be at least 2.
struct PatternSpec {
    int k;
    int l;
    PatternSpec(int k_, int l_);
    PatternSpec swapped() const { return PatternSpec(l, k); }
    friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

// Order-isomorphic copy on {1..n}: the i-th smallest entry becomes i.
// Entries must be distinct.
Permutation reduce(std::span<const int> seq);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);

// The value-i extension operators: new element appended on the chosen side
// (right/left) with existing values >= i shifted up, or a new maximum/minimum
// inserted at a 1-based position (above/below).
Permutation extend_right(const Permutation& p, int value);
Permutation extend_left(const Permutation& p, int value);
Permutation extend_above(const Permutation& p, int pos);
Permutation extend_below(const Permutation& p, int pos);

// General one-element insertion: value in 1..n+1 enters at 1-based position
// pos; existing values >= value are shifted up.
Permutation insert_element(const Permutation& p, int pos, int value);
// Deletes the element at 1-based position pos and reduces.
Permutation remove_element(const Permutation& p, int pos);

// Exact lengths of the longest strictly increasing / decreasing subsequence,
// patience-style O(n log n).
int longest_increasing_len(std::span<const int> word);
int longest_decreasing_len(std::span<const int> word);
inline int longest_increasing_len(const Permutation& p) { return longest_increasing_len(p.span()); }
inline int longest_decreasing_len(const Permutation& p) { return longest_decreasing_len(p.span()); }

// True iff the word has no increasing subsequence of length k and no
// decreasing subsequence of length l.
bool avoids(std::span<const int> word, PatternSpec spec);
inline bool avoids(const Permutation& p, PatternSpec spec) { return avoids(p.span(), spec); }

}  // namespace crucial

#endif
