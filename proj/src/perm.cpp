#include "crucial/perm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crucial {

namespace {

void check_is_permutation(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : word) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<size_t>(v)] = 1;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    check_is_permutation(word_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    return unchecked(std::move(w));
}

Permutation Permutation::unchecked(std::vector<int> word) {
    Permutation p;
    p.word_ = std::move(word);
    return p;
}

PatternSpec::PatternSpec(int k_, int l_) : k(k_), l(l_) {
    if (k < 2 || l < 2) throw std::invalid_argument("pattern lengths must be at least 2");
}

Permutation reduce(std::span<const int> seq) {
    std::vector<int> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("reduce: entries must be distinct");
    std::vector<int> out(seq.size());
    for (size_t i = 0; i < seq.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), seq[i]);
        out[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Permutation::unchecked(std::move(out));
}

Permutation reverse(const Permutation& p) {
    std::vector<int> w(p.word().rbegin(), p.word().rend());
    return Permutation::unchecked(std::move(w));
}

Permutation complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> w(p.word());
    for (int& v : w) v = n + 1 - v;
    return Permutation::unchecked(std::move(w));
}

Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(p.word()[static_cast<size_t>(i)]) - 1] = i + 1;
    return Permutation::unchecked(std::move(w));
}

Permutation extend_right(const Permutation& p, int value) {
    const int n = p.size();
    if (value < 1 || value > n + 1) throw std::invalid_argument("extend_right: value out of range");
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n) + 1);
    for (int v : p.word()) w.push_back(v >= value ? v + 1 : v);
    w.push_back(value);
    return Permutation::unchecked(std::move(w));
}

Permutation extend_left(const Permutation& p, int value) {
    const int n = p.size();
    if (value < 1 || value > n + 1) throw std::invalid_argument("extend_left: value out of range");
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n) + 1);
    w.push_back(value);
    for (int v : p.word()) w.push_back(v >= value ? v + 1 : v);
    return Permutation::unchecked(std::move(w));
}

Permutation extend_above(const Permutation& p, int pos) {
    const int n = p.size();
    if (pos < 1 || pos > n + 1) throw std::invalid_argument("extend_above: position out of range");
    std::vector<int> w(p.word());
    w.insert(w.begin() + (pos - 1), n + 1);
    return Permutation::unchecked(std::move(w));
}

Permutation extend_below(const Permutation& p, int pos) {
    const int n = p.size();
    if (pos < 1 || pos > n + 1) throw std::invalid_argument("extend_below: position out of range");
    std::vector<int> w(p.word());
    for (int& v : w) ++v;
    w.insert(w.begin() + (pos - 1), 1);
    return Permutation::unchecked(std::move(w));
}

Permutation insert_element(const Permutation& p, int pos, int value) {
    const int n = p.size();
    if (pos < 1 || pos > n + 1) throw std::invalid_argument("insert_element: position out of range");
    if (value < 1 || value > n + 1) throw std::invalid_argument("insert_element: value out of range");
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n) + 1);
    for (int v : p.word()) w.push_back(v >= value ? v + 1 : v);
    w.insert(w.begin() + (pos - 1), value);
    return Permutation::unchecked(std::move(w));
}

Permutation remove_element(const Permutation& p, int pos) {
    const int n = p.size();
    if (pos < 1 || pos > n) throw std::invalid_argument("remove_element: position out of range");
    const int gone = p.word()[static_cast<size_t>(pos) - 1];
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n) - 1);
    for (int i = 0; i < n; ++i) {
        if (i + 1 == pos) continue;
        const int v = p.word()[static_cast<size_t>(i)];
        w.push_back(v > gone ? v - 1 : v);
    }
    return Permutation::unchecked(std::move(w));
}

int longest_increasing_len(std::span<const int> word) {
    std::vector<int> tails;
    tails.reserve(word.size());
    for (int x : word) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

int longest_decreasing_len(std::span<const int> word) {
    // A strictly decreasing subsequence read backwards is strictly increasing.
    std::vector<int> tails;
    tails.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto pos = std::lower_bound(tails.begin(), tails.end(), *it);
        if (pos == tails.end())
            tails.push_back(*it);
        else
            *pos = *it;
    }
    return static_cast<int>(tails.size());
}

bool avoids(std::span<const int> word, PatternSpec spec) {
    return longest_increasing_len(word) < spec.k && longest_decreasing_len(word) < spec.l;
}

}  // namespace crucial
