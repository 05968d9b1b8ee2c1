#include "crucial/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace crucial {

std::string to_string(CrucialType type) {
    switch (type) {
        case CrucialType::right: return "right";
        case CrucialType::left: return "left";
        case CrucialType::top: return "top";
        case CrucialType::bottom: return "bottom";
        case CrucialType::bicrucial: return "bi";
        case CrucialType::top_right: return "top_right";
        case CrucialType::tricrucial: return "tri";
        case CrucialType::quadrocrucial: return "quadro";
    }
    return "?";
}

CrucialType crucial_type_from_string(const std::string& name) {
    for (CrucialType t : kAllCrucialTypes)
        if (to_string(t) == name) return t;
    throw std::invalid_argument("unknown crucial type: " + name);
}

bool CrucialClass::has(CrucialType type) const {
    switch (type) {
        case CrucialType::right: return right;
        case CrucialType::left: return left;
        case CrucialType::top: return top;
        case CrucialType::bottom: return bottom;
        case CrucialType::bicrucial: return bicrucial();
        case CrucialType::top_right: return top_right();
        case CrucialType::tricrucial: return tricrucial();
        case CrucialType::quadrocrucial: return quadrocrucial();
    }
    return false;
}

namespace {

enum class Side { right, left, above, below };

// Writes the extension of `word` by `choice` into `buf` (size n+1).
// For right/left, choice is the new value i of the value-shift map; for
// above/below it is the 1-based insertion position.
void build_extension(std::span<const int> word, int choice, Side side, std::vector<int>& buf) {
    const int n = static_cast<int>(word.size());
    buf.resize(static_cast<size_t>(n) + 1);
    switch (side) {
        case Side::right:
            for (int i = 0; i < n; ++i)
                buf[static_cast<size_t>(i)] = word[static_cast<size_t>(i)] >= choice
                                                  ? word[static_cast<size_t>(i)] + 1
                                                  : word[static_cast<size_t>(i)];
            buf[static_cast<size_t>(n)] = choice;
            break;
        case Side::left:
            buf[0] = choice;
            for (int i = 0; i < n; ++i)
                buf[static_cast<size_t>(i) + 1] = word[static_cast<size_t>(i)] >= choice
                                                      ? word[static_cast<size_t>(i)] + 1
                                                      : word[static_cast<size_t>(i)];
            break;
        case Side::above: {
            int out = 0;
            for (int i = 0; i < n + 1; ++i) {
                if (i == choice - 1) buf[static_cast<size_t>(out++)] = n + 1;
                if (i < n) buf[static_cast<size_t>(out++)] = word[static_cast<size_t>(i)];
            }
            break;
        }
        case Side::below: {
            int out = 0;
            for (int i = 0; i < n + 1; ++i) {
                if (i == choice - 1) buf[static_cast<size_t>(out++)] = 1;
                if (i < n) buf[static_cast<size_t>(out++)] = word[static_cast<size_t>(i)] + 1;
            }
            break;
        }
    }
}

// True iff every one of the n+1 extensions on the given side stops avoiding.
bool every_extension_hits(std::span<const int> word, PatternSpec spec, Side side, std::vector<int>& buf) {
    const int n = static_cast<int>(word.size());
    for (int choice = 1; choice <= n + 1; ++choice) {
        build_extension(word, choice, side, buf);
        if (avoids(buf, spec)) return false;
    }
    return true;
}

}  // namespace

CrucialClass classify_direct(std::span<const int> word, PatternSpec spec) {
    CrucialClass cc;
    cc.n = static_cast<int>(word.size());
    cc.k = spec.k;
    cc.l = spec.l;
    if (!avoids(word, spec)) return cc;
    std::vector<int> buf;
    cc.right = every_extension_hits(word, spec, Side::right, buf);
    cc.left = every_extension_hits(word, spec, Side::left, buf);
    cc.top = every_extension_hits(word, spec, Side::above, buf);
    cc.bottom = every_extension_hits(word, spec, Side::below, buf);
    return cc;
}

CrucialClass classify_direct(const Permutation& p, PatternSpec spec) {
    return classify_direct(p.span(), spec);
}

bool is_right_crucial_direct(const Permutation& p, PatternSpec spec) {
    if (!avoids(p, spec)) return false;
    std::vector<int> buf;
    return every_extension_hits(p.span(), spec, Side::right, buf);
}

bool is_left_crucial_direct(const Permutation& p, PatternSpec spec) {
    if (!avoids(p, spec)) return false;
    std::vector<int> buf;
    return every_extension_hits(p.span(), spec, Side::left, buf);
}

bool is_top_crucial_direct(const Permutation& p, PatternSpec spec) {
    if (!avoids(p, spec)) return false;
    std::vector<int> buf;
    return every_extension_hits(p.span(), spec, Side::above, buf);
}

bool is_bottom_crucial_direct(const Permutation& p, PatternSpec spec) {
    if (!avoids(p, spec)) return false;
    std::vector<int> buf;
    return every_extension_hits(p.span(), spec, Side::below, buf);
}

bool staircase_top_right(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return true;
    int cur = rows[0].back();
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), cur);
        if (it == row.end()) return false;
        cur = *it;
    }
    return true;
}

bool staircase_bottom_left(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return true;
    int cur = rows.back()[0];
    const size_t cols = rows[0].size();
    for (size_t c = 1; c < cols; ++c) {
        bool found = false;
        for (const auto& row : rows) {
            if (row.size() <= c) break;     // rows below are shorter
            if (row[c] > cur) {             // columns increase downward, so the
                cur = row[c];               // first hit is the smallest one
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

CrucialClass classify_rsk(std::span<const int> word, PatternSpec spec) {
    return classify_rsk(Permutation::unchecked(std::vector<int>(word.begin(), word.end())), spec);
}

CrucialClass classify_rsk(const Permutation& p, PatternSpec spec) {
    CrucialClass cc;
    cc.n = p.size();
    cc.k = spec.k;
    cc.l = spec.l;
    const TableauPair pair = rsk(p);
    const auto& prows = pair.P.rows();
    const int nrows = static_cast<int>(prows.size());
    const int ncols = prows.empty() ? 0 : static_cast<int>(prows[0].size());
    if (ncols != spec.k - 1 || nrows != spec.l - 1) return cc;
    cc.right = staircase_top_right(prows);
    cc.left = staircase_bottom_left(prows);
    cc.top = staircase_top_right(pair.Q.rows());
    cc.bottom = staircase_bottom_left(pair.Q.rows());
    return cc;
}

Permutation minimal_top_right(PatternSpec spec) {
    if (spec.k < 3 || spec.l < 3)
        throw std::domain_error("minimal_top_right: requires k,l >= 3");
    std::vector<int> w;
    for (int v = 1; v <= spec.k - 2; ++v) w.push_back(v);
    for (int v = spec.k + spec.l - 3; v >= spec.k - 1; --v) w.push_back(v);
    return Permutation::unchecked(std::move(w));
}

Permutation minimal_quadrocrucial(PatternSpec spec) {
    if (spec.k < 3 || spec.l < 3)
        throw std::domain_error("minimal_quadrocrucial: requires k,l >= 3");
    const int k = spec.k, l = spec.l;
    std::vector<int> w;
    for (int v = l - 1; v >= 1; --v) w.push_back(v);
    for (int v = l; v <= l + k - 4; ++v) w.push_back(v);
    for (int v = k + 2 * l - 5; v >= k + l - 3; --v) w.push_back(v);
    return Permutation::unchecked(std::move(w));
}

Permutation counterexample_quadrocrucial(PatternSpec spec) {
    if (spec.k < 3 || spec.l < 3)
        throw std::domain_error("counterexample_quadrocrucial: requires k,l >= 3");
    const int k = spec.k, l = spec.l;
    std::vector<int> w;
    for (int v = k + l - 4; v >= k - 1; --v) w.push_back(v);
    for (int v = k + 2 * l - 5; v <= 2 * k + 2 * l - 8; ++v) w.push_back(v);
    for (int v = 1; v <= k - 2; ++v) w.push_back(v);
    for (int v = k + 2 * l - 6; v >= k + l - 3; --v) w.push_back(v);
    return Permutation::unchecked(std::move(w));
}

Permutation double_element(const Permutation& p, int x, bool larger_first) {
    const int n = p.size();
    if (x < 1 || x > n) throw std::invalid_argument("double_element: value out of range");
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n) + 1);
    for (int v : p.word()) {
        if (v == x) {
            if (larger_first) {
                w.push_back(x + 1);
                w.push_back(x);
            } else {
                w.push_back(x);
                w.push_back(x + 1);
            }
        } else {
            w.push_back(v > x ? v + 1 : v);
        }
    }
    return Permutation::unchecked(std::move(w));
}

bool is_non_extendable(const Permutation& p, PatternSpec spec, CrucialType type) {
    if (!classify_direct(p, spec).has(type))
        throw std::invalid_argument("is_non_extendable: permutation is not of the given type");
    const int n = p.size();
    for (int pos = 1; pos <= n + 1; ++pos)
        for (int value = 1; value <= n + 1; ++value)
            if (classify_direct(insert_element(p, pos, value), spec).has(type)) return false;
    return true;
}

bool is_irreducible(const Permutation& p, PatternSpec spec, CrucialType type) {
    if (!classify_direct(p, spec).has(type))
        throw std::invalid_argument("is_irreducible: permutation is not of the given type");
    for (int pos = 1; pos <= p.size(); ++pos)
        if (classify_direct(remove_element(p, pos), spec).has(type)) return false;
    return true;
}

namespace {

// True iff the given values appear in `word` in ascending (or descending)
// order of position matching ascending value order.
bool values_in_monotone_order(const std::vector<int>& word, int lo, int hi, bool ascending) {
    std::vector<int> pos;
    for (size_t i = 0; i < word.size(); ++i)
        if (word[i] >= lo && word[i] <= hi) pos.push_back(ascending ? word[i] : -word[i]);
    return std::is_sorted(pos.begin(), pos.end());
}

}  // namespace

bool has_minimal_right_crucial_form(const Permutation& p, PatternSpec spec) {
    const int k = spec.k, l = spec.l;
    const int n = k + l - 3;
    if (p.size() != n) return false;
    if (p.word().back() != k - 1) return false;
    return values_in_monotone_order(p.word(), 1, k - 2, true) &&
           values_in_monotone_order(p.word(), k, k + l - 3, false);
}

namespace {

bool minimal_bicrucial_word_form(const Permutation& p, int k, int l) {
    if (p.size() != k + 2 * l - 5) return false;
    if (p.word().front() != l - 1 || p.word().back() != k + l - 3) return false;
    return values_in_monotone_order(p.word(), 1, l - 1, false) &&
           values_in_monotone_order(p.word(), k + l - 3, k + 2 * l - 5, false) &&
           values_in_monotone_order(p.word(), l - 1, k + l - 3, true);
}

}  // namespace

bool has_minimal_bicrucial_form(const Permutation& p, PatternSpec spec) {
    const int k = spec.k, l = spec.l;
    if (k < l) return has_minimal_bicrucial_form(reverse(p), spec.swapped());
    if (k == l)
        // both insertion-tableau orientations occur; the second family is the
        // complement image of the first
        return minimal_bicrucial_word_form(p, k, l) ||
               minimal_bicrucial_word_form(complement(p), k, l);
    return minimal_bicrucial_word_form(p, k, l);
}

}  // namespace crucial
