#ifndef CRUCIAL_TABLEAU_HPP
#define CRUCIAL_TABLEAU_HPP

#include <compare>
#include <utility>
#include <vector>

#include "crucial/bigint.hpp"
#include "crucial/perm.hpp"

namespace crucial {

// An integer partition: weakly decreasing positive parts. The empty shape is
// allowed.
class YoungShape {
public:
    YoungShape() = default;
    explicit YoungShape(std::vector<int> parts);  // throws std::invalid_argument

    static YoungShape rectangle(int rows, int cols);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                     // total number of cells
    int rows() const { return static_cast<int>(parts_.size()); }
    int cols() const { return parts_.empty() ? 0 : parts_[0]; }
    YoungShape conjugate() const;

    friend auto operator<=>(const YoungShape&, const YoungShape&) = default;

private:
    std::vector<int> parts_;
};

// A standard Young tableau: entries are exactly {1..n}, rows and columns
// strictly increasing.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows);  // validates
    static StandardTableau unchecked(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    YoungShape shape() const;
    int size() const;

    friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

// Insertion tableau P and recording tableau Q; always of equal shape.
struct TableauPair {
    StandardTableau P;
    StandardTableau Q;
    friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

// Row-inserts x into a tableau with distinct entries and increasing rows and
// columns (entries need not be 1..n), bumping recursively. Throws if x is
// already present or the input is not such a tableau.
std::vector<std::vector<int>> row_insert(std::vector<std::vector<int>> rows, int x);

TableauPair rsk(const Permutation& p);

// Recovers the unique permutation mapping to the pair. Row insertion is
// reversible: un-bumping the cells of P in the order given by the positions
// of n, n-1, ..., 1 in Q replays the insertions backwards.
Permutation rsk_inverse(const TableauPair& pair);

StandardTableau transpose(const StandardTableau& t);

// Complement the entries (j -> n+1-j), rotate the diagram 180 degrees and
// rectify with jeu-de-taquin slides. An involution.
StandardTableau evacuation(const StandardTableau& t);

// Number of standard Young tableaux of the shape (hook length formula),
// exact.
BigInt hook_length_count(const YoungShape& shape);

// All SYT of the shape, ordered lexicographically by row-major entry word.
std::vector<StandardTableau> enumerate_syt(const YoungShape& shape);

// Visits every SYT of the shape once, as raw rows. Generation follows the
// growth of the shape one cell per value, so no dead-end branches occur.
template <class Fn>
void for_each_syt(const YoungShape& shape, Fn&& fn) {
    const auto& parts = shape.parts();
    const int nrows = shape.rows();
    const int n = shape.size();
    std::vector<std::vector<int>> rows(static_cast<size_t>(nrows));
    for (int r = 0; r < nrows; ++r) rows[static_cast<size_t>(r)].reserve(static_cast<size_t>(parts[static_cast<size_t>(r)]));
    auto rec = [&](auto&& self, int value) -> void {
        if (value > n) {
            fn(std::as_const(rows));
            return;
        }
        for (int r = 0; r < nrows; ++r) {
            auto& row = rows[static_cast<size_t>(r)];
            if (static_cast<int>(row.size()) >= parts[static_cast<size_t>(r)]) continue;
            if (r > 0 && rows[static_cast<size_t>(r) - 1].size() <= row.size()) continue;
            row.push_back(value);
            self(self, value + 1);
            row.pop_back();
        }
    };
    if (n == 0) {
        fn(std::as_const(rows));
        return;
    }
    rec(rec, 1);
}

// All partitions of n with parts bounded by max_cols and at most max_rows
// parts, in descending lexicographic order. With require_full, only
// partitions using exactly max_cols as the largest part and exactly max_rows
// parts are kept.
std::vector<YoungShape> enumerate_shapes(int n, int max_cols, int max_rows, bool require_full);

}  // namespace crucial

#endif
