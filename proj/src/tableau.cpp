#include "crucial/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace crucial {

namespace {

// Partition shape, strictly increasing rows and columns, all entries distinct.
// Entries may be arbitrary integers (row_insert works on such tableaux too).
bool is_increasing_tableau(const std::vector<std::vector<int>>& rows) {
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0 && rows[r][c - 1] >= rows[r][c]) return false;
            if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
        }
    }
    return true;
}

bool is_standard(const std::vector<std::vector<int>>& rows) {
    if (!is_increasing_tableau(rows)) return false;
    size_t n = 0;
    for (const auto& row : rows) n += row.size();
    std::vector<char> seen(n + 1, 0);
    for (const auto& row : rows)
        for (int v : row) {
            if (v < 1 || static_cast<size_t>(v) > n || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
    return true;
}

}  // namespace

YoungShape::YoungShape(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("shape parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("shape parts must be weakly decreasing");
    }
}

YoungShape YoungShape::rectangle(int nrows, int ncols) {
    if (nrows < 0 || ncols < 0) throw std::invalid_argument("rectangle: negative dimension");
    if (nrows == 0 || ncols == 0) return YoungShape();
    return YoungShape(std::vector<int>(static_cast<size_t>(nrows), ncols));
}

int YoungShape::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

YoungShape YoungShape::conjugate() const {
    std::vector<int> conj(static_cast<size_t>(cols()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
    return YoungShape(std::move(conj));
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (!is_standard(rows_)) throw std::invalid_argument("not a standard Young tableau");
}

StandardTableau StandardTableau::unchecked(std::vector<std::vector<int>> rows) {
    StandardTableau t;
    t.rows_ = std::move(rows);
    return t;
}

YoungShape StandardTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return YoungShape(std::move(parts));
}

int StandardTableau::size() const {
    int s = 0;
    for (const auto& row : rows_) s += static_cast<int>(row.size());
    return s;
}

namespace detail {

// Bumping pass without validation; used by the RSK hot path.
void row_insert_inplace(std::vector<std::vector<int>>& rows, int x) {
    size_t r = 0;
    for (;;) {
        if (r == rows.size()) rows.emplace_back();
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return;
        }
        std::swap(*it, x);
        ++r;
    }
}

}  // namespace detail

std::vector<std::vector<int>> row_insert(std::vector<std::vector<int>> rows, int x) {
    if (!rows.empty() && !is_increasing_tableau(rows))
        throw std::invalid_argument("row_insert: rows/columns must be increasing with distinct entries");
    for (const auto& row : rows)
        if (std::binary_search(row.begin(), row.end(), x))
            throw std::invalid_argument("row_insert: entry already present");
    detail::row_insert_inplace(rows, x);
    return rows;
}

TableauPair rsk(const Permutation& p) {
    std::vector<std::vector<int>> prows, qrows;
    const auto& word = p.word();
    for (size_t i = 0; i < word.size(); ++i) {
        int x = word[i];
        size_t r = 0;
        for (;;) {
            if (r == prows.size()) prows.emplace_back();
            auto& row = prows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            std::swap(*it, x);
            ++r;
        }
        if (r == qrows.size()) qrows.emplace_back();
        qrows[r].push_back(static_cast<int>(i) + 1);
    }
    return TableauPair{StandardTableau::unchecked(std::move(prows)),
                       StandardTableau::unchecked(std::move(qrows))};
}

Permutation rsk_inverse(const TableauPair& pair) {
    if (!is_standard(pair.P.rows()) || !is_standard(pair.Q.rows()))
        throw std::invalid_argument("rsk_inverse: tableaux are not standard");
    if (pair.P.shape() != pair.Q.shape())
        throw std::invalid_argument("rsk_inverse: shapes differ");

    const int n = pair.P.size();
    std::vector<std::vector<int>> prows = pair.P.rows();

    // Row index of each value of Q; value v was recorded at step v, and its
    // cell is always the last one of its row when values > v are gone.
    std::vector<int> qrow(static_cast<size_t>(n) + 1, 0);
    for (size_t r = 0; r < pair.Q.rows().size(); ++r)
        for (int v : pair.Q.rows()[r]) qrow[static_cast<size_t>(v)] = static_cast<int>(r);

    std::vector<int> word(static_cast<size_t>(n));
    for (int v = n; v >= 1; --v) {
        int r = qrow[static_cast<size_t>(v)];
        int x = prows[static_cast<size_t>(r)].back();
        prows[static_cast<size_t>(r)].pop_back();
        if (prows[static_cast<size_t>(r)].empty()) prows.pop_back();
        for (int rr = r - 1; rr >= 0; --rr) {
            auto& row = prows[static_cast<size_t>(rr)];
            // un-bump: x displaces the largest entry smaller than it
            auto it = std::lower_bound(row.begin(), row.end(), x);
            --it;
            std::swap(*it, x);
        }
        word[static_cast<size_t>(v) - 1] = x;
    }
    return Permutation::unchecked(std::move(word));
}

StandardTableau transpose(const StandardTableau& t) {
    const auto& rows = t.rows();
    if (rows.empty()) return t;
    std::vector<std::vector<int>> out(static_cast<size_t>(rows[0].size()));
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) out[c].push_back(row[c]);
    return StandardTableau::unchecked(std::move(out));
}

StandardTableau evacuation(const StandardTableau& t) {
    const int n = t.size();
    if (n == 0) return t;
    const auto& rows = t.rows();
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows[0].size());

    // Complement entries and rotate 180 degrees inside the bounding r x c
    // rectangle; -1 marks cells outside the (skew) diagram.
    std::vector<std::vector<int>> grid(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(c), -1));
    for (int i = 0; i < r; ++i)
        for (size_t j = 0; j < rows[static_cast<size_t>(i)].size(); ++j)
            grid[static_cast<size_t>(r - 1 - i)][static_cast<size_t>(c) - 1 - j] =
                n + 1 - rows[static_cast<size_t>(i)][j];

    // Leading holes of each row form the inner shape to be slid away.
    std::vector<int> inner(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i)
        inner[static_cast<size_t>(i)] = c - static_cast<int>(rows[static_cast<size_t>(r - 1 - i)].size());

    auto present = [&](int i, int j) { return i < r && j < c && grid[static_cast<size_t>(i)][static_cast<size_t>(j)] >= 0; };

    for (;;) {
        // bottom-most removable corner of the inner shape
        int start = -1;
        for (int i = r - 1; i >= 0; --i) {
            if (inner[static_cast<size_t>(i)] > 0 &&
                (i == r - 1 || inner[static_cast<size_t>(i) + 1] < inner[static_cast<size_t>(i)])) {
                start = i;
                break;
            }
        }
        if (start < 0) break;
        int i = start, j = inner[static_cast<size_t>(start)] - 1;
        while (present(i, j + 1) || present(i + 1, j)) {
            const bool take_right =
                present(i, j + 1) &&
                (!present(i + 1, j) ||
                 grid[static_cast<size_t>(i)][static_cast<size_t>(j) + 1] <
                     grid[static_cast<size_t>(i) + 1][static_cast<size_t>(j)]);
            if (take_right) {
                grid[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    grid[static_cast<size_t>(i)][static_cast<size_t>(j) + 1];
                ++j;
            } else {
                grid[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    grid[static_cast<size_t>(i) + 1][static_cast<size_t>(j)];
                ++i;
            }
            grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = -1;
        }
        inner[static_cast<size_t>(start)] -= 1;
    }

    std::vector<std::vector<int>> out;
    for (int i = 0; i < r; ++i) {
        std::vector<int> row;
        for (int j = 0; j < c && grid[static_cast<size_t>(i)][static_cast<size_t>(j)] >= 0; ++j)
            row.push_back(grid[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        if (row.empty()) break;
        out.push_back(std::move(row));
    }
    return StandardTableau(std::move(out));  // validating: slides must yield an SYT
}

BigInt hook_length_count(const YoungShape& shape) {
    const auto& parts = shape.parts();
    const auto conj = shape.conjugate().parts();
    BigInt hooks = 1;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) {
            const int arm = parts[i] - 1 - j;
            const int leg = conj[static_cast<size_t>(j)] - 1 - static_cast<int>(i);
            hooks *= arm + leg + 1;
        }
    return exact_div(factorial(shape.size()), hooks);
}

std::vector<StandardTableau> enumerate_syt(const YoungShape& shape) {
    std::vector<StandardTableau> out;
    for_each_syt(shape, [&](const std::vector<std::vector<int>>& rows) {
        out.push_back(StandardTableau::unchecked(rows));
    });
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.rows() < b.rows();  // rows share lengths, so this is row-major word order
    });
    return out;
}

std::vector<YoungShape> enumerate_shapes(int n, int max_cols, int max_rows, bool require_full) {
    std::vector<YoungShape> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            const bool full = static_cast<int>(cur.size()) == max_rows &&
                              (cur.empty() ? max_cols == 0 : cur[0] == max_cols);
            if (!require_full || full) out.push_back(YoungShape(cur));
            return;
        }
        if (static_cast<int>(cur.size()) == max_rows) return;
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    if (n < 0) return out;
    rec(rec, n, max_cols);
    return out;
}

}  // namespace crucial
