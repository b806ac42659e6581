#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fusion {

class Partition {
public:
    Partition() = default;
    // Throws ParseError on increasing or negative parts.
    Partition(std::vector<int> parts);
    // "5,3,3,3,3"; empty string or "0" gives the empty partition.
    static Partition parse(std::string_view s);

    const std::vector<int>& parts() const { return p_; }
    int length() const { return static_cast<int>(p_.size()); }
    int size() const;
    // 1-based; zero past the end.
    int operator[](int i) const { return i >= 1 && i <= length() ? p_[i - 1] : 0; }
    bool empty() const { return p_.empty(); }
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> p_;
};

Partition conjugate(const Partition& p);
std::vector<Partition> partitions_of(int n);

struct Cell {
    int row;
    int col;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline int content(const Cell& c) { return c.col - c.row; }

class SkewShape {
public:
    SkewShape() = default;
    const Partition& lambda() const { return lambda_; }
    const Partition& mu() const { return mu_; }
    // Sorted by (row, col).
    const std::vector<Cell>& cells() const { return cells_; }
    int n() const { return static_cast<int>(cells_.size()); }
    bool is_straight() const { return mu_.empty(); }
    bool contains(const Cell& c) const;
    // Index into cells(), or -1.
    int index_of(const Cell& c) const;
    std::string str() const;

    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.lambda_ == b.lambda_ && a.mu_ == b.mu_;
    }

private:
    friend SkewShape skew(const Partition&, const Partition&);
    Partition lambda_, mu_;
    std::vector<Cell> cells_;
};

// Throws ContainmentError when mu is not inside lambda.
SkewShape skew(const Partition& lambda, const Partition& mu = {});
SkewShape parse_skew(std::string_view s);

class StandardTableau {
public:
    // entries[i] is the number in shape.cells()[i]; throws WrongTableau when
    // not a standard filling.
    StandardTableau(SkewShape shape, std::vector<int> entries);
    // Rows of numbers, for straight shapes: {{1,2},{3}}.
    static StandardTableau from_rows(const std::vector<std::vector<int>>& rows);

    const SkewShape& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    const std::vector<int>& entries() const { return entries_; }
    // Cell holding k (1-based).
    const Cell& cell_of(int k) const { return shape_.cells()[pos_[k - 1]]; }
    int content_of(int k) const { return content(cell_of(k)); }
    std::vector<int> contents() const;
    int entry_at(const Cell& c) const;
    std::vector<std::vector<int>> rows() const;
    std::string str() const;

    // s_k applied to the numbers; nullopt when the result is not standard.
    std::optional<StandardTableau> swap_adjacent(int k) const;
    // Entries 1..m form a tableau of shape mu; entries m+1..l shifted down by
    // m form a tableau of the skew shape lambda/mu. Straight shapes only.
    std::pair<StandardTableau, StandardTableau> split(int m) const;

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.shape_ == b.shape_ && a.entries_ == b.entries_;
    }

private:
    SkewShape shape_;
    std::vector<int> entries_;
    std::vector<int> pos_;
};

bool is_standard_filling(const SkewShape& s, const std::vector<int>& entries);
StandardTableau row_tableau(const SkewShape& s);
StandardTableau column_tableau(const SkewShape& s);
// Lexicographic on entries().
std::vector<StandardTableau> standard_tableaux(const SkewShape& s);
// Skew shapes lambda/mu with |lambda| <= max_l and 1 <= n <= max_n.
std::vector<SkewShape> skew_shapes_up_to(int max_l, int max_n);

// Number of standard tableaux of shape p, by enumeration.
long dim_sym_irrep(const Partition& p);
long hook_length_dim(const Partition& p);

enum class Group { GL, O, Sp };
Group parse_group(std::string_view s);
const char* group_name(Group g);

// Throws ParityError for Sp with odd dim.
bool validate_label(const Partition& p, Group g, int dim);

long count_semistandard(const SkewShape& s, int N);

}  // namespace fusion
