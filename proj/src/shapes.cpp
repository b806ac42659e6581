#include "fusion/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "fusion/errors.hpp"

namespace fusion {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    for (size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] < 0) throw ParseError("negative part in partition");
        if (i + 1 < p_.size() && p_[i] < p_[i + 1])
            throw ParseError("partition parts must be non-increasing");
    }
}

Partition Partition::parse(std::string_view s) {
    std::vector<int> parts;
    if (s.empty()) return {};
    std::string buf(s);
    std::stringstream ss(buf);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad partition '" + buf + "'");
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

std::string Partition::str() const {
    if (p_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < p_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p_[i]);
    }
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> c(p.empty() ? 0 : p[1]);
    for (int j = 1; j <= static_cast<int>(c.size()); ++j)
        for (int i = 1; i <= p.length(); ++i)
            if (p[i] >= j) ++c[j - 1];
    return Partition(std::move(c));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(left, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

bool SkewShape::contains(const Cell& c) const { return index_of(c) >= 0; }

int SkewShape::index_of(const Cell& c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    return it != cells_.end() && *it == c ? static_cast<int>(it - cells_.begin()) : -1;
}

std::string SkewShape::str() const {
    return mu_.empty() ? lambda_.str() : lambda_.str() + "/" + mu_.str();
}

SkewShape skew(const Partition& lambda, const Partition& mu) {
    for (int i = 1; i <= std::max(lambda.length(), mu.length()); ++i)
        if (mu[i] > lambda[i])
            throw ContainmentError("mu = (" + mu.str() + ") is not contained in lambda = (" +
                                   lambda.str() + ")");
    SkewShape s;
    s.lambda_ = lambda;
    s.mu_ = mu;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = mu[i] + 1; j <= lambda[i]; ++j) s.cells_.push_back({i, j});
    return s;
}

SkewShape parse_skew(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return skew(Partition::parse(s));
    return skew(Partition::parse(s.substr(0, slash)), Partition::parse(s.substr(slash + 1)));
}

bool is_standard_filling(const SkewShape& s, const std::vector<int>& entries) {
    const int n = s.n();
    if (static_cast<int>(entries.size()) != n) return false;
    std::vector<int> seen(n + 1, 0);
    for (int e : entries) {
        if (e < 1 || e > n || seen[e]++) return false;
    }
    const auto& cells = s.cells();
    for (int i = 0; i < n; ++i) {
        int right = s.index_of({cells[i].row, cells[i].col + 1});
        if (right >= 0 && entries[right] <= entries[i]) return false;
        int below = s.index_of({cells[i].row + 1, cells[i].col});
        if (below >= 0 && entries[below] <= entries[i]) return false;
    }
    return true;
}

StandardTableau::StandardTableau(SkewShape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (!is_standard_filling(shape_, entries_))
        throw WrongTableau("filling is not a standard tableau of shape " + shape_.str());
    pos_.assign(entries_.size(), 0);
    for (size_t i = 0; i < entries_.size(); ++i) pos_[entries_[i] - 1] = static_cast<int>(i);
}

StandardTableau StandardTableau::from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts, entries;
    for (const auto& r : rows) {
        parts.push_back(static_cast<int>(r.size()));
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return StandardTableau(skew(Partition(parts)), entries);
}

std::vector<int> StandardTableau::contents() const {
    std::vector<int> c(n());
    for (int k = 1; k <= n(); ++k) c[k - 1] = content_of(k);
    return c;
}

int StandardTableau::entry_at(const Cell& c) const {
    int i = shape_.index_of(c);
    return i < 0 ? 0 : entries_[i];
}

std::vector<std::vector<int>> StandardTableau::rows() const {
    std::vector<std::vector<int>> out(shape_.lambda().length());
    for (int i = 0; i < n(); ++i) out[shape_.cells()[i].row - 1].push_back(entries_[i]);
    return out;
}

std::string StandardTableau::str() const {
    std::string out;
    auto r = rows();
    for (size_t i = 0; i < r.size(); ++i) {
        if (i) out += " / ";
        int pad = shape_.mu()[static_cast<int>(i) + 1];
        std::string row(pad, '.');
        for (size_t j = 0; j < r[i].size(); ++j) {
            if (j || pad) row += ' ';
            row += std::to_string(r[i][j]);
        }
        out += row;
    }
    return out;
}

std::optional<StandardTableau> StandardTableau::swap_adjacent(int k) const {
    if (k < 1 || k >= n()) return std::nullopt;
    std::vector<int> e = entries_;
    std::swap(e[pos_[k - 1]], e[pos_[k]]);
    if (!is_standard_filling(shape_, e)) return std::nullopt;
    return StandardTableau(shape_, std::move(e));
}

std::pair<StandardTableau, StandardTableau> StandardTableau::split(int m) const {
    if (!shape_.is_straight()) throw SkewShapeError("split needs a straight shape");
    std::vector<int> mu_parts;
    for (const auto& r : rows()) {
        int cnt = static_cast<int>(std::count_if(r.begin(), r.end(), [m](int e) { return e <= m; }));
        mu_parts.push_back(cnt);
    }
    Partition mu(mu_parts);
    SkewShape inner = skew(mu);
    std::vector<int> inner_e;
    for (const auto& c : inner.cells()) inner_e.push_back(entry_at(c));
    SkewShape outer = skew(shape_.lambda(), mu);
    std::vector<int> outer_e;
    for (const auto& c : outer.cells()) outer_e.push_back(entry_at(c) - m);
    return {StandardTableau(inner, inner_e), StandardTableau(outer, outer_e)};
}

StandardTableau row_tableau(const SkewShape& s) {
    std::vector<int> e(s.n());
    std::iota(e.begin(), e.end(), 1);
    return StandardTableau(s, e);
}

StandardTableau column_tableau(const SkewShape& s) {
    std::vector<int> order(s.n());
    std::iota(order.begin(), order.end(), 0);
    const auto& cells = s.cells();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(cells[a].col, cells[a].row) < std::pair(cells[b].col, cells[b].row);
    });
    std::vector<int> e(s.n());
    for (int k = 0; k < s.n(); ++k) e[order[k]] = k + 1;
    return StandardTableau(s, e);
}

std::vector<StandardTableau> standard_tableaux(const SkewShape& s) {
    const int n = s.n();
    const auto& cells = s.cells();
    std::vector<int> e(n, 0);
    std::vector<std::vector<int>> found;
    // A cell may take the next number once its upper and left neighbours in
    // the shape are filled.
    auto ready = [&](int i) {
        int up = s.index_of({cells[i].row - 1, cells[i].col});
        int left = s.index_of({cells[i].row, cells[i].col - 1});
        return (up < 0 || e[up]) && (left < 0 || e[left]);
    };
    std::function<void(int)> rec = [&](int k) {
        if (k > n) {
            found.push_back(e);
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (e[i] || !ready(i)) continue;
            e[i] = k;
            rec(k + 1);
            e[i] = 0;
        }
    };
    rec(1);
    std::sort(found.begin(), found.end());
    std::vector<StandardTableau> out;
    for (auto& f : found) out.emplace_back(s, std::move(f));
    return out;
}

std::vector<SkewShape> skew_shapes_up_to(int max_l, int max_n) {
    std::vector<SkewShape> out;
    for (int l = 1; l <= max_l; ++l)
        for (const auto& lambda : partitions_of(l))
            for (int m = std::max(0, l - max_n); m < l; ++m)
                for (const auto& mu : partitions_of(m)) {
                    bool inside = true;
                    for (int i = 1; i <= mu.length(); ++i) inside = inside && mu[i] <= lambda[i];
                    if (inside) out.push_back(skew(lambda, mu));
                }
    return out;
}

long dim_sym_irrep(const Partition& p) {
    return static_cast<long>(standard_tableaux(skew(p)).size());
}

long hook_length_dim(const Partition& p) {
    Partition c = conjugate(p);
    long num = 1, den = 1;
    for (int k = 2; k <= p.size(); ++k) num *= k;
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p[i]; ++j) den *= (p[i] - j) + (c[j] - i) + 1;
    return num / den;
}

Group parse_group(std::string_view s) {
    if (s == "GL") return Group::GL;
    if (s == "O") return Group::O;
    if (s == "Sp") return Group::Sp;
    throw ParseError("unknown group '" + std::string(s) + "' (expected GL, O, Sp)");
}

const char* group_name(Group g) {
    switch (g) {
        case Group::GL: return "GL";
        case Group::O: return "O";
        case Group::Sp: return "Sp";
    }
    return "?";
}

bool validate_label(const Partition& p, Group g, int dim) {
    if (g == Group::Sp && dim % 2 != 0) throw ParityError("Sp needs an even dimension, got " + std::to_string(dim));
    Partition c = conjugate(p);
    switch (g) {
        case Group::GL: return c[1] <= dim;
        case Group::O: return c[1] + c[2] <= dim;
        case Group::Sp: return 2 * c[1] <= dim;
    }
    return false;
}

long count_semistandard(const SkewShape& s, int N) {
    const auto& cells = s.cells();
    const int n = s.n();
    std::vector<int> v(n, 0);
    long count = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            ++count;
            return;
        }
        int lo = 1;
        int left = s.index_of({cells[i].row, cells[i].col - 1});
        if (left >= 0) lo = std::max(lo, v[left]);
        int up = s.index_of({cells[i].row - 1, cells[i].col});
        if (up >= 0) lo = std::max(lo, v[up] + 1);
        for (int x = lo; x <= N; ++x) {
            v[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace fusion
