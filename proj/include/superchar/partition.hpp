#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superchar/bigint.hpp"

namespace superchar {

/// Integer partition: weakly decreasing positive rows, trailing zeros stripped.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> rows);

    static Partition single_row(int a) { return a > 0 ? Partition({a}) : Partition(); }

    int size() const;                    // |lambda|
    int length() const { return static_cast<int>(rows_.size()); }
    int row(int i) const {               // 0-based, 0 beyond the last row
        return i >= 0 && i < length() ? rows_[i] : 0;
    }
    const std::vector<int>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }

    Partition conjugate() const;
    bool in_hook(int m, int n) const { return row(m) <= n; }
    bool contains(const Partition& mu) const;
    bool rows_all_even() const;
    bool cols_all_even() const;

    /// Replace the first column by one of length d - lambda'_1.
    /// Requires lambda'_1 + lambda'_2 <= d.
    Partition bar(int d) const;

    std::string to_string() const;       // "[3,1]", "[]"
    static Partition parse(const std::string& s);

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> rows_;
};

struct PartitionConstraints {
    std::optional<int> max_length;
    std::optional<int> col_sum_bound_d;  // lambda'_1 + lambda'_2 <= d
    bool even_rows = false;
    bool even_cols = false;
    std::optional<std::pair<int, int>> hook;  // (m, n)
};

/// All partitions with |lambda| <= max_size meeting the constraints,
/// ordered by (size, then lexicographically descending rows).
std::vector<Partition> enumerate_partitions(int max_size, const PartitionConstraints& c = {});

/// Generalized weight vector with doubled-integer entries (value = twice/2).
/// All entries must share parity: genuinely integral or genuinely half-integral.
struct GeneralizedVector {
    std::vector<long long> twice;

    GeneralizedVector() = default;
    explicit GeneralizedVector(std::vector<long long> t);
    static GeneralizedVector from_ints(const std::vector<int>& v);

    int length() const { return static_cast<int>(twice.size()); }
    bool is_integral() const;
    bool weakly_decreasing() const;
    std::string to_string() const;

    auto operator<=>(const GeneralizedVector&) const = default;
};

/// One cell of an (m|n)-semistandard filling.
struct HookCell {
    bool odd = false;
    int letter = 0;  // 1..m for even letters, 1..n for odd letters
    auto operator<=>(const HookCell&) const = default;
};

/// (m|n)-semistandard tableau: even letters fill a sub-diagram mu semistandardly,
/// odd letters fill lambda/mu so that its transpose is semistandard.
struct HookTableau {
    Partition shape;
    std::vector<std::vector<HookCell>> cells;  // row-major

    std::vector<int> even_weight(int m) const;  // multiplicity of each even letter
    std::vector<int> odd_weight(int n) const;
    auto operator<=>(const HookTableau&) const = default;
};

std::vector<HookTableau> enumerate_hook_tableaux(const Partition& la, int m, int n);

/// Number of semistandard tableaux of shape lambda in k ordinary letters,
/// i.e. s_lambda(1^k), by the hook-content style product over the diagram.
Int ssyt_count(const Partition& la, int k);

/// gl(m|n) weight labels of a hook diagram:
/// (la_1,...,la_m; <la'_1-m>,...,<la'_n-m>) with <r> = max(r,0).
std::vector<int> glmn_labels(const Partition& la, int m, int n);

enum class SuperKind { spo, osp };

/// Dynkin labels of the highest weight module attached to a gl(m|n) weight
/// (doubled-integer entries in, doubled-integer labels out).
std::vector<long long> dynkin_labels(const GeneralizedVector& mu, int m, int n, SuperKind kind);

} // namespace superchar
