#include "gw/linalg.hpp"

#include "gw/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace gw {

void SparseMatrixQ::add(int r, int c, const Rat& value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw input_error("matrix index out of range");
    if (value == 0) return;
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& entry, int col) { return entry.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += value;
        if (it->second == 0) row.erase(it);
    } else {
        row.insert(it, {c, value});
    }
}

SparseMatrixQ SparseMatrixQ::stacked(const SparseMatrixQ& other) const {
    if (cols_ != other.cols_) throw input_error("stacked matrices must share the column space");
    SparseMatrixQ out(rows_ + other.rows_, cols_);
    out.data_ = data_;
    out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
    return out;
}

SparseMatrixQ SparseMatrixQ::transposed() const {
    SparseMatrixQ out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) out.add(c, r, v);
    return out;
}

std::string SparseMatrixQ::to_json(const std::vector<std::string>& col_names) const {
    if (static_cast<int>(col_names.size()) != cols_)
        throw input_error("column name list does not match the matrix");
    nlohmann::ordered_json doc;
    doc["cols"] = col_names;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : data_) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const auto& [c, v] : row)
            jrow.push_back({c, v.get_num().get_str(), v.get_den().get_str()});
        doc["rows"].push_back(std::move(jrow));
    }
    return doc.dump();
}

namespace {

// Rows scaled to integers by the lcm of their denominators (rank is
// unchanged by nonzero row scaling).
std::vector<std::vector<Int>> integer_rows(const SparseMatrixQ& m) {
    std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols(), Int(0)));
    for (int r = 0; r < m.rows(); ++r) {
        Int scale(1);
        for (const auto& [c, v] : m.row(r)) {
            Int den = v.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
            scale = scale / g * den;
        }
        for (const auto& [c, v] : m.row(r)) rows[r][c] = v.get_num() * (scale / v.get_den());
    }
    return rows;
}

} // namespace

std::uint64_t rank_check_prime() { return 2147483647ULL; } // 2^31 - 1

int modular_rank(const SparseMatrixQ& m) {
    const std::uint64_t p = rank_check_prime();
    auto irows = integer_rows(m);
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols(), 0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            Int v = irows[r][c] % static_cast<long>(p);
            long w = v.get_si();
            a[r][c] = static_cast<std::uint64_t>(w < 0 ? w + static_cast<long>(p) : w);
        }

    auto powmod = [&](std::uint64_t base, std::uint64_t exp) {
        unsigned __int128 acc = 1, b = base;
        while (exp) {
            if (exp & 1) acc = acc * b % p;
            b = b * b % p;
            exp >>= 1;
        }
        return static_cast<std::uint64_t>(acc);
    };

    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        std::uint64_t inv = powmod(a[rank][c], p - 2);
        for (int r = rank + 1; r < m.rows(); ++r) {
            if (a[r][c] == 0) continue;
            std::uint64_t f = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(a[r][c]) * inv % p);
            for (int j = c; j < m.cols(); ++j) {
                std::uint64_t sub = static_cast<std::uint64_t>(
                    static_cast<unsigned __int128>(f) * a[rank][j] % p);
                a[r][j] = (a[r][j] + p - sub) % p;
            }
        }
        rank++;
    }
    return rank;
}

int rational_rank(const SparseMatrixQ& m) {
    auto a = integer_rows(m);
    int rank = 0;
    Int prev(1);
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        // One-step fraction-free elimination: the division by the previous
        // pivot is exact (Sylvester identity). Verified before dividing —
        // a truncating division here would corrupt the rank silently.
        for (int r = rank + 1; r < m.rows(); ++r) {
            for (int j = c + 1; j < m.cols(); ++j) {
                Int t = a[rank][c] * a[r][j] - a[r][c] * a[rank][j];
                if (prev != 1) {
                    if (t % prev != 0)
                        throw internal_error("fraction-free elimination produced a non-exact division");
                    t /= prev;
                }
                a[r][j] = std::move(t);
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank++;
    }

    int mod = modular_rank(m);
    if (mod != rank)
        throw internal_error("rank self-check failed: exact rank " + std::to_string(rank) +
                             ", rank mod " + std::to_string(rank_check_prime()) + " is " +
                             std::to_string(mod));
    return rank;
}

} // namespace gw
