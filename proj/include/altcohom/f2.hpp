#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace altcohom {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        if (v) w_[i >> 6] |= (uint64_t{1} << (i & 63));
        else w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= (uint64_t{1} << (i & 63)); }
    bool any() const;
    std::size_t popcount() const;
    // lowest set index, or size() if zero
    std::size_t first() const;
    BitVec& operator^=(const BitVec& o);
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const BitVec& o) const;

    std::vector<uint64_t>& words() { return w_; }
    const std::vector<uint64_t>& words() const { return w_; }
    std::string str() const;

    static BitVec from_string(const std::string& s);
    static BitVec unit(std::size_t n, std::size_t i) {
        BitVec v(n);
        v.set(i);
        return v;
    }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * ((cols + 63) / 64), 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
    void set(std::size_t r, std::size_t c, bool v = true) {
        uint64_t m = uint64_t{1} << (c & 63);
        if (v) row(r)[c >> 6] |= m;
        else row(r)[c >> 6] &= ~m;
    }
    void flip(std::size_t r, std::size_t c) { row(r)[c >> 6] ^= (uint64_t{1} << (c & 63)); }

    uint64_t* row(std::size_t r) { return bits_.data() + r * wpr_; }
    const uint64_t* row(std::size_t r) const { return bits_.data() + r * wpr_; }
    BitVec row_vec(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);

    BitMatrix transpose() const;
    BitVec mul(const BitVec& v) const;  // M·v
    BitMatrix mul(const BitMatrix& o) const;
    bool is_zero() const;

    const std::vector<uint64_t>& bits() const { return bits_; }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> bits_;
};

std::size_t rank(const BitMatrix& m);
std::vector<BitVec> kernel_basis(const BitMatrix& m);
// c with c^T·rows = target
std::optional<BitVec> solve_in_span(const BitMatrix& rows, const BitVec& target);

// Incremental row echelon form; optionally tracks how each stored row was built
// from the inserted vectors.
class Echelon {
public:
    explicit Echelon(std::size_t cols, bool track = false) : cols_(cols), track_(track) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }

    // reduces v in place against stored rows; returns combination of inserted vectors used
    BitVec reduce(BitVec& v) const;
    // returns true if v was independent
    bool insert(const BitVec& v);
    bool contains(const BitVec& v) const;
    // coefficients over inserted vectors, if v lies in the span (requires tracking)
    std::optional<BitVec> express(const BitVec& v) const;
    const std::vector<BitVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

private:
    std::size_t cols_;
    bool track_;
    std::size_t inserted_ = 0;
    std::vector<BitVec> rows_, combo_;
    std::vector<std::size_t> piv_;
    std::vector<int> piv_row_;  // column -> row index or -1
};

// rank of a sparse matrix given as rows of column indices (duplicates cancel)
std::size_t sparse_rank(std::vector<std::vector<uint32_t>> rows, std::size_t cols);

struct Shuffle {
    std::vector<uint8_t> pattern;  // 0: first-group slot, 1: second-group slot
    bool odd = false;
};

std::vector<Shuffle> shuffles(int p, int q);
bool binom_mod2(long long n, long long k);
long long binom(long long n, long long k);

// ordered sequences of `parts` non-negative integers summing to n
std::vector<std::vector<int>> compositions(int n, int parts);
// ordered sequences of positive integers summing to n
std::vector<std::vector<int>> positive_compositions(int n);
// non-increasing sequences of positive integers summing to n
std::vector<std::vector<int>> partitions(int n);

}  // namespace altcohom
