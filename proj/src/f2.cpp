#include "altcohom/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace altcohom {

bool BitVec::any() const {
    for (auto x : w_)
        if (x) return true;
    return false;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
}

std::size_t BitVec::first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
    return n_;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVec size mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
}

bool BitVec::operator<(const BitVec& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return w_ < o.w_;
}

std::string BitVec::str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitVec BitVec::from_string(const std::string& s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1') v.set(i);
    return v;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVec>& rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitVec BitMatrix::row_vec(std::size_t r) const {
    BitVec v(cols_);
    std::copy(row(r), row(r) + wpr_, v.words().begin());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    std::copy(v.words().begin(), v.words().end(), row(r));
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const uint64_t* p = row(r);
        for (std::size_t k = 0; k < wpr_; ++k) {
            uint64_t x = p[k];
            while (x) {
                std::size_t c = k * 64 + std::countr_zero(x);
                x &= x - 1;
                t.set(c, r);
            }
        }
    }
    return t;
}

BitVec BitMatrix::mul(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("mul size mismatch");
    BitVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const uint64_t* p = row(r);
        uint64_t acc = 0;
        for (std::size_t k = 0; k < wpr_; ++k) acc ^= p[k] & v.words()[k];
        if (std::popcount(acc) & 1) out.set(r);
    }
    return out;
}

BitMatrix BitMatrix::mul(const BitMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("mul size mismatch");
    BitMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        uint64_t* dst = out.row(r);
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) {
                const uint64_t* src = o.row(c);
                for (std::size_t k = 0; k < out.wpr_; ++k) dst[k] ^= src[k];
            }
    }
    return out;
}

bool BitMatrix::is_zero() const {
    for (auto x : bits_)
        if (x) return false;
    return true;
}

namespace {

// Gaussian elimination in place; returns pivot columns in row order.
std::vector<std::size_t> eliminate(BitMatrix& m, bool reduced) {
    std::vector<std::size_t> piv;
    std::size_t r = 0, w = m.words_per_row();
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t k = c >> 6;
        uint64_t bit = uint64_t{1} << (c & 63);
        std::size_t p = r;
        while (p < m.rows() && !(m.row(p)[k] & bit)) ++p;
        if (p == m.rows()) continue;
        if (p != r) std::swap_ranges(m.row(p), m.row(p) + w, m.row(r));
        const uint64_t* pr = m.row(r);
        for (std::size_t i = reduced ? 0 : r + 1; i < m.rows(); ++i) {
            if (i == r) continue;
            uint64_t* ri = m.row(i);
            if (ri[k] & bit)
                for (std::size_t j = k; j < w; ++j) ri[j] ^= pr[j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
    BitMatrix a = m;
    return eliminate(a, false).size();
}

std::vector<BitVec> kernel_basis(const BitMatrix& m) {
    BitMatrix a = m;
    auto piv = eliminate(a, true);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<BitVec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        BitVec v(m.cols());
        v.set(f);
        for (std::size_t r = 0; r < piv.size(); ++r)
            if (a.get(r, f)) v.set(piv[r]);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<BitVec> solve_in_span(const BitMatrix& rows, const BitVec& target) {
    Echelon e(rows.cols(), true);
    for (std::size_t r = 0; r < rows.rows(); ++r) e.insert(rows.row_vec(r));
    return e.express(target);
}

BitVec Echelon::reduce(BitVec& v) const {
    BitVec used(track_ ? inserted_ : 0);
    if (piv_row_.empty()) return used;
    const std::size_t nw = v.words().size();
    for (std::size_t k = 0; k < nw; ++k) {
        uint64_t x;
        while ((x = v.words()[k]) != 0) {
            // scan set bits of this word for a pivot
            bool hit = false;
            uint64_t y = x;
            while (y) {
                std::size_t c = k * 64 + std::countr_zero(y);
                y &= y - 1;
                int r = piv_row_[c];
                if (r >= 0) {
                    v ^= rows_[r];
                    if (track_) {
                        BitVec cmb = combo_[r];
                        std::vector<uint64_t>& uw = used.words();
                        for (std::size_t j = 0; j < cmb.words().size(); ++j) uw[j] ^= cmb.words()[j];
                    }
                    hit = true;
                    break;
                }
            }
            if (!hit) break;
        }
    }
    return used;
}

bool Echelon::insert(const BitVec& v0) {
    if (v0.size() != cols_) throw std::invalid_argument("Echelon insert size mismatch");
    if (piv_row_.empty()) piv_row_.assign(cols_, -1);
    BitVec v = v0;
    BitVec used = reduce(v);
    std::size_t idx = inserted_++;
    if (track_) {
        for (auto& c : combo_) {
            BitVec g(inserted_);
            std::copy(c.words().begin(), c.words().end(), g.words().begin());
            c = std::move(g);
        }
        BitVec g(inserted_);
        std::copy(used.words().begin(), used.words().end(), g.words().begin());
        used = std::move(g);
        used.flip(idx);
    }
    if (!v.any()) return false;
    std::size_t p = v.first();
    piv_row_[p] = static_cast<int>(rows_.size());
    piv_.push_back(p);
    rows_.push_back(std::move(v));
    if (track_) combo_.push_back(std::move(used));
    return true;
}

bool Echelon::contains(const BitVec& v0) const {
    BitVec v = v0;
    reduce(v);
    return !v.any();
}

std::optional<BitVec> Echelon::express(const BitVec& v0) const {
    if (!track_) throw std::logic_error("Echelon::express needs tracking");
    BitVec v = v0;
    BitVec used = reduce(v);
    if (v.any()) return std::nullopt;
    BitVec out(inserted_);
    if (used.size() == inserted_) out = used;
    return out;
}

namespace {
std::vector<uint32_t> symdiff(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) out.push_back(a[i++]);
        else if (b[j] < a[i]) out.push_back(b[j++]);
        else {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

void normalize_row(std::vector<uint32_t>& r) {
    std::sort(r.begin(), r.end());
    std::vector<uint32_t> out;
    for (std::size_t i = 0; i < r.size();) {
        std::size_t j = i;
        while (j < r.size() && r[j] == r[i]) ++j;
        if ((j - i) & 1) out.push_back(r[i]);
        i = j;
    }
    r.swap(out);
}
}  // namespace

std::size_t sparse_rank(std::vector<std::vector<uint32_t>> rows, std::size_t cols) {
    for (auto& r : rows) normalize_row(r);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<int> piv(cols, -1);
    std::vector<std::vector<uint32_t>> stored;
    // pivot on the largest column index; on the cochain complexes here this keeps
    // fill-in lower than pivoting on the smallest
    for (auto& r : rows) {
        while (!r.empty()) {
            int p = piv[r.back()];
            if (p < 0) {
                piv[r.back()] = static_cast<int>(stored.size());
                stored.push_back(std::move(r));
                break;
            }
            r = symdiff(r, stored[p]);
        }
    }
    return stored.size();
}

std::vector<Shuffle> shuffles(int p, int q) {
    std::vector<Shuffle> out;
    if (p < 0 || q < 0) return out;
    std::vector<uint8_t> pat(p + q, 0);
    std::fill(pat.begin() + p, pat.end(), 1);
    do {
        Shuffle s;
        s.pattern = pat;
        int ones = 0, inv = 0;
        for (auto b : pat) {
            if (b) ++ones;
            else inv += ones;
        }
        s.odd = inv & 1;
        out.push_back(std::move(s));
    } while (std::next_permutation(pat.begin(), pat.end()));
    return out;
}

bool binom_mod2(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return false;
    return (k & (n - k)) == 0;
}

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {
void comp_rec(int left, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = 0; a <= left; ++a) {
        cur.push_back(a);
        comp_rec(left - a, parts - 1, cur, out);
        cur.pop_back();
    }
}

void pos_rec(int left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int a = 1; a <= left; ++a) {
        cur.push_back(a);
        pos_rec(left - a, cur, out);
        cur.pop_back();
    }
}

void part_rec(int left, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int a = std::min(left, cap); a >= 1; --a) {
        cur.push_back(a);
        part_rec(left - a, a, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> compositions(int n, int parts) {
    std::vector<std::vector<int>> out;
    if (parts <= 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur;
    comp_rec(n, parts, cur, out);
    return out;
}

std::vector<std::vector<int>> positive_compositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    pos_rec(n, cur, out);
    return out;
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    part_rec(n, n, cur, out);
    return out;
}

}  // namespace altcohom
