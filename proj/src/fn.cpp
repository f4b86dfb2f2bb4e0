#include "altcohom/fn.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace altcohom {

int Cell::degree() const {
    int d = 0;
    for (int x : a) d += x;
    return d;
}

void Cochain::toggle(const Cell& c) {
    auto it = terms_.find(c);
    if (it != terms_.end()) terms_.erase(it);
    else terms_.insert(c);
}

Cochain& Cochain::operator+=(const Cochain& o) {
    for (const auto& c : o.terms_) toggle(c);
    return *this;
}

namespace {

std::string seq_str(const std::vector<int>& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + "]";
}

std::string cells_str(const std::set<Cell>& terms, bool charged) {
    if (terms.empty()) return "0";
    std::string out;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        std::string t = seq_str(it->a);
        if (charged) {
            if (it->charge == 0) {
                auto nx = std::next(it);
                if (nx != terms.end() && nx->a == it->a) {
                    t += "^o";
                    it = nx;
                } else {
                    t += "^+";
                }
            } else {
                t += "^-";
            }
        }
        if (!out.empty()) out += " + ";
        out += t;
    }
    return out;
}

}  // namespace

std::string Cochain::str() const { return cells_str(terms_, variant_ == Variant::FNA); }

void Tensor::toggle(const TensorTerm& t) {
    auto it = terms.find(t);
    if (it != terms.end()) terms.erase(it);
    else terms.insert(t);
}

Tensor& Tensor::operator+=(const Tensor& o) {
    for (const auto& t : o.terms) toggle(t);
    return *this;
}

std::string Tensor::str() const {
    if (terms.empty()) return "0";
    bool charged = variant == Variant::FNA;
    auto one = [&](const Cell& c) {
        std::string s = seq_str(c.a);
        if (charged) s += c.charge ? "^-" : "^+";
        return s;
    };
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += " + ";
        out += one(t.first) + "⊗" + one(t.second);
    }
    return out;
}

Cochain parse_cochain(const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    struct Raw {
        std::vector<int> a;
        char charge;  // '+', '-', 'o' or 0
    };
    std::vector<Raw> raw;
    skip();
    if (pos < text.size() && text[pos] == '0') {
        ++pos;
        skip();
        if (pos != text.size()) throw ParseError("unexpected input after 0", pos);
        return Cochain(Variant::FNA, 0);
    }
    while (true) {
        skip();
        if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
        ++pos;
        Raw r{{}, 0};
        skip();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
        } else {
            while (true) {
                skip();
                std::size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (start == pos) throw ParseError("expected non-negative integer", pos);
                r.a.push_back(std::stoi(text.substr(start, pos - start)));
                skip();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < text.size() && text[pos] == ']') {
                    ++pos;
                    break;
                }
                throw ParseError("expected ',' or ']'", pos);
            }
        }
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-' && text[pos] != 'o'))
                throw ParseError("expected charge '+', '-' or 'o'", pos);
            r.charge = text[pos++];
        }
        raw.push_back(r);
        skip();
        if (pos == text.size()) break;
        if (text[pos] != '+') throw ParseError("expected '+' between terms", pos);
        ++pos;
    }
    bool charged = raw.front().charge != 0;
    std::size_t len = raw.front().a.size();
    Cochain c(charged ? Variant::FNA : Variant::FN, static_cast<int>(len) + 1);
    for (const auto& r : raw) {
        if ((r.charge != 0) != charged) throw ParseError("mixed charged and uncharged terms", 0);
        if (r.a.size() != len) throw ParseError("terms of different lengths", 0);
        if (!charged) c.toggle({r.a, 0});
        else if (r.charge == '+') c.add_plus(r.a);
        else if (r.charge == '-') c.add_minus(r.a);
        else c.add_neutral(r.a);
    }
    std::set<int> degs;
    for (const auto& t : c.terms()) degs.insert(t.degree());
    if (degs.size() > 1) throw ParseError("terms of different degrees", 0);
    return c;
}

std::vector<std::vector<int>> ell_blocks(const std::vector<int>& g, int ell) {
    std::vector<std::vector<int>> out(1);
    for (int x : g) {
        if (x <= ell) out.emplace_back();
        else out.back().push_back(x);
    }
    return out;
}

std::vector<int> join_blocks(const std::vector<std::vector<int>>& blocks, int sep) {
    std::vector<int> out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) out.push_back(sep);
        out.insert(out.end(), blocks[b].begin(), blocks[b].end());
    }
    return out;
}

namespace {

const std::vector<Shuffle>& cached_shuffles(int p, int q) {
    thread_local std::map<std::pair<int, int>, std::vector<Shuffle>> cache;
    auto key = std::make_pair(p, q);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, shuffles(p, q)).first;
    return it->second;
}

std::vector<int> interleave(const std::vector<std::vector<int>>& first,
                            const std::vector<std::vector<int>>& second, const Shuffle& s, int sep) {
    std::vector<std::vector<int>> merged;
    merged.reserve(s.pattern.size());
    std::size_t i = 0, j = 0;
    for (auto b : s.pattern) merged.push_back(b ? second[j++] : first[i++]);
    return join_blocks(merged, sep);
}

// Sign of the point permutation induced by a block shuffle: a block of length k
// is a cluster of k+1 points, and passing a cluster of size s over one of size t
// costs s*t transpositions.
int point_parity(const std::vector<std::vector<int>>& first, const std::vector<std::vector<int>>& second,
                 const Shuffle& s) {
    int odd_first_remaining = 0;
    for (const auto& b : first) odd_first_remaining += (b.size() + 1) & 1;
    int parity = 0;
    std::size_t i = 0, j = 0;
    for (auto b : s.pattern) {
        if (b) {
            if ((second[j++].size() + 1) & 1) parity ^= odd_first_remaining & 1;
        } else {
            if ((first[i++].size() + 1) & 1) --odd_first_remaining;
        }
    }
    return parity;
}

}  // namespace

std::map<Cell, long long> differential_component(const Cell& c, std::size_t i, bool charged) {
    std::map<Cell, long long> out;
    const auto& a = c.a;
    const int L = static_cast<int>(a.size());
    const int ai = a[i], v = ai + 1;
    int lo = static_cast<int>(i), hi = static_cast<int>(i);
    while (lo - 1 >= 0 && a[lo - 1] > ai) --lo;
    while (hi + 1 < L && a[hi + 1] > ai) ++hi;
    std::vector<int> left(a.begin() + lo, a.begin() + i), right(a.begin() + i + 1, a.begin() + hi + 1);
    auto lb = ell_blocks(left, v), rb = ell_blocks(right, v);
    for (const auto& s : cached_shuffles(static_cast<int>(lb.size()), static_cast<int>(rb.size()))) {
        Cell t;
        t.a.assign(a.begin(), a.begin() + lo);
        auto mid = interleave(lb, rb, s, v);
        t.a.insert(t.a.end(), mid.begin(), mid.end());
        t.a.insert(t.a.end(), a.begin() + hi + 1, a.end());
        t.charge = charged ? (c.charge ^ point_parity(lb, rb, s)) : 0;
        ++out[t];
    }
    return out;
}

std::map<Cell, long long> differential_counts(const Cell& c, bool charged) {
    std::map<Cell, long long> out;
    for (std::size_t i = 0; i < c.a.size(); ++i)
        for (const auto& [t, k] : differential_component(c, i, charged)) out[t] += k;
    return out;
}

Cochain differential(const Cochain& x) {
    bool charged = x.variant() == Variant::FNA;
    Cochain out(x.variant(), x.n());
    for (const auto& c : x.terms())
        for (const auto& [t, k] : differential_counts(c, charged))
            if (k & 1) out.toggle(t);
    return out;
}

Cochain differential_fna(const Cochain& x) {
    if (x.variant() != Variant::FNA) throw std::invalid_argument("differential_fna needs a charged cochain");
    return differential(x);
}

Cochain differential_fn(const Cochain& x) {
    if (x.variant() != Variant::FN) throw std::invalid_argument("differential_fn needs an uncharged cochain");
    return differential(x);
}

Cochain codifferential(const Cochain& x) {
    bool charged = x.variant() == Variant::FNA;
    Cochain out(x.variant(), x.n());
    for (const auto& c : x.terms()) {
        const auto& a = c.a;
        const int L = static_cast<int>(a.size());
        int top = 0;
        for (int e : a) top = std::max(top, e);
        for (int v = 1; v <= top; ++v) {
            for (int lo = 0; lo < L;) {
                if (a[lo] < v) {
                    ++lo;
                    continue;
                }
                int hi = lo;
                while (hi + 1 < L && a[hi + 1] >= v) ++hi;
                std::vector<int> run(a.begin() + lo, a.begin() + hi + 1);
                auto blocks = ell_blocks(run, v);
                const int B = static_cast<int>(blocks.size());
                if (B >= 2) {
                    for (uint64_t mask = 1; mask + 1 < (uint64_t{1} << B); ++mask) {
                        // bit set: block comes from the right group
                        std::vector<std::vector<int>> lb, rb;
                        int inv = 0, odd_right = 0;
                        for (int b = 0; b < B; ++b) {
                            bool odd_size = (blocks[b].size() + 1) & 1;
                            if (mask >> b & 1) {
                                rb.push_back(blocks[b]);
                                odd_right += odd_size;
                            } else {
                                lb.push_back(blocks[b]);
                                if (odd_size) inv += odd_right;
                            }
                        }
                        Cell t;
                        t.a.assign(a.begin(), a.begin() + lo);
                        auto l = join_blocks(lb, v);
                        t.a.insert(t.a.end(), l.begin(), l.end());
                        t.a.push_back(v - 1);
                        auto r = join_blocks(rb, v);
                        t.a.insert(t.a.end(), r.begin(), r.end());
                        t.a.insert(t.a.end(), a.begin() + hi + 1, a.end());
                        t.charge = charged ? (c.charge ^ (inv & 1)) : 0;
                        out.toggle(t);
                    }
                }
                lo = hi + 1;
            }
        }
    }
    return out;
}

Cochain transfer_chain(const Cochain& x) {
    Cochain out(Variant::FN, x.n());
    for (const auto& c : x.terms()) out.toggle({c.a, 0});
    return out;
}

Cochain restrict_chain(const Cochain& x) {
    Cochain out(Variant::FNA, x.n());
    for (const auto& c : x.terms()) out.add_neutral(c.a);
    return out;
}

Cochain conjugate_chain(const Cochain& x) {
    Cochain out(x.variant(), x.n());
    for (const auto& c : x.terms()) out.toggle({c.a, x.variant() == Variant::FNA ? 1 - c.charge : 0});
    return out;
}

Tensor coproduct_chain(const Cochain& x, int i, int j) {
    if (i < 1 || j < 1 || i + j != x.n()) throw std::invalid_argument("coproduct split must be i+j=n with i,j>=1");
    Tensor out;
    out.variant = x.variant();
    out.left_n = i;
    out.right_n = j;
    for (const auto& c : x.terms()) {
        if (c.a[i - 1] != 0) continue;
        std::vector<int> l(c.a.begin(), c.a.begin() + (i - 1)), r(c.a.begin() + i, c.a.end());
        if (x.variant() == Variant::FN) {
            out.toggle({{l, 0}, {r, 0}});
        } else {
            out.toggle({{l, 0}, {r, c.charge}});
            out.toggle({{l, 1}, {r, 1 - c.charge}});
        }
    }
    return out;
}

Tensor reduced_coproduct_chain(const Cochain& x) {
    Tensor out;
    out.variant = x.variant();
    for (int i = 1; i < x.n(); ++i) out += coproduct_chain(x, i, x.n() - i);
    return out;
}

Cochain transfer_product_chain(const Cochain& x, const Cochain& y) {
    if (x.variant() != y.variant()) throw std::invalid_argument("transfer product of mixed variants");
    Cochain out(x.variant(), x.n() + y.n());
    std::map<Cell, long long> acc;
    for (const auto& c : x.terms()) {
        auto xb = ell_blocks(c.a, 0);
        for (const auto& d : y.terms()) {
            auto yb = ell_blocks(d.a, 0);
            for (const auto& s : cached_shuffles(static_cast<int>(xb.size()), static_cast<int>(yb.size()))) {
                int sign = x.variant() == Variant::FNA ? point_parity(xb, yb, s) : 0;
                Cell t{interleave(xb, yb, s, 0), c.charge ^ d.charge ^ sign};
                ++acc[t];
            }
        }
    }
    for (const auto& [t, k] : acc)
        if (k & 1) out.toggle(t);
    return out;
}

bool av_vanishes(const Cochain& x) {
    for (const auto& c : x.terms()) {
        bool hit = false;
        for (std::size_t i = 0; i + 1 < c.a.size(); ++i)
            if (c.a[i] != 0 && c.a[i + 1] != 0) hit = true;
        if (!hit) return false;
    }
    return true;
}

bool pairing(const Cochain& x, const Cochain& chain) {
    bool acc = false;
    for (const auto& c : chain.terms())
        if (x.contains(c)) acc = !acc;
    return acc;
}

namespace named {

Cochain from_blocks(const std::vector<std::vector<int>>& blocks, int charge) {
    auto a = join_blocks(blocks, 0);
    int n = static_cast<int>(a.size()) + 1;
    if (charge < 0) {
        Cochain c(Variant::FN, n);
        c.toggle({a, 0});
        return c;
    }
    Cochain c(Variant::FNA, n);
    if (charge == 2) c.add_neutral(a);
    else c.toggle({a, charge});
    return c;
}

namespace {
void check(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("parameter out of range: ") + what);
}
std::vector<int> ones(int k) { return std::vector<int>(k, 1); }
}  // namespace

Cochain alpha(int ell, int m, int charge) {
    check(ell >= 1 && m >= 1, "alpha");
    return from_blocks(std::vector<std::vector<int>>(m, ones((1 << ell) - 1)), charge);
}

Cochain beta(int ell, int m, int i, int j) {
    check(ell >= 2 && m >= 1 && 1 <= i && i < j && j <= m + 1, "beta");
    std::vector<std::vector<int>> b(m + 1, ones((1 << ell) - 1));
    b[i - 1] = {2};
    b[j - 1] = ones((1 << ell) - 3);
    return from_blocks(b, 2);
}

Cochain beta_sum(int ell, int m) {
    check(ell >= 2 && m >= 1, "beta_sum");
    Cochain out(Variant::FNA, m << ell);
    for (int i = 1; i <= m + 1; ++i)
        for (int j = i + 1; j <= m + 1; ++j) out += beta(ell, m, i, j);
    return out;
}

Cochain gamma(int ell, int m, int charge) {
    check(ell >= 2 && m >= 1 && (charge == 0 || charge == 1), "gamma");
    return alpha(ell, m, charge) + beta_sum(ell, m);
}

Cochain sigma(int ell, int m, int p, int r) {
    check(ell >= 1 && m >= 1 && 1 <= p && p <= m && r >= 0, "sigma");
    std::vector<std::vector<int>> b(m, ones((1 << ell) - 1));
    b[p - 1] = ones(r);
    return from_blocks(b, 2);
}

Cochain tau(int ell, int m, int p, int q, int r, int s) {
    check(ell >= 1 && m >= 2 && 1 <= p && p < q && q <= m && r >= 0 && s >= 0, "tau");
    std::vector<std::vector<int>> b(m, ones((1 << ell) - 1));
    b[p - 1] = ones(r);
    b[q - 1] = ones(s);
    return from_blocks(b, 2);
}

Cochain alpha_two(int m, int charge) {
    check(m >= 1, "alpha_two");
    return from_blocks(std::vector<std::vector<int>>(m, {2, 2, 2}), charge);
}

Cochain alpha_one_half(int ell, int m, int charge) {
    check(ell >= 1 && m >= 1, "alpha_one_half");
    std::vector<int> blk;
    for (int k = 0; k < (1 << ell) - 1; ++k) blk.push_back(k % 2 == 0 ? 2 : 1);
    return from_blocks(std::vector<std::vector<int>>(m, blk), charge);
}

Cochain bump(const Cochain& x, int pos) {
    Cochain out(x.variant(), x.n());
    for (auto c : x.terms()) {
        check(pos >= 1 && pos <= static_cast<int>(c.a.size()), "bump position");
        c.a[pos - 1] += 1;
        out.toggle(c);
    }
    return out;
}

}  // namespace named

std::vector<Cell> enumerate_cells(int n, int d, Variant v) {
    std::vector<Cell> out;
    if (n < 1 || d < 0) return out;
    for (auto& a : compositions(d, n - 1)) {
        out.push_back({a, 0});
        if (v == Variant::FNA) out.push_back({a, 1});
    }
    return out;
}

BitVec CohomologyBasis::to_vector(const Cochain& x) const {
    BitVec v(cells_.size());
    for (const auto& c : x.terms()) {
        auto it = index_.find(c);
        if (it == index_.end()) throw std::invalid_argument("cochain term outside the (n, degree) cell");
        v.set(it->second);
    }
    return v;
}

Cochain CohomologyBasis::from_vector(const BitVec& v) const {
    Cochain c(variant, n);
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (v.get(i)) c.toggle(cells_[i]);
    return c;
}

bool CohomologyBasis::is_coboundary(const Cochain& x) const {
    if (x.empty()) return true;
    return image_->contains(to_vector(x));
}

BitVec CohomologyBasis::identify(const Cochain& x) const {
    if (x.empty()) return BitVec(reps.size());
    if (!differential(x).empty()) throw std::invalid_argument("identify_class: not a cocycle");
    BitVec v = to_vector(x);
    image_->reduce(v);
    auto c = reps_->express(v);
    if (!c) throw std::logic_error("cocycle outside span of representatives");
    return *c;
}

BitVec identify_class(const CohomologyBasis& basis, const Cochain& x) { return basis.identify(x); }

namespace {

BitMatrix differential_matrix(const std::vector<Cell>& src, const std::map<Cell, std::size_t>& tgt_index,
                              std::size_t tgt_size, bool charged) {
    BitMatrix m(src.size(), tgt_size);
    for (std::size_t r = 0; r < src.size(); ++r)
        for (const auto& [t, k] : differential_counts(src[r], charged))
            if (k & 1) m.flip(r, tgt_index.at(t));
    return m;
}

std::map<Cell, std::size_t> index_of(const std::vector<Cell>& cells) {
    std::map<Cell, std::size_t> idx;
    for (std::size_t i = 0; i < cells.size(); ++i) idx.emplace(cells[i], i);
    return idx;
}

}  // namespace

CohomologyBasis cohomology(int n, int d, Variant v, std::size_t cap_bits) {
    if (n < 1 || d < 0) throw std::invalid_argument("cohomology needs n >= 1, d >= 0");
    bool charged = v == Variant::FNA;
    CohomologyBasis h;
    h.n = n;
    h.degree = d;
    h.variant = v;
    h.cells_ = enumerate_cells(n, d, v);
    h.index_ = index_of(h.cells_);
    auto next = enumerate_cells(n, d + 1, v);
    auto prev = d > 0 ? enumerate_cells(n, d - 1, v) : std::vector<Cell>{};
    if (static_cast<double>(h.cells_.size()) * static_cast<double>(next.size()) > static_cast<double>(cap_bits) ||
        static_cast<double>(prev.size()) * static_cast<double>(h.cells_.size()) > static_cast<double>(cap_bits))
        throw ResourceError("cohomology cell (n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                            ") exceeds the dense matrix cap");

    auto D = differential_matrix(h.cells_, index_of(next), next.size(), charged);
    auto ker = kernel_basis(D.transpose());
    h.cocycle_dim = ker.size();

    h.image_ = std::make_shared<Echelon>(h.cells_.size());
    for (const auto& c : prev) {
        BitVec row(h.cells_.size());
        for (const auto& [t, k] : differential_counts(c, charged))
            if (k & 1) row.flip(h.index_.at(t));
        h.image_->insert(row);
    }
    h.coboundary_rank = h.image_->rank();

    h.reps_ = std::make_shared<Echelon>(h.cells_.size(), true);
    for (const auto& z : ker) {
        BitVec r = z;
        h.image_->reduce(r);
        if (!r.any() || h.reps_->contains(r)) continue;
        h.reps_->insert(r);
        h.reps.push_back(h.from_vector(z));
    }
    return h;
}

std::size_t differential_rank(int n, int d, Variant v) {
    if (d < 0) return 0;
    bool charged = v == Variant::FNA;
    auto src = enumerate_cells(n, d, v);
    auto tgt = enumerate_cells(n, d + 1, v);
    auto idx = index_of(tgt);
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(src.size());
    for (const auto& c : src) {
        std::vector<uint32_t> r;
        for (const auto& [t, k] : differential_counts(c, charged))
            if (k & 1) r.push_back(static_cast<uint32_t>(idx.at(t)));
        rows.push_back(std::move(r));
    }
    return sparse_rank(std::move(rows), tgt.size());
}

std::size_t cohomology_dim(int n, int d, Variant v) {
    std::size_t cells = enumerate_cells(n, d, v).size();
    return cells - differential_rank(n, d, v) - (d > 0 ? differential_rank(n, d - 1, v) : 0);
}

}  // namespace altcohom
