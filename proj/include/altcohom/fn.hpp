#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "altcohom/f2.hpp"

namespace altcohom {

enum class Variant { FN, FNA };

// Fox-Neuwirth cell: n-1 entries for n points. charge 0 is +, 1 is -; always 0 in FN.
struct Cell {
    std::vector<int> a;
    int charge = 0;
    auto operator<=>(const Cell&) const = default;
    int degree() const;
    int points() const { return static_cast<int>(a.size()) + 1; }
};

class Cochain {
public:
    Cochain() = default;
    Cochain(Variant v, int n) : variant_(v), n_(n) {}

    Variant variant() const { return variant_; }
    int n() const { return n_; }
    const std::set<Cell>& terms() const& { return terms_; }
    std::set<Cell> terms() && { return std::move(terms_); }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // -1 when zero
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->degree(); }
    bool contains(const Cell& c) const { return terms_.count(c) > 0; }

    void toggle(const Cell& c);
    void add_plus(const std::vector<int>& a) { toggle({a, 0}); }
    void add_minus(const std::vector<int>& a) { toggle({a, 1}); }
    void add_neutral(const std::vector<int>& a) {
        toggle({a, 0});
        toggle({a, 1});
    }
    Cochain& operator+=(const Cochain& o);
    Cochain operator+(const Cochain& o) const {
        Cochain r = *this;
        r += o;
        return r;
    }
    bool operator==(const Cochain& o) const {
        return variant_ == o.variant_ && n_ == o.n_ && terms_ == o.terms_;
    }

    std::string str() const;

private:
    Variant variant_ = Variant::FNA;
    int n_ = 0;
    std::set<Cell> terms_;
};

using TensorTerm = std::pair<Cell, Cell>;

struct Tensor {
    Variant variant = Variant::FNA;
    int left_n = 0, right_n = 0;
    std::set<TensorTerm> terms;
    void toggle(const TensorTerm& t);
    Tensor& operator+=(const Tensor& o);
    bool operator==(const Tensor& o) const { return terms == o.terms; }
    bool empty() const { return terms.empty(); }
    std::string str() const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "[1,1,1]^+ + [2,0,1]^o"; no suffix means an uncharged FN term
Cochain parse_cochain(const std::string& text);

std::vector<std::vector<int>> ell_blocks(const std::vector<int>& g, int ell);
std::vector<int> join_blocks(const std::vector<std::vector<int>>& blocks, int sep);

// delta_i with integer multiplicities (charge carried through when `charged`)
std::map<Cell, long long> differential_component(const Cell& c, std::size_t i, bool charged);
std::map<Cell, long long> differential_counts(const Cell& c, bool charged);
Cochain differential_fna(const Cochain& x);
Cochain differential_fn(const Cochain& x);
Cochain differential(const Cochain& x);
// transpose of the differential, computed locally on the target
Cochain codifferential(const Cochain& x);

Cochain transfer_chain(const Cochain& x);
Cochain restrict_chain(const Cochain& x);
Cochain conjugate_chain(const Cochain& x);

// split into i points on the left, j on the right
Tensor coproduct_chain(const Cochain& x, int i, int j);
// sum over all splits with i, j > 0
Tensor reduced_coproduct_chain(const Cochain& x);
Cochain transfer_product_chain(const Cochain& x, const Cochain& y);

bool av_vanishes(const Cochain& x);
// GF(2) pairing of cochain with chain
bool pairing(const Cochain& x, const Cochain& chain);

namespace named {
Cochain from_blocks(const std::vector<std::vector<int>>& blocks, int charge);  // charge 0,1 or 2 for ^o
Cochain alpha(int ell, int m, int charge);
Cochain beta(int ell, int m, int i, int j);
Cochain beta_sum(int ell, int m);
Cochain gamma(int ell, int m, int charge);
Cochain sigma(int ell, int m, int p, int r);
Cochain tau(int ell, int m, int p, int q, int r, int s);
// m blocks of [2,2,2]; charge 0,1,2 or -1 for the plain FN cochain
Cochain alpha_two(int m, int charge);
// m blocks [2,1,2,...,1,2] of length 2^ell-1
Cochain alpha_one_half(int ell, int m, int charge);
// +1 to the entry at 1-based position pos of every term
Cochain bump(const Cochain& x, int pos);
}  // namespace named

std::vector<Cell> enumerate_cells(int n, int d, Variant v);

class CohomologyBasis {
public:
    int n = 0, degree = 0;
    Variant variant = Variant::FNA;
    std::vector<Cochain> reps;
    std::size_t cocycle_dim = 0;
    std::size_t coboundary_rank = 0;

    std::size_t dim() const { return reps.size(); }
    // coordinates of [x] in reps; throws if x is not a cocycle
    BitVec identify(const Cochain& x) const;
    bool is_coboundary(const Cochain& x) const;
    const std::vector<Cell>& cells() const { return cells_; }
    BitVec to_vector(const Cochain& x) const;
    Cochain from_vector(const BitVec& v) const;

private:
    friend CohomologyBasis cohomology(int, int, Variant, std::size_t);
    std::vector<Cell> cells_;
    std::map<Cell, std::size_t> index_;
    std::shared_ptr<Echelon> image_;
    std::shared_ptr<Echelon> reps_;  // reduced modulo the image, tracked
};

inline constexpr std::size_t kDefaultMatrixCap = std::size_t{1} << 32;  // bits

CohomologyBasis cohomology(int n, int d, Variant v, std::size_t cap_bits = kDefaultMatrixCap);
// dimension only, via sparse elimination; handles cells too large for the dense route
std::size_t cohomology_dim(int n, int d, Variant v);
std::size_t differential_rank(int n, int d, Variant v);

BitVec identify_class(const CohomologyBasis& basis, const Cochain& x);

}  // namespace altcohom
